#pragma once

#include <vector>

#include "bks/proof.hpp"
#include "bks/term.hpp"

namespace bks::detail {

// A proof together with its conclusion, tracked during construction so that
// gluing mistakes surface immediately instead of at the final kernel check.
// Combinators throw std::logic_error on a conclusion mismatch; that always
// indicates a bug in a proof producer, never bad user input.
struct Eq {
    Proof pf;
    Term l, r;
};

Eq eq_refl(const Term& t);
Eq eq_symm(Eq e);
Eq eq_trans(Eq a, Eq b);
Eq eq_trans(Eq a, Eq b, Eq c);
Eq eq_trans(Eq a, Eq b, Eq c, Eq d);
Eq eq_plus(Eq a, Eq b);
Eq eq_mult(Eq a, Eq b);
Eq eq_star(Eq a, Eq b);

Eq ax_b1(const Term& x, const Term& y);
Eq ax_b2(const Term& x, const Term& y, const Term& z);
Eq ax_b3(const Term& x);
Eq ax_b4(const Term& x, const Term& y, const Term& z);
Eq ax_b5(const Term& x, const Term& y, const Term& z);
Eq ax_b6(const Term& x);
Eq ax_b7(const Term& x);
Eq ax_bks1(const Term& x, const Term& y);
Eq ax_bks2(const Term& x, const Term& y, const Term& z);

// Premise must conclude (x, y.x + z); yields (x, y*z).
Eq ax_rsp(Eq premise);

// ---------------------------------------------------------------------------
// Sum calculus. A sum term is viewed as a +-tree over "atoms" (its non-plus
// subterms). The canonical form of a sum is 0 when every atom is 0, and
// otherwise the left-nested sum of its distinct non-zero atoms in term order.
// All functions return proofs built from B1/B2/B3/B6 plus congruence.
// ---------------------------------------------------------------------------

// The distinct non-zero atoms of a sum, sorted; empty means the sum is 0.
std::vector<Term> sum_atoms(const Term& t);

// Canonical form of the sum `t`.
Term sum_canon(const Term& t);

// Proof of (t, sum_canon(t)).
Eq sum_normalize(const Term& t);

// Proof of (x, y); requires sum_canon(x) == sum_canon(y), i.e. equal atom
// sets after deduplication.
Eq sum_eq(const Term& x, const Term& y);

// Proof of (s . ctx, d) where d mirrors s with every atom pushed into the
// context: 0 vanishes by B7, x.y reassociates by B5, x*y folds by BKS2 and
// other atoms pick up ". ctx" unchanged.
Eq distribute(const Term& s, const Term& ctx);

} // namespace bks::detail
