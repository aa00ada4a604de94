#include "eq_builder.hpp"

#include <algorithm>
#include <stdexcept>

namespace bks::detail {

namespace {

[[noreturn]] void glue_error(const char* where, const Term& a, const Term& b) {
    throw std::logic_error(std::string("proof glue mismatch in ") + where + ": '" +
                           render(a) + "' vs '" + render(b) + "'");
}

} // namespace

Eq eq_refl(const Term& t) { return {Proof::refl(t), t, t}; }

Eq eq_symm(Eq e) {
    if (e.pf.rule() == Rule::Refl) return e;
    if (e.pf.rule() == Rule::Symm) {
        Eq inner{e.pf.premises()[0], e.r, e.l};
        return inner;
    }
    return {Proof::symm(std::move(e.pf)), e.r, e.l};
}

Eq eq_trans(Eq a, Eq b) {
    if (a.r != b.l) glue_error("trans", a.r, b.l);
    // a refl on either side carries no content
    if (a.pf.rule() == Rule::Refl) return b;
    if (b.pf.rule() == Rule::Refl) return a;
    return {Proof::trans(std::move(a.pf), std::move(b.pf)), a.l, b.r};
}

Eq eq_trans(Eq a, Eq b, Eq c) { return eq_trans(eq_trans(std::move(a), std::move(b)), std::move(c)); }

Eq eq_trans(Eq a, Eq b, Eq c, Eq d) {
    return eq_trans(eq_trans(std::move(a), std::move(b), std::move(c)), std::move(d));
}

Eq eq_plus(Eq a, Eq b) {
    Term l = Term::plus(a.l, b.l);
    if (a.pf.rule() == Rule::Refl && b.pf.rule() == Rule::Refl) return eq_refl(l);
    Term r = Term::plus(a.r, b.r);
    return {Proof::comp_plus(std::move(a.pf), std::move(b.pf)), std::move(l), std::move(r)};
}

Eq eq_mult(Eq a, Eq b) {
    Term l = Term::mult(a.l, b.l);
    if (a.pf.rule() == Rule::Refl && b.pf.rule() == Rule::Refl) return eq_refl(l);
    Term r = Term::mult(a.r, b.r);
    return {Proof::comp_mult(std::move(a.pf), std::move(b.pf)), std::move(l), std::move(r)};
}

Eq eq_star(Eq a, Eq b) {
    Term l = Term::star(a.l, b.l);
    if (a.pf.rule() == Rule::Refl && b.pf.rule() == Rule::Refl) return eq_refl(l);
    Term r = Term::star(a.r, b.r);
    return {Proof::comp_star(std::move(a.pf), std::move(b.pf)), std::move(l), std::move(r)};
}

Eq ax_b1(const Term& x, const Term& y) {
    return {Proof::b1(x, y), Term::plus(x, y), Term::plus(y, x)};
}
Eq ax_b2(const Term& x, const Term& y, const Term& z) {
    return {Proof::b2(x, y, z), Term::plus(Term::plus(x, y), z), Term::plus(x, Term::plus(y, z))};
}
Eq ax_b3(const Term& x) { return {Proof::b3(x), Term::plus(x, x), x}; }
Eq ax_b4(const Term& x, const Term& y, const Term& z) {
    return {Proof::b4(x, y, z), Term::mult(Term::plus(x, y), z),
            Term::plus(Term::mult(x, z), Term::mult(y, z))};
}
Eq ax_b5(const Term& x, const Term& y, const Term& z) {
    return {Proof::b5(x, y, z), Term::mult(Term::mult(x, y), z),
            Term::mult(x, Term::mult(y, z))};
}
Eq ax_b6(const Term& x) { return {Proof::b6(x), Term::plus(x, Term::zero()), x}; }
Eq ax_b7(const Term& x) { return {Proof::b7(x), Term::mult(Term::zero(), x), Term::zero()}; }
Eq ax_bks1(const Term& x, const Term& y) {
    return {Proof::bks1(x, y), Term::plus(Term::mult(x, Term::star(x, y)), y), Term::star(x, y)};
}
Eq ax_bks2(const Term& x, const Term& y, const Term& z) {
    return {Proof::bks2(x, y, z), Term::mult(Term::star(x, y), z),
            Term::star(x, Term::mult(y, z))};
}

Eq ax_rsp(Eq premise) {
    bool ok = premise.r.is(TermKind::Plus) && premise.r.left().is(TermKind::Mult) &&
              premise.r.left().right() == premise.l;
    if (!ok) glue_error("rsp", premise.l, premise.r);
    Term star = Term::star(premise.r.left().left(), premise.r.right());
    return {Proof::rsp(std::move(premise.pf)), premise.l, std::move(star)};
}

// ---------------------------------------------------------------------------
// Sum calculus
// ---------------------------------------------------------------------------

namespace {

void collect_atoms(const Term& t, std::vector<Term>& out) {
    if (t.is(TermKind::Plus)) {
        collect_atoms(t.left(), out);
        collect_atoms(t.right(), out);
    } else if (!t.is(TermKind::Zero)) {
        out.push_back(t);
    }
}

// Canonical sums are 0 or left-nested sorted sums of distinct non-zero
// atoms; the maximal atom sits at the top-right.
Term canon_of_atoms(const std::vector<Term>& atoms) {
    if (atoms.empty()) return Term::zero();
    Term t = atoms.front();
    for (std::size_t i = 1; i < atoms.size(); ++i) t = Term::plus(t, atoms[i]);
    return t;
}

// Proof of (s + a, ins) where s is canonical, a is an atom or 0, and ins is
// the canonical sum with a inserted.
Eq insert_atom(const Term& a, const Term& s) {
    if (a.is(TermKind::Zero)) return ax_b6(s);
    if (s.is(TermKind::Zero)) return eq_trans(ax_b1(s, a), ax_b6(a));
    if (!s.is(TermKind::Plus)) {
        switch (term_order(a, s)) {
        case Ordering::EQ: return ax_b3(s);
        case Ordering::LT: return ax_b1(s, a);
        case Ordering::GT: return eq_refl(Term::plus(s, a));
        }
    }
    const Term& rest = s.left();
    const Term& top = s.right();
    switch (term_order(a, top)) {
    case Ordering::EQ:
        return eq_trans(ax_b2(rest, top, a), eq_plus(eq_refl(rest), ax_b3(top)));
    case Ordering::GT:
        return eq_refl(Term::plus(s, a));
    case Ordering::LT:
        return eq_trans(ax_b2(rest, top, a),
                        eq_plus(eq_refl(rest), ax_b1(top, a)),
                        eq_symm(ax_b2(rest, a, top)),
                        eq_plus(insert_atom(a, rest), eq_refl(top)));
    }
    throw std::logic_error("unreachable");
}

// Proof of (c1 + c2, merged) for canonical c1, c2.
Eq merge_canon(const Term& c1, const Term& c2) {
    if (c2.is(TermKind::Zero)) return ax_b6(c1);
    if (c1.is(TermKind::Zero)) return eq_trans(ax_b1(c1, c2), ax_b6(c2));
    if (!c2.is(TermKind::Plus)) return insert_atom(c2, c1);
    const Term& rest = c2.left();
    const Term& top = c2.right();
    Eq pulled = eq_symm(ax_b2(c1, rest, top)); // (c1+(rest+top), (c1+rest)+top)
    Eq merged = merge_canon(c1, rest);
    Eq step = eq_plus(merged, eq_refl(top));
    Eq ins = insert_atom(top, step.r.left());
    return eq_trans(std::move(pulled), std::move(step), std::move(ins));
}

} // namespace

std::vector<Term> sum_atoms(const Term& t) {
    std::vector<Term> atoms;
    collect_atoms(t, atoms);
    std::sort(atoms.begin(), atoms.end(), term_less);
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

Term sum_canon(const Term& t) { return canon_of_atoms(sum_atoms(t)); }

Eq sum_normalize(const Term& t) {
    if (!t.is(TermKind::Plus)) return eq_refl(t);
    Eq l = sum_normalize(t.left());
    Eq r = sum_normalize(t.right());
    Eq both = eq_plus(std::move(l), std::move(r));
    Eq merged = merge_canon(both.r.left(), both.r.right());
    return eq_trans(std::move(both), std::move(merged));
}

Eq sum_eq(const Term& x, const Term& y) {
    Eq nx = sum_normalize(x);
    Eq ny = sum_normalize(y);
    if (nx.r != ny.r) glue_error("sum_eq (atom sets differ)", x, y);
    return eq_trans(std::move(nx), eq_symm(std::move(ny)));
}

Eq distribute(const Term& s, const Term& ctx) {
    switch (s.kind()) {
    case TermKind::Zero:
        return ax_b7(ctx);
    case TermKind::Plus: {
        Eq split = ax_b4(s.left(), s.right(), ctx);
        Eq rec = eq_plus(distribute(s.left(), ctx), distribute(s.right(), ctx));
        return eq_trans(std::move(split), std::move(rec));
    }
    case TermKind::Mult:
        return ax_b5(s.left(), s.right(), ctx);
    case TermKind::Star:
        return ax_bks2(s.left(), s.right(), ctx);
    default:
        return eq_refl(Term::mult(s, ctx));
    }
}

} // namespace bks::detail
