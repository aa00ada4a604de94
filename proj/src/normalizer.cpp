#include "bks/normalizer.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "bks/bisim.hpp"
#include "bks/semantics.hpp"

namespace bks {

namespace {

Term mult(const Term& a, const Term& b) { return Term::mult(a, b); }
Term star0(const Term& a) { return Term::star(a, Term::zero()); }

// The nested induction of the collapse step works lexicographically on
// (star depth, term size) of the head term; every recursive call must
// strictly decrease it. A violation is an implementation bug.
struct Measure {
    int depth;
    std::size_t size;

    static Measure of(const Term& t) { return {star_depth(t), t.size()}; }
    bool below(const Measure& m) const {
        return depth < m.depth || (depth == m.depth && size < m.size);
    }
};

NormalizationOutcome congr_mult_rec(const Term& p, const Term& q, const Term& r,
                                    std::optional<Measure> parent) {
    Measure here = Measure::of(p);
    if (parent && !here.below(*parent))
        throw std::logic_error("collapse step: termination measure did not decrease");

    switch (p.kind()) {
    case TermKind::Zero:
        return NormalizationOutcome::multiplied(Term::zero());
    case TermKind::Act:
        // One action in front: fold q into the context when q.r ~ r,
        // otherwise keep it.
        if (bisimilar(mult(q, r), r))
            return NormalizationOutcome::multiplied(p);
        return NormalizationOutcome::multiplied(mult(p, q));
    case TermKind::Plus: {
        NormalizationOutcome l = congr_mult_rec(p.left(), q, r, here);
        if (l.kind == NormalizationOutcome::Kind::Collapsed) return l;
        NormalizationOutcome rr = congr_mult_rec(p.right(), q, r, here);
        if (rr.kind == NormalizationOutcome::Kind::Collapsed) return rr;
        return NormalizationOutcome::multiplied(Term::plus(l.value, rr.value));
    }
    case TermKind::Mult: {
        NormalizationOutcome inner = congr_mult_rec(p.right(), q, r, here);
        if (inner.kind == NormalizationOutcome::Kind::Collapsed) return inner;
        return congr_mult_rec(p.left(), inner.value, r, here);
    }
    case TermKind::Star: {
        const Term& p1 = p.left();
        NormalizationOutcome inner = congr_mult_rec(p.right(), q, r, here);
        if (inner.kind == NormalizationOutcome::Kind::Collapsed) return inner;
        const Term& s2 = inner.value;
        Term loop = Term::star(p1, s2); // p.q.r ~ (p1*s2).r

        // Collapse test: the context already absorbs the whole loop.
        if (bisimilar(mult(loop, r), r))
            return NormalizationOutcome::collapsed(star0(Term::plus(p1, s2)));

        // Loop detection: some strict reduct of the body re-enters r.
        for (const Term& t : reachable_plus(p1)) {
            if (!bisimilar(mult(t, mult(loop, r)), r)) continue;
            // r ~ t . (p1 + s2.t)*0
            Term w = star0(Term::plus(p1, mult(s2, t)));
            for (const Term& u : reachable_plus(s2)) {
                if (!bisimilar(mult(mult(u, t), w), w)) continue;
                // Secondary collapse: r ~ (t.u)*0, and the whole problem
                // restarts one star level down.
                Term tu0 = star0(mult(t, u));
                NormalizationOutcome deep = congr_mult_rec(t, u, tu0, here);
                if (deep.kind == NormalizationOutcome::Kind::Multiplied)
                    return NormalizationOutcome::collapsed(star0(deep.value));
                return deep;
            }
            return NormalizationOutcome::collapsed(mult(t, w));
        }
        return NormalizationOutcome::multiplied(loop);
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

bool congr(const Term& p, const Term& q) {
    for (const Term& t : reachable_plus(p))
        if (bisimilar(Term::mult(t, q), q)) return false;
    return true;
}

bool is_nfmult(const Term& p, const Term& q) {
    switch (p.kind()) {
    case TermKind::Zero:
    case TermKind::Act:
        return true;
    case TermKind::Plus:
        return is_nfmult(p.left(), q) && is_nfmult(p.right(), q);
    case TermKind::Mult:
        return is_nfmult(p.left(), Term::mult(p.right(), q)) && is_nfmult(p.right(), q);
    case TermKind::Star: {
        Term ctx = Term::mult(p, q);
        return is_nfmult(p.left(), ctx) && is_nfmult(p.right(), q) && congr(p.left(), ctx);
    }
    }
    return false;
}

bool is_nf(const Term& p) {
    switch (p.kind()) {
    case TermKind::Zero:
    case TermKind::Act:
        return true;
    case TermKind::Plus:
        return is_nf(p.left()) && is_nf(p.right());
    case TermKind::Mult:
        return is_nfmult(p.left(), p.right()) && is_nf(p.right());
    case TermKind::Star:
        return is_nfmult(p.left(), p) && is_nf(p.right()) && congr(p.left(), p);
    }
    return false;
}

NormalizationOutcome congr_mult_step(const Term& p, const Term& q, const Term& r) {
    return congr_mult_rec(p, q, r, std::nullopt);
}

NormalizationOutcome congr_ex_step(const Term& p, const Term& r) {
    switch (p.kind()) {
    case TermKind::Zero:
    case TermKind::Act:
        // Atoms have no strict reducts, so they satisfy congr outright.
        return NormalizationOutcome::multiplied(p);
    case TermKind::Plus: {
        NormalizationOutcome l = congr_ex_step(p.left(), r);
        if (l.kind == NormalizationOutcome::Kind::Collapsed) return l;
        NormalizationOutcome rr = congr_ex_step(p.right(), r);
        if (rr.kind == NormalizationOutcome::Kind::Collapsed) return rr;
        return NormalizationOutcome::multiplied(Term::plus(l.value, rr.value));
    }
    case TermKind::Mult: {
        NormalizationOutcome inner = congr_ex_step(p.right(), r);
        if (inner.kind == NormalizationOutcome::Kind::Collapsed) return inner;
        return congr_mult_step(p.left(), inner.value, r);
    }
    case TermKind::Star: {
        const Term& p1 = p.left();
        NormalizationOutcome inner = congr_ex_step(p.right(), r);
        if (inner.kind == NormalizationOutcome::Kind::Collapsed) return inner;
        const Term& s2 = inner.value;
        Term loop = Term::star(p1, s2); // p.r ~ (p1*s2).r

        if (bisimilar(Term::mult(loop, r), r))
            return NormalizationOutcome::collapsed(star0(Term::plus(p1, s2)));

        for (const Term& t : reachable_plus(p1)) {
            if (!bisimilar(Term::mult(t, Term::mult(loop, r)), r)) continue;
            Term w = star0(Term::plus(p1, Term::mult(s2, t)));
            for (const Term& u : reachable_plus(s2)) {
                if (!bisimilar(Term::mult(Term::mult(u, t), w), w)) continue;
                Term tu0 = star0(Term::mult(t, u));
                NormalizationOutcome deep = congr_mult_step(t, u, tu0);
                if (deep.kind == NormalizationOutcome::Kind::Multiplied)
                    return NormalizationOutcome::collapsed(star0(deep.value));
                return deep;
            }
            return NormalizationOutcome::collapsed(Term::mult(t, w));
        }
        return NormalizationOutcome::multiplied(loop);
    }
    }
    throw std::logic_error("unreachable");
}

Term normalize_mult(const Term& p, const Term& r) {
    switch (p.kind()) {
    case TermKind::Zero:
    case TermKind::Act:
        return p;
    case TermKind::Plus:
        return Term::plus(normalize_mult(p.left(), r), normalize_mult(p.right(), r));
    case TermKind::Mult: {
        Term q2 = normalize_mult(p.right(), r);
        Term q1 = normalize_mult(p.left(), Term::mult(q2, r));
        return Term::mult(std::move(q1), std::move(q2));
    }
    case TermKind::Star: {
        Term q2 = normalize_mult(p.right(), r);
        // Normalize the body against the star context it will live under;
        // replacing the body keeps the star bisimilar because the loop
        // equation pins it down.
        Term ctx = Term::mult(Term::star(p.left(), q2), r);
        Term q1 = normalize_mult(p.left(), ctx);
        NormalizationOutcome oc = congr_ex_step(q1, Term::mult(Term::star(q1, q2), r));
        if (oc.kind == NormalizationOutcome::Kind::Multiplied)
            return Term::star(oc.value, std::move(q2));
        return Term::mult(oc.value, Term::zero());
    }
    }
    throw std::logic_error("unreachable");
}

Term normalize(const Term& p) {
    switch (p.kind()) {
    case TermKind::Zero:
    case TermKind::Act:
        return p;
    case TermKind::Plus:
        return Term::plus(normalize(p.left()), normalize(p.right()));
    case TermKind::Mult: {
        Term q2 = normalize(p.right());
        Term q1 = normalize_mult(p.left(), q2);
        return Term::mult(std::move(q1), std::move(q2));
    }
    case TermKind::Star: {
        Term q2 = normalize(p.right());
        Term q1 = normalize_mult(p.left(), Term::star(p.left(), q2));
        NormalizationOutcome oc = congr_ex_step(q1, Term::star(q1, q2));
        if (oc.kind == NormalizationOutcome::Kind::Multiplied)
            return Term::star(oc.value, std::move(q2));
        return Term::mult(oc.value, Term::zero());
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace bks
