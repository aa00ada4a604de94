#include "bks/summation.hpp"

#include <algorithm>

#include "eq_builder.hpp"

namespace bks {

using detail::Eq;

SummandSet SummandSet::from(std::vector<Step> entries) {
    std::sort(entries.begin(), entries.end(), step_less);
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    SummandSet s;
    s.entries_ = std::move(entries);
    return s;
}

bool SummandSet::contains(const Step& s) const {
    return std::binary_search(entries_.begin(), entries_.end(), s, step_less);
}

SummandSet SummandSet::union_with(const SummandSet& other) const {
    std::vector<Step> merged = entries_;
    merged.insert(merged.end(), other.entries_.begin(), other.entries_.end());
    return from(std::move(merged));
}

Term summand_term(const Step& s) {
    Term a = Term::act(s.label);
    return s.target.is_tick() ? a : Term::mult(std::move(a), s.target.term());
}

Term sigma(const SummandSet& n) {
    Term t = Term::zero();
    const auto& es = n.entries();
    for (auto it = es.rbegin(); it != es.rend(); ++it)
        t = Term::plus(std::move(t), summand_term(*it));
    return t;
}

// ---------------------------------------------------------------------------
// Expansion
// ---------------------------------------------------------------------------

namespace {

struct EqExpansion {
    SummandSet summands;
    Eq eq; // (p, sigma(summands))
};

// Projects each summand target into a right context: tick goes to the
// context itself, a term target gets the context appended.
SummandSet project(const SummandSet& n, const Term& ctx) {
    std::vector<Step> out;
    out.reserve(n.size());
    for (const Step& s : n.entries()) {
        if (s.target.is_tick())
            out.push_back({s.label, ctx});
        else
            out.push_back({s.label, Term::mult(s.target.term(), ctx)});
    }
    return SummandSet::from(std::move(out));
}

EqExpansion expand_eq(const Term& p) {
    switch (p.kind()) {
    case TermKind::Zero:
        return {SummandSet(), detail::eq_refl(p)};
    case TermKind::Act: {
        SummandSet n = SummandSet::from({{p.action(), Vertex::tick()}});
        // a = a+0 = 0+a
        Eq e = eq_trans(eq_symm(detail::ax_b6(p)), detail::ax_b1(p, Term::zero()));
        return {std::move(n), std::move(e)};
    }
    case TermKind::Plus: {
        EqExpansion l = expand_eq(p.left());
        EqExpansion r = expand_eq(p.right());
        SummandSet n = l.summands.union_with(r.summands);
        Eq both = eq_plus(std::move(l.eq), std::move(r.eq));
        Eq rearrange = detail::sum_eq(both.r, sigma(n));
        return {std::move(n), eq_trans(std::move(both), std::move(rearrange))};
    }
    case TermKind::Mult: {
        EqExpansion l = expand_eq(p.left());
        SummandSet n = project(l.summands, p.right());
        Eq lifted = eq_mult(std::move(l.eq), detail::eq_refl(p.right()));
        Eq dist = detail::distribute(lifted.r.left(), p.right());
        Eq rearrange = detail::sum_eq(dist.r, sigma(n));
        return {std::move(n),
                eq_trans(std::move(lifted), std::move(dist), std::move(rearrange))};
    }
    case TermKind::Star: {
        // p1*p2 unfolds by BKS1; the loop entries are p1's summands projected
        // onto the star itself, joined with p2's summands.
        EqExpansion l = expand_eq(p.left());
        EqExpansion r = expand_eq(p.right());
        SummandSet looped = project(l.summands, p);
        SummandSet n = looped.union_with(r.summands);
        Eq unfold = eq_symm(detail::ax_bks1(p.left(), p.right()));
        Eq lifted = eq_mult(std::move(l.eq), detail::eq_refl(p));
        Eq dist = detail::distribute(lifted.r.left(), p);
        Eq both = eq_plus(eq_trans(std::move(lifted), std::move(dist)), std::move(r.eq));
        Eq rearrange = detail::sum_eq(both.r, sigma(n));
        return {std::move(n),
                eq_trans(std::move(unfold), std::move(both), std::move(rearrange))};
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

Expansion expand(const Term& p) {
    EqExpansion e = expand_eq(p);
    // The expansion law: the summand set is exactly the successor set.
    SummandSet succ = SummandSet::from(successors(p));
    if (!(e.summands == succ))
        throw std::logic_error("expansion does not match the successor set of " + render(p));
    return {std::move(e.summands), std::move(e.eq.pf)};
}

Proof prove_sigma_union(const SummandSet& n1, const SummandSet& n2) {
    Term lhs = sigma(n1.union_with(n2));
    Term rhs = Term::plus(sigma(n1), sigma(n2));
    return detail::sum_eq(lhs, rhs).pf;
}

// ---------------------------------------------------------------------------
// Step matching
// ---------------------------------------------------------------------------

namespace {

// Rebuilds sigma(n) with each summand body rewritten through its witness
// proof; yields (sigma(n), mirrored sum over the partner contributions).
Eq rewrite_summands(const SummandSet& n, const std::vector<Step>& partners,
                    const std::vector<MatchEntry>& matching) {
    Eq acc = detail::eq_refl(Term::zero());
    const auto& es = n.entries();
    for (std::size_t idx = es.size(); idx-- > 0;) {
        const Step& s = es[idx];
        const TeqWitness& w = matching[idx].witness;
        const Step& partner = partners[matching[idx].partner];
        Eq atom = w.is_tick()
                      ? detail::eq_refl(summand_term(s))
                      : eq_mult(detail::eq_refl(Term::act(s.label)),
                                Eq{w.proof(), s.target.term(), partner.target.term()});
        acc = eq_plus(std::move(acc), std::move(atom));
    }
    return acc;
}

void check_matching(const char* side, const std::vector<Step>& from,
                    const std::vector<Step>& to, const std::vector<MatchEntry>& matching) {
    if (matching.size() != from.size())
        throw IncompleteMatching(std::string(side) +
                                 " matching does not cover every step: expected " +
                                 std::to_string(from.size()) + " entries, got " +
                                 std::to_string(matching.size()));
    for (std::size_t i = 0; i < from.size(); ++i) {
        const MatchEntry& m = matching[i];
        if (m.partner >= to.size())
            throw IncompleteMatching(std::string(side) + " matching: partner index " +
                                     std::to_string(m.partner) + " out of range");
        const Step& src = from[i];
        const Step& dst = to[m.partner];
        if (src.label != dst.label)
            throw IncompleteMatching(std::string(side) + " matching: labels differ ('" +
                                     src.label.name + "' vs '" + dst.label.name + "')");
        if (m.witness.is_tick()) {
            if (!src.target.is_tick() || !dst.target.is_tick())
                throw BadWitness("tick witness on a non-tick pair");
        } else {
            if (src.target.is_tick() || dst.target.is_tick())
                throw BadWitness("term witness on a tick target");
            if (m.witness.lhs() != src.target.term() || m.witness.rhs() != dst.target.term())
                throw BadWitness("witness endpoints do not name the matched targets");
            Conclusion c = conclusion(m.witness.proof());
            if (c.lhs != m.witness.lhs() || c.rhs != m.witness.rhs())
                throw BadWitness("witness proof concludes (" + render(c.lhs) + ", " +
                                 render(c.rhs) + ") instead of the matched targets");
        }
    }
}

} // namespace

Proof prove_by_matching(const Term& p, const Term& q,
                        const std::vector<MatchEntry>& forward,
                        const std::vector<MatchEntry>& backward) {
    Expansion ep = expand(p);
    Expansion eq_q = expand(q);
    const std::vector<Step>& sp = ep.summands.entries();
    const std::vector<Step>& sq = eq_q.summands.entries();

    check_matching("forward", sp, sq, forward);
    check_matching("backward", sq, sp, backward);

    Term sm = sigma(ep.summands);
    Term sn = sigma(eq_q.summands);
    Eq pm{ep.proof, p, sm};
    Eq qn{eq_q.proof, q, sn};

    // sigma(M) = sigma(M) + sigma(N): rewrite N's bodies into their M
    // partners, then absorb the duplicates.
    Eq rew_n = rewrite_summands(eq_q.summands, sp, backward);
    Eq absorb_n = detail::sum_eq(Term::plus(sm, rew_n.r), sm);
    Eq m_eats_n =
        eq_trans(eq_plus(detail::eq_refl(sm), std::move(rew_n)), std::move(absorb_n));

    // sigma(M) + sigma(N) = sigma(N), symmetrically.
    Eq rew_m = rewrite_summands(ep.summands, sq, forward);
    Eq absorb_m = detail::sum_eq(Term::plus(rew_m.r, sn), sn);
    Eq n_eats_m =
        eq_trans(eq_plus(std::move(rew_m), detail::eq_refl(sn)), std::move(absorb_m));

    Eq full = eq_trans(std::move(pm), eq_symm(std::move(m_eats_n)), std::move(n_eats_m),
                       eq_symm(std::move(qn)));
    return full.pf;
}

} // namespace bks
