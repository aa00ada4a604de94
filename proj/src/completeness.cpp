#include "bks/completeness.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>

#include "bks/bisim.hpp"
#include "bks/normalizer.hpp"
#include "bks/semantics.hpp"
#include "eq_builder.hpp"

namespace bks {

using detail::Eq;

Term vertex_mult(const Vertex& u, const Term& q) {
    return u.is_tick() ? q : Term::mult(u.term(), q);
}

bool is_tail(const Term& p, const SummandSet& m) {
    for (const Vertex& v : reachable(p)) {
        if (v.is_tick()) continue;
        SummandSet succ = SummandSet::from(successors(v.term()));
        bool all = true;
        for (const Step& s : m.entries())
            if (!succ.contains(s)) { all = false; break; }
        if (all) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Prover
// ---------------------------------------------------------------------------

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Term, Term>& p) const {
        std::size_t h = p.first.hash();
        h ^= p.second.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

Term mult_any(const Term& p, const std::optional<Term>& ctx) {
    return ctx ? Term::mult(p, *ctx) : p;
}

std::optional<Term> vertex_mult_opt(const Vertex& w, const std::optional<Term>& ctx) {
    if (w.is_tick()) return ctx;
    return ctx ? Term::mult(w.term(), *ctx) : w.term();
}

bool has_step_target(const Term& p, const Vertex& w) {
    for (const Step& s : successors(p))
        if (s.target == w) return true;
    return false;
}

} // namespace

struct Prover::Impl {
    ProverLimits limits;
    ProverStats* stats;
    std::unordered_map<std::pair<Term, Term>, Eq, PairHash> memo;
    int depth = 0;

    using NextFn = std::function<Eq(const Term&, const Term&)>;
    using SplitProver =
        std::function<Eq(const SummandSet&, const SummandSet&, const NextFn&)>;

    // The ambient star of an open goal: sides of the shape
    // sigma(m).star + sigma(n), with teq provers for the positions that are
    // provable by construction (n's targets and the star exit q).
    struct StarCtx {
        Term p, q;
        Term star; // Star(p, q)
        SummandSet m, n;
        int budget;
        NextFn next_n;
        NextFn next_q;

        StarCtx with_sets(SummandSet m2, SummandSet n2) const {
            StarCtx c = *this;
            c.m = std::move(m2);
            c.n = std::move(n2);
            return c;
        }
    };

    explicit Impl(ProverLimits lim, ProverStats* st) : limits(lim), stats(st) {}

    void check_size(const Eq& e) {
        if (e.pf.node_count() > limits.max_cert_nodes)
            throw CertTooLarge("certificate exceeds " +
                               std::to_string(limits.max_cert_nodes) + " nodes");
    }

    static Term lhs_term(const SummandSet& m, const SummandSet& n, const Term& star) {
        return Term::plus(Term::mult(sigma(m), star), sigma(n));
    }

    static Eq expansion_eq(const Term& p) {
        Expansion e = expand(p);
        Term s = sigma(e.summands);
        return Eq{std::move(e.proof), p, std::move(s)};
    }

    NextFn trivial_next() {
        return [](const Term& u, const Term&) -> Eq {
            throw std::logic_error("teq requested for an empty summand set: " + render(u));
        };
    }

    NextFn generic_next() {
        return [this](const Term& u, const Term& v) { return prove_equal_eq(u, v); };
    }

    // teq prover for the step positions of `body` under an optional right
    // context; used both for star exits and for loop summand sets built from
    // the body's own steps.
    NextFn make_next(const Term& body, const std::optional<Term>& ctx) {
        return [this, body, ctx](const Term& u, const Term& v) -> Eq {
            for (const Step& s : successors(body)) {
                std::optional<Term> cand = vertex_mult_opt(s.target, ctx);
                if (cand && *cand == u) return target_eq(body, ctx, s.target, v);
            }
            throw std::logic_error("no attributable step for position " + render(u));
        };
    }

    // -----------------------------------------------------------------
    // Generic step matching: builds the summand-level certificate for
    // (a, b) from a teq prover for matched term targets.
    // -----------------------------------------------------------------
    Eq match_eq(const Term& a, const Term& b, const NextFn& teq) {
        if (a == b) return detail::eq_refl(a);
        std::vector<Step> sa = successors(a);
        std::vector<Step> sb = successors(b);
        std::unordered_map<std::pair<Term, Term>, Eq, PairHash> local;

        auto teq_proof = [&](const Term& u, const Term& v) -> Eq {
            if (u == v) return detail::eq_refl(u);
            auto key = std::make_pair(u, v);
            auto it = local.find(key);
            if (it != local.end()) return it->second;
            Eq e = teq(u, v);
            if (e.l != u || e.r != v)
                throw std::logic_error("teq prover produced a proof for the wrong pair");
            local.emplace(std::move(key), e);
            return e;
        };

        auto find_partner = [](const Step& s, const std::vector<Step>& other)
            -> std::optional<std::size_t> {
            for (std::size_t j = 0; j < other.size(); ++j) {
                if (s.label != other[j].label) continue;
                if (bisimilar(s.target, other[j].target)) return j;
            }
            return std::nullopt;
        };

        std::vector<MatchEntry> fwd, bwd;
        fwd.reserve(sa.size());
        bwd.reserve(sb.size());
        for (const Step& s : sa) {
            auto j = find_partner(s, sb);
            if (!j)
                throw NotBisimilar("step '" + s.label.name + "' of " + render(a) +
                                   " has no match in " + render(b));
            const Step& t = sb[*j];
            if (s.target.is_tick())
                fwd.push_back({*j, TeqWitness::both_tick()});
            else {
                Eq e = teq_proof(s.target.term(), t.target.term());
                fwd.push_back({*j, TeqWitness::eq(e.l, e.r, e.pf)});
            }
        }
        for (const Step& t : sb) {
            auto i = find_partner(t, sa);
            if (!i)
                throw NotBisimilar("step '" + t.label.name + "' of " + render(b) +
                                   " has no match in " + render(a));
            const Step& s = sa[*i];
            if (t.target.is_tick())
                bwd.push_back({*i, TeqWitness::both_tick()});
            else {
                Eq e = eq_symm(teq_proof(s.target.term(), t.target.term()));
                bwd.push_back({*i, TeqWitness::eq(e.l, e.r, e.pf)});
            }
        }

        Eq out{prove_by_matching(a, b, fwd, bwd), a, b};
        check_size(out);
        return out;
    }

    // -----------------------------------------------------------------
    // Step-target attribution: for a step p -a-> w under an optional right
    // context, proves (mult(w, ctx), v) for any bisimilar v. Structural
    // recursion on p; star loops go through the obligation machinery.
    // -----------------------------------------------------------------
    Eq target_eq(const Term& p, const std::optional<Term>& ctx, const Vertex& w,
                 const Term& v) {
        switch (p.kind()) {
        case TermKind::Zero:
            throw std::logic_error("step target attributed to 0");
        case TermKind::Act: {
            if (!ctx)
                throw std::logic_error("tick target needs no proof without a context");
            return with_nf_eq(*ctx, v);
        }
        case TermKind::Plus: {
            if (has_step_target(p.left(), w)) return target_eq(p.left(), ctx, w, v);
            return target_eq(p.right(), ctx, w, v);
        }
        case TermKind::Mult: {
            const Term& p1 = p.left();
            const Term& p2 = p.right();
            std::optional<Term> inner_ctx = mult_any(p2, ctx);
            // Recover the step of p1 this target came from.
            if (!w.is_tick() && w.term().is(TermKind::Mult) && w.term().right() == p2 &&
                has_step_target(p1, Vertex(w.term().left()))) {
                Term x = w.term().left();
                Eq rec = target_eq(p1, inner_ctx, Vertex(x), v);
                if (ctx)
                    return eq_trans(detail::ax_b5(x, p2, *ctx), std::move(rec));
                return rec;
            }
            if (!w.is_tick() && w.term() == p2 && has_step_target(p1, Vertex::tick()))
                return target_eq(p1, inner_ctx, Vertex::tick(), v);
            throw std::logic_error("cannot attribute step target " + render(w) +
                                   " to " + render(p));
        }
        case TermKind::Star: {
            const Term& p1 = p.left();
            const Term& p2 = p.right();
            Term q_part = mult_any(p2, ctx);
            Term s = Term::star(p1, q_part);
            // Body step entering the loop: target x.(p1*p2).
            if (!w.is_tick() && w.term().is(TermKind::Mult) && w.term().right() == p &&
                has_step_target(p1, Vertex(w.term().left()))) {
                Term x = w.term().left();
                Eq exp = expansion_eq(x);
                Term sm_s = Term::mult(exp.r, s);
                Eq chain = eq_trans(eq_mult(std::move(exp), detail::eq_refl(s)),
                                    eq_symm(detail::ax_b6(sm_s)));
                // (x.s, sigma(succ(x)).s + 0)
                if (ctx) {
                    Eq reassoc = eq_trans(
                        detail::ax_b5(x, p, *ctx),
                        eq_mult(detail::eq_refl(x), detail::ax_bks2(p1, p2, *ctx)));
                    chain = eq_trans(std::move(reassoc), std::move(chain));
                }
                StarCtx ob{p1,
                           q_part,
                           s,
                           SummandSet::from(successors(x)),
                           SummandSet(),
                           star_depth(s),
                           trivial_next(),
                           make_next(p2, ctx)};
                Eq rec = ob_eq(ob, v);
                return eq_trans(std::move(chain), std::move(rec));
            }
            // Loop-back step: target is the star itself.
            if (!w.is_tick() && w.term() == p && has_step_target(p1, Vertex::tick())) {
                Eq unfold = eq_symm(detail::ax_bks1(p1, q_part));
                Eq lift = eq_plus(eq_mult(expansion_eq(p1), detail::eq_refl(s)),
                                  expansion_eq(q_part));
                Eq chain = eq_trans(std::move(unfold), std::move(lift));
                if (ctx)
                    chain = eq_trans(detail::ax_bks2(p1, p2, *ctx), std::move(chain));
                NextFn nq = make_next(p2, ctx);
                StarCtx ob{p1,
                           q_part,
                           s,
                           SummandSet::from(successors(p1)),
                           SummandSet::from(successors(q_part)),
                           star_depth(s),
                           nq,
                           nq};
                Eq rec = ob_eq(ob, v);
                return eq_trans(std::move(chain), std::move(rec));
            }
            // Exit step through p2.
            if (has_step_target(p2, w)) return target_eq(p2, ctx, w, v);
            throw std::logic_error("cannot attribute step target " + render(w) +
                                   " to " + render(p));
        }
        }
        throw std::logic_error("unreachable");
    }

    // (r, q) for is_nf(r) and r ~ q.
    Eq with_nf_eq(const Term& r, const Term& q) {
        if (r == q) return detail::eq_refl(r);
        NextFn teq = [this, r](const Term& u, const Term& v) {
            return target_eq(r, std::nullopt, Vertex(u), v);
        };
        return match_eq(r, q, teq);
    }

    Eq prove_equal_eq(const Term& p, const Term& q) {
        if (p == q) return detail::eq_refl(p);
        auto key = std::make_pair(p, q);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        if (!bisimilar(p, q))
            throw NotBisimilar(render(p) + " and " + render(q) + " are not bisimilar");

        ++depth;
        stats->max_recursion_depth = std::max(stats->max_recursion_depth, depth);
        Term r = normalize(p);
        Eq to_p = with_nf_eq(r, p);
        Eq to_q = with_nf_eq(r, q);
        Eq out = eq_trans(eq_symm(std::move(to_p)), std::move(to_q));
        --depth;
        check_size(out);
        memo.emplace(std::move(key), out);
        return out;
    }

    // -----------------------------------------------------------------
    // Obligation machinery
    // -----------------------------------------------------------------

    struct Partition {
        SummandSet m1, n1, m2, n2;
    };

    // Distributes the goal's summands over two target branches; a summand
    // goes to every branch holding a matching step (sums absorb the
    // duplicates later).
    Partition partition(const StarCtx& ob, const Term& t1, const Term& t2) {
        std::vector<Step> s1 = successors(t1);
        std::vector<Step> s2 = successors(t2);
        auto matches = [](const Step& s, const Vertex& tgt, const std::vector<Step>& side) {
            for (const Step& o : side)
                if (s.label == o.label && bisimilar(tgt, o.target)) return true;
            return false;
        };
        Partition out;
        std::vector<Step> m1, n1, m2, n2;
        for (const Step& s : ob.m.entries()) {
            Vertex tgt = Vertex(vertex_mult(s.target, ob.star));
            bool in1 = matches(s, tgt, s1);
            bool in2 = matches(s, tgt, s2);
            if (!in1 && !in2)
                throw NotBisimilar("loop summand '" + s.label.name +
                                   "' matches neither branch of " + render(t1) + " + " +
                                   render(t2));
            if (in1) m1.push_back(s);
            if (in2) m2.push_back(s);
        }
        for (const Step& s : ob.n.entries()) {
            bool in1 = matches(s, s.target, s1);
            bool in2 = matches(s, s.target, s2);
            if (!in1 && !in2)
                throw NotBisimilar("summand '" + s.label.name +
                                   "' matches neither branch of " + render(t1) + " + " +
                                   render(t2));
            if (in1) n1.push_back(s);
            if (in2) n2.push_back(s);
        }
        out.m1 = SummandSet::from(std::move(m1));
        out.n1 = SummandSet::from(std::move(n1));
        out.m2 = SummandSet::from(std::move(m2));
        out.n2 = SummandSet::from(std::move(n2));
        return out;
    }

    // (sigma(m).star + sigma(n), canonical flat sum of all contributions).
    Eq flatten_eq(const SummandSet& m, const SummandSet& n, const Term& star) {
        Term sm = sigma(m);
        Term sn = sigma(n);
        Eq dist = detail::distribute(sm, star);
        Eq lifted = eq_plus(std::move(dist), detail::eq_refl(sn));
        Eq norm = detail::sum_normalize(lifted.r);
        return eq_trans(std::move(lifted), std::move(norm));
    }

    // Combines branch proofs e1: (lhs(m1,n1), t1) and e2: (lhs(m2,n2), t2)
    // into (lhs(m,n), t1 + t2) by flattening all three sums.
    Eq glue_partition(const StarCtx& ob, const Partition& parts, Eq e1, Eq e2) {
        Eq f = flatten_eq(ob.m, ob.n, ob.star);
        Eq f1 = flatten_eq(parts.m1, parts.n1, ob.star);
        Eq f2 = flatten_eq(parts.m2, parts.n2, ob.star);
        Eq pieces = eq_plus(eq_trans(eq_symm(std::move(e1)), std::move(f1)),
                            eq_trans(eq_symm(std::move(e2)), std::move(f2)));
        Eq merged = detail::sum_normalize(pieces.r);
        if (merged.r != f.r)
            throw std::logic_error("branch atoms do not cover the goal's atoms");
        Eq back = eq_trans(std::move(pieces), std::move(merged));
        return eq_trans(std::move(f), eq_symm(std::move(back)));
    }

    // sigma(m).star + sigma(n) = target, by structural recursion on target.
    Eq ob_eq(const StarCtx& ob, const Term& target) {
        switch (target.kind()) {
        case TermKind::Zero:
        case TermKind::Act: {
            Term lhs = lhs_term(ob.m, ob.n, ob.star);
            NextFn teq = [&ob](const Term& u, const Term& v) -> Eq {
                for (const Step& s : ob.n.entries())
                    if (!s.target.is_tick() && s.target.term() == u)
                        return ob.next_n(u, v);
                throw NotBisimilar("loop summand bisimilar to an atomic target");
            };
            return match_eq(lhs, target, teq);
        }
        case TermKind::Plus: {
            Partition parts = partition(ob, target.left(), target.right());
            Eq e1 = ob_eq(ob.with_sets(parts.m1, parts.n1), target.left());
            Eq e2 = ob_eq(ob.with_sets(parts.m2, parts.n2), target.right());
            return glue_partition(ob, parts, std::move(e1), std::move(e2));
        }
        case TermKind::Mult: {
            SplitProver sp = [this, &ob, target](const SummandSet& m2, const SummandSet& n2,
                                                 const NextFn& nn2) {
                StarCtx inner = ob.with_sets(m2, n2);
                inner.next_n = nn2;
                return ob_eq(inner, target.right());
            };
            return split_eq(ob, target.left(), target.right(), sp);
        }
        case TermKind::Star: {
            Term lhs = lhs_term(ob.m, ob.n, ob.star);
            Term branch1 = Term::mult(target.left(), lhs);
            Partition parts = partition(ob, branch1, target.right());
            Eq e1 = split_eq(ob.with_sets(parts.m1, parts.n1), target.left(), lhs,
                             core_prover(ob));
            Eq e2 = ob_eq(ob.with_sets(parts.m2, parts.n2), target.right());
            Eq g = glue_partition(ob, parts, std::move(e1), std::move(e2));
            return detail::ax_rsp(std::move(g));
        }
        }
        throw std::logic_error("unreachable");
    }

    // The premise prover used when a goal folds back onto its own star: any
    // tail-shaped sides close against the goal's sides at one star level
    // down.
    SplitProver core_prover(const StarCtx& ob) {
        StarCtx snapshot = ob;
        return [this, snapshot](const SummandSet& m2, const SummandSet& n2,
                                const NextFn& nn2) {
            return core_eq(m2, n2, snapshot.m, snapshot.n, snapshot.p, snapshot.q, nn2,
                           snapshot.next_n, snapshot.budget);
        };
    }

    // sigma(m).star + sigma(n) = r.s, structural recursion on r; `sprove`
    // discharges tail-shaped goals against s itself.
    Eq split_eq(const StarCtx& ob, const Term& r, const Term& s, const SplitProver& sprove) {
        switch (r.kind()) {
        case TermKind::Zero:
        case TermKind::Act: {
            Term lhs = lhs_term(ob.m, ob.n, ob.star);
            Term target = Term::mult(r, s);
            NextFn teq = [this, &ob, &sprove](const Term& u, const Term& v) -> Eq {
                for (const Step& st : ob.n.entries())
                    if (!st.target.is_tick() && st.target.term() == u)
                        return ob.next_n(u, v);
                // Loop summand: unfold it into a tail-shaped goal against v.
                Eq head = unfold_loop_target(ob, u);
                SummandSet mw, nw;
                split_sets_of(ob, u, mw, nw);
                Eq tail = (u == ob.star)
                              ? sprove(mw, nw, ob.next_q)
                              : sprove(mw, nw, trivial_next());
                if (tail.r != v)
                    throw std::logic_error("split prover closed against the wrong term");
                return eq_trans(std::move(head), std::move(tail));
            };
            return match_eq(lhs, target, teq);
        }
        case TermKind::Plus: {
            Term t1 = Term::mult(r.left(), s);
            Term t2 = Term::mult(r.right(), s);
            Partition parts = partition(ob, t1, t2);
            Eq e1 = split_eq(ob.with_sets(parts.m1, parts.n1), r.left(), s, sprove);
            Eq e2 = split_eq(ob.with_sets(parts.m2, parts.n2), r.right(), s, sprove);
            Eq g = glue_partition(ob, parts, std::move(e1), std::move(e2));
            return eq_trans(std::move(g), eq_symm(detail::ax_b4(r.left(), r.right(), s)));
        }
        case TermKind::Mult: {
            Term inner_s = Term::mult(r.right(), s);
            SplitProver inner = [this, &ob, r, s, &sprove](const SummandSet& m2,
                                                           const SummandSet& n2,
                                                           const NextFn& nn2) {
                StarCtx c = ob.with_sets(m2, n2);
                c.next_n = nn2;
                return split_eq(c, r.right(), s, sprove);
            };
            Eq e = split_eq(ob, r.left(), inner_s, inner);
            return eq_trans(std::move(e), eq_symm(detail::ax_b5(r.left(), r.right(), s)));
        }
        case TermKind::Star: {
            Term lhs = lhs_term(ob.m, ob.n, ob.star);
            Term t1 = Term::mult(r.left(), lhs);
            Term t2 = Term::mult(r.right(), s);
            Partition parts = partition(ob, t1, t2);
            Eq e1 = split_eq(ob.with_sets(parts.m1, parts.n1), r.left(), lhs,
                             core_prover(ob));
            Eq e2 = split_eq(ob.with_sets(parts.m2, parts.n2), r.right(), s, sprove);
            Eq g = glue_partition(ob, parts, std::move(e1), std::move(e2));
            Eq star = detail::ax_rsp(std::move(g));
            return eq_trans(std::move(star),
                            eq_symm(detail::ax_bks2(r.left(), r.right(), s)));
        }
        }
        throw std::logic_error("unreachable");
    }

    // Rewrites a loop summand target u (either w.star or the star itself)
    // into the canonical sides shape sigma(M').star + sigma(N').
    Eq unfold_loop_target(const StarCtx& ob, const Term& u) {
        if (u == ob.star) {
            Eq unfold = eq_symm(detail::ax_bks1(ob.p, ob.q));
            Eq lift = eq_plus(eq_mult(expansion_eq(ob.p), detail::eq_refl(ob.star)),
                              expansion_eq(ob.q));
            return eq_trans(std::move(unfold), std::move(lift));
        }
        if (!(u.is(TermKind::Mult) && u.right() == ob.star))
            throw std::logic_error("not a loop summand target: " + render(u));
        Term w = u.left();
        Eq exp = expansion_eq(w);
        Term sm_s = Term::mult(exp.r, ob.star);
        return eq_trans(eq_mult(std::move(exp), detail::eq_refl(ob.star)),
                        eq_symm(detail::ax_b6(sm_s)));
    }

    void split_sets_of(const StarCtx& ob, const Term& u, SummandSet& mw, SummandSet& nw) {
        if (u == ob.star) {
            mw = SummandSet::from(successors(ob.p));
            nw = SummandSet::from(successors(ob.q));
        } else {
            mw = SummandSet::from(successors(u.left()));
            nw = SummandSet();
        }
    }

    // sigma(ml).star + sigma(nl) = sigma(mr).star + sigma(nr): matched loop
    // summands cancel their common star context and close by recursion one
    // star level down; other summands go through their teq provers.
    Eq core_eq(const SummandSet& ml, const SummandSet& nl, const SummandSet& mr,
               const SummandSet& nr, const Term& p, const Term& q, const NextFn& nlf,
               const NextFn& nrf, int budget) {
        Term star = Term::star(p, q);
        Term lhs = lhs_term(ml, nl, star);
        Term rhs = lhs_term(mr, nr, star);

        auto recover = [&star](const SummandSet& m, const Term& u) -> std::optional<Vertex> {
            for (const Step& s : m.entries())
                if (vertex_mult(s.target, star) == u) return s.target;
            return std::nullopt;
        };
        auto in_targets = [](const SummandSet& n, const Term& u) {
            for (const Step& s : n.entries())
                if (!s.target.is_tick() && s.target.term() == u) return true;
            return false;
        };

        NextFn teq = [&, this](const Term& u, const Term& v) -> Eq {
            if (in_targets(nl, u)) return nlf(u, v);
            if (in_targets(nr, v)) return eq_symm(nrf(v, u));
            std::optional<Vertex> w = recover(ml, u);
            std::optional<Vertex> w2 = recover(mr, v);
            if (!w || !w2)
                throw NotBisimilar("unattributable summand pair: " + render(u) + " / " +
                                   render(v));
            if (w->is_tick() != w2->is_tick())
                throw NotBisimilar("a loop summand matched a loop exit; the star is "
                                   "not in normal form");
            if (w->is_tick())
                return detail::eq_refl(u); // both are the star itself
            if (star_depth(w->term()) >= budget || star_depth(w2->term()) >= budget)
                throw DepthExhausted("cancelled pair does not sit below the star depth "
                                     "budget");
            Eq e = prove_equal_eq(w->term(), w2->term());
            return eq_mult(std::move(e), detail::eq_refl(star));
        };
        return match_eq(lhs, rhs, teq);
    }
};

Prover::Prover(ProverLimits limits) : impl_(std::make_unique<Impl>(limits, &stats_)) {}
Prover::~Prover() = default;

Proof Prover::prove_equal(const Term& p, const Term& q) {
    Eq e = impl_->prove_equal_eq(p, q);
    stats_.cert_nodes = e.pf.node_count();
    return e.pf;
}

Proof Prover::prove_with_nf(const Term& r, const Term& q) {
    if (!is_nf(r)) throw std::invalid_argument("left operand is not in normal form");
    if (!bisimilar(r, q))
        throw NotBisimilar(render(r) + " and " + render(q) + " are not bisimilar");
    Eq e = impl_->with_nf_eq(r, q);
    stats_.cert_nodes = e.pf.node_count();
    return e.pf;
}

Proof Prover::prove_core(const SummandSet& m, const SummandSet& n, const SummandSet& k,
                         const SummandSet& l, const Term& p, const Term& q) {
    Term star = Term::star(p, q);
    Impl::NextFn gen = impl_->generic_next();
    Eq e = impl_->core_eq(m, n, k, l, p, q, gen, gen, star_depth(star));
    stats_.cert_nodes = e.pf.node_count();
    return e.pf;
}

Proof Prover::prove_obligation(const Obligation& ob) {
    Impl::NextFn gen = impl_->generic_next();
    Impl::StarCtx ctx{ob.p,       ob.q, Term::star(ob.p, ob.q), ob.m, ob.n,
                      ob.depth_budget, gen,  gen};
    Eq e = impl_->ob_eq(ctx, ob.target);
    stats_.cert_nodes = e.pf.node_count();
    return e.pf;
}

Proof Prover::prove_split(const Obligation& ob, const Term& r, const Term& s) {
    if (!(ob.target == Term::mult(r, s)))
        throw std::invalid_argument("obligation target is not r.s");
    Impl::NextFn gen = impl_->generic_next();
    Impl::StarCtx ctx{ob.p,       ob.q, Term::star(ob.p, ob.q), ob.m, ob.n,
                      ob.depth_budget, gen,  gen};
    Impl::SplitProver prover = [impl = impl_.get(), &ctx, &s](const SummandSet& m2,
                                                              const SummandSet& n2,
                                                              const Impl::NextFn& nn2) {
        Impl::StarCtx inner = ctx.with_sets(m2, n2);
        inner.next_n = nn2;
        return impl->ob_eq(inner, s);
    };
    Eq e = impl_->split_eq(ctx, r, s, prover);
    stats_.cert_nodes = e.pf.node_count();
    return e.pf;
}

Proof prove_equal(const Term& p, const Term& q) {
    Prover prover;
    return prover.prove_equal(p, q);
}

bool next_provable(const Term& p) { return next_provable(p, reachable(p)); }

bool next_provable(const Term& p, const std::vector<Vertex>& universe) {
    Prover prover;
    for (const Step& s : successors(p)) {
        for (const Vertex& v : universe) {
            if (!bisimilar(s.target, v)) continue;
            if (s.target.is_tick()) continue; // tick only relates to tick
            try {
                Proof pf = prover.prove_equal(s.target.term(), v.term());
                Conclusion c = conclusion(pf);
                if (c.lhs != s.target.term() || c.rhs != v.term()) return false;
            } catch (const NotBisimilar&) {
                return false;
            } catch (const CertTooLarge&) {
                return false;
            }
        }
    }
    return true;
}

} // namespace bks
