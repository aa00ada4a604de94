#pragma once

// Random term / certificate generators shared by the unit and acceptance
// suites. Everything is seeded explicitly so runs are reproducible.

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "bks/proof.hpp"
#include "bks/term.hpp"

namespace testgen {

using bks::Proof;
using bks::Term;
using bks::TermKind;

struct GenConfig {
    int max_size = 10;
    int num_actions = 3;
    int max_star_depth = 2;
};

inline int rand_int(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Term random_action(std::mt19937& rng, const GenConfig& cfg) {
    return Term::act(std::string(1, static_cast<char>('a' + rand_int(rng, 0, cfg.num_actions - 1))));
}

inline Term random_term_sized(std::mt19937& rng, const GenConfig& cfg, int size_budget,
                              int star_budget) {
    if (size_budget < 3 || rand_int(rng, 0, 3) == 0) {
        if (rand_int(rng, 0, 4) == 0) return Term::zero();
        return random_action(rng, cfg);
    }
    int max_kind = star_budget > 0 ? 2 : 1;
    int kind = rand_int(rng, 0, max_kind);
    int left = rand_int(rng, 1, size_budget - 2);
    int right = size_budget - 1 - left;
    switch (kind) {
    case 0:
        return Term::plus(random_term_sized(rng, cfg, left, star_budget),
                          random_term_sized(rng, cfg, right, star_budget));
    case 1:
        return Term::mult(random_term_sized(rng, cfg, left, star_budget),
                          random_term_sized(rng, cfg, right, star_budget));
    default:
        return Term::star(random_term_sized(rng, cfg, left, star_budget - 1),
                          random_term_sized(rng, cfg, right, star_budget));
    }
}

inline Term random_term(std::mt19937& rng, const GenConfig& cfg = {}) {
    return random_term_sized(rng, cfg, cfg.max_size, cfg.max_star_depth);
}

// ---------------------------------------------------------------------------
// Axiom rewriting with proofs. A rewrite step picks a position and an axiom
// instance applying there (either direction) and returns the new term plus a
// certificate for (old, new).
// ---------------------------------------------------------------------------

struct Rewrite {
    Term result;
    Proof pf; // concludes (input, result)
};

// Tries one axiom/direction at the root of t.
inline std::optional<Rewrite> axiom_at_root(std::mt19937& rng, const GenConfig& cfg,
                                            const Term& t, int axiom, bool ltr) {
    using bks::Proof;
    switch (axiom) {
    case 0: // x+y = y+x (self-dual)
        if (t.is(TermKind::Plus))
            return Rewrite{Term::plus(t.right(), t.left()), Proof::b1(t.left(), t.right())};
        return std::nullopt;
    case 1: // (x+y)+z = x+(y+z)
        if (ltr) {
            if (t.is(TermKind::Plus) && t.left().is(TermKind::Plus)) {
                const Term &x = t.left().left(), &y = t.left().right(), &z = t.right();
                return Rewrite{Term::plus(x, Term::plus(y, z)), Proof::b2(x, y, z)};
            }
        } else {
            if (t.is(TermKind::Plus) && t.right().is(TermKind::Plus)) {
                const Term &x = t.left(), &y = t.right().left(), &z = t.right().right();
                return Rewrite{Term::plus(Term::plus(x, y), z),
                               Proof::symm(Proof::b2(x, y, z))};
            }
        }
        return std::nullopt;
    case 2: // x+x = x
        if (ltr) {
            if (t.is(TermKind::Plus) && t.left() == t.right())
                return Rewrite{t.left(), Proof::b3(t.left())};
        } else {
            return Rewrite{Term::plus(t, t), Proof::symm(Proof::b3(t))};
        }
        return std::nullopt;
    case 3: // (x+y).z = x.z+y.z
        if (ltr) {
            if (t.is(TermKind::Mult) && t.left().is(TermKind::Plus)) {
                const Term &x = t.left().left(), &y = t.left().right(), &z = t.right();
                return Rewrite{Term::plus(Term::mult(x, z), Term::mult(y, z)),
                               Proof::b4(x, y, z)};
            }
        } else {
            if (t.is(TermKind::Plus) && t.left().is(TermKind::Mult) &&
                t.right().is(TermKind::Mult) && t.left().right() == t.right().right()) {
                const Term &x = t.left().left(), &y = t.right().left(), &z = t.left().right();
                return Rewrite{Term::mult(Term::plus(x, y), z),
                               Proof::symm(Proof::b4(x, y, z))};
            }
        }
        return std::nullopt;
    case 4: // (x.y).z = x.(y.z)
        if (ltr) {
            if (t.is(TermKind::Mult) && t.left().is(TermKind::Mult)) {
                const Term &x = t.left().left(), &y = t.left().right(), &z = t.right();
                return Rewrite{Term::mult(x, Term::mult(y, z)), Proof::b5(x, y, z)};
            }
        } else {
            if (t.is(TermKind::Mult) && t.right().is(TermKind::Mult)) {
                const Term &x = t.left(), &y = t.right().left(), &z = t.right().right();
                return Rewrite{Term::mult(Term::mult(x, y), z),
                               Proof::symm(Proof::b5(x, y, z))};
            }
        }
        return std::nullopt;
    case 5: // x+0 = x
        if (ltr) {
            if (t.is(TermKind::Plus) && t.right().is(TermKind::Zero))
                return Rewrite{t.left(), Proof::b6(t.left())};
        } else {
            return Rewrite{Term::plus(t, Term::zero()), Proof::symm(Proof::b6(t))};
        }
        return std::nullopt;
    case 6: // 0.x = 0
        if (ltr) {
            if (t.is(TermKind::Mult) && t.left().is(TermKind::Zero))
                return Rewrite{Term::zero(), Proof::b7(t.right())};
        } else {
            if (t.is(TermKind::Zero)) {
                Term x = random_term_sized(rng, cfg, 3, 0);
                return Rewrite{Term::mult(Term::zero(), x), Proof::symm(Proof::b7(x))};
            }
        }
        return std::nullopt;
    case 7: // x.(x*y)+y = x*y
        if (ltr) {
            if (t.is(TermKind::Plus) && t.left().is(TermKind::Mult) &&
                t.left().right().is(TermKind::Star) &&
                t.left().right().left() == t.left().left() &&
                t.left().right().right() == t.right()) {
                const Term &x = t.left().left(), &y = t.right();
                return Rewrite{Term::star(x, y), Proof::bks1(x, y)};
            }
        } else {
            if (t.is(TermKind::Star)) {
                const Term &x = t.left(), &y = t.right();
                return Rewrite{Term::plus(Term::mult(x, t), y),
                               Proof::symm(Proof::bks1(x, y))};
            }
        }
        return std::nullopt;
    case 8: // (x*y).z = x*(y.z)
        if (ltr) {
            if (t.is(TermKind::Mult) && t.left().is(TermKind::Star)) {
                const Term &x = t.left().left(), &y = t.left().right(), &z = t.right();
                return Rewrite{Term::star(x, Term::mult(y, z)), Proof::bks2(x, y, z)};
            }
        } else {
            if (t.is(TermKind::Star) && t.right().is(TermKind::Mult)) {
                const Term &x = t.left(), &y = t.right().left(), &z = t.right().right();
                return Rewrite{Term::mult(Term::star(x, y), z),
                               Proof::symm(Proof::bks2(x, y, z))};
            }
        }
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

inline void collect_paths(const Term& t, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    if (t.is(TermKind::Plus) || t.is(TermKind::Mult) || t.is(TermKind::Star)) {
        cur.push_back(0);
        collect_paths(t.left(), cur, out);
        cur.back() = 1;
        collect_paths(t.right(), cur, out);
        cur.pop_back();
    }
}

// Applies a root rewrite at `path`, wrapping the certificate in congruence
// steps along the way.
inline std::optional<Rewrite> rewrite_at(std::mt19937& rng, const GenConfig& cfg,
                                         const Term& t, const std::vector<int>& path,
                                         std::size_t i, int axiom, bool ltr) {
    if (i == path.size()) return axiom_at_root(rng, cfg, t, axiom, ltr);
    auto sub = rewrite_at(rng, cfg, path[i] == 0 ? t.left() : t.right(), path, i + 1,
                          axiom, ltr);
    if (!sub) return std::nullopt;
    auto comp = t.is(TermKind::Plus)  ? Proof::comp_plus
                : t.is(TermKind::Mult) ? Proof::comp_mult
                                       : Proof::comp_star;
    if (path[i] == 0)
        return Rewrite{t.is(TermKind::Plus)   ? Term::plus(sub->result, t.right())
                       : t.is(TermKind::Mult) ? Term::mult(sub->result, t.right())
                                              : Term::star(sub->result, t.right()),
                       comp(std::move(sub->pf), Proof::refl(t.right()))};
    return Rewrite{t.is(TermKind::Plus)   ? Term::plus(t.left(), sub->result)
                   : t.is(TermKind::Mult) ? Term::mult(t.left(), sub->result)
                                          : Term::star(t.left(), sub->result),
                   comp(Proof::refl(t.left()), std::move(sub->pf))};
}

// One random rewrite step anywhere in the term; nullopt only when no axiom
// applies anywhere (which cannot happen: idempotence applies everywhere).
inline std::optional<Rewrite> random_rewrite_step(std::mt19937& rng, const GenConfig& cfg,
                                                  const Term& t) {
    std::vector<std::vector<int>> paths;
    std::vector<int> cur;
    collect_paths(t, cur, paths);
    std::shuffle(paths.begin(), paths.end(), rng);
    for (const auto& path : paths) {
        std::vector<std::pair<int, bool>> tries;
        for (int ax = 0; ax < 9; ++ax)
            for (bool dir : {true, false}) tries.push_back({ax, dir});
        std::shuffle(tries.begin(), tries.end(), rng);
        for (auto [ax, dir] : tries) {
            // Keep expansion rewrites from dominating: skip size-increasing
            // directions most of the time.
            bool expanding = !dir && (ax == 2 || ax == 5 || ax == 6 || ax == 7);
            if (expanding && rand_int(rng, 0, 3) != 0) continue;
            auto rw = rewrite_at(rng, cfg, t, path, 0, ax, dir);
            if (rw) return rw;
        }
    }
    return std::nullopt;
}

// A term provably equal (hence bisimilar) to t, via a few random axiom
// rewrites.
inline Term random_rewrite(std::mt19937& rng, const GenConfig& cfg, const Term& t,
                           int steps) {
    Term cur = t;
    for (int i = 0; i < steps; ++i) {
        auto rw = random_rewrite_step(rng, cfg, cur);
        if (!rw) break;
        cur = rw->result;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Random well-formed certificates: combinator trees over axiom instances,
// well-formed by construction.
// ---------------------------------------------------------------------------

inline Proof random_axiom_instance(std::mt19937& rng, const GenConfig& cfg) {
    auto small = [&] { return random_term_sized(rng, cfg, 4, 1); };
    switch (rand_int(rng, 0, 9)) {
    case 0: return Proof::b1(small(), small());
    case 1: return Proof::b2(small(), small(), small());
    case 2: return Proof::b3(small());
    case 3: return Proof::b4(small(), small(), small());
    case 4: return Proof::b5(small(), small(), small());
    case 5: return Proof::b6(small());
    case 6: return Proof::b7(small());
    case 7: return Proof::bks1(small(), small());
    case 8: return Proof::bks2(small(), small(), small());
    default: return Proof::refl(small());
    }
}

inline Proof random_certificate(std::mt19937& rng, const GenConfig& cfg, int depth) {
    if (depth <= 0) return random_axiom_instance(rng, cfg);
    switch (rand_int(rng, 0, 5)) {
    case 0:
        return Proof::symm(random_certificate(rng, cfg, depth - 1));
    case 1: {
        Proof p = random_certificate(rng, cfg, depth - 1);
        Term mid = bks::conclusion(p).rhs;
        auto rw = random_rewrite_step(rng, cfg, mid);
        Proof q = rw ? std::move(rw->pf) : Proof::refl(mid);
        return Proof::trans(std::move(p), std::move(q));
    }
    case 2:
        return Proof::comp_plus(random_certificate(rng, cfg, depth - 1),
                                random_certificate(rng, cfg, depth - 1));
    case 3:
        return Proof::comp_mult(random_certificate(rng, cfg, depth - 1),
                                random_certificate(rng, cfg, depth - 1));
    case 4:
        return Proof::comp_star(random_certificate(rng, cfg, depth - 1),
                                random_certificate(rng, cfg, depth - 1));
    default: {
        // The loop equation read backwards is exactly an RSP premise.
        Term x = random_term_sized(rng, cfg, 3, 0);
        Term y = random_term_sized(rng, cfg, 3, 0);
        return Proof::rsp(Proof::symm(Proof::bks1(x, y)));
    }
    }
}

} // namespace testgen
