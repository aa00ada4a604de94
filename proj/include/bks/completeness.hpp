#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "bks/proof.hpp"
#include "bks/summation.hpp"
#include "bks/term.hpp"

namespace bks {

class NotBisimilar : public std::runtime_error {
public:
    explicit NotBisimilar(const std::string& what) : std::runtime_error(what) {}
};

/// A depth-budget underflow inside the proof search; indicates a bug, never
/// expected on valid inputs.
class DepthExhausted : public std::logic_error {
public:
    explicit DepthExhausted(const std::string& what) : std::logic_error(what) {}
};

class CertTooLarge : public std::runtime_error {
public:
    explicit CertTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// mult(tick, q) = q and mult(p, q) = p.q.
Term vertex_mult(const Vertex& u, const Term& q);

/// True iff some term q reachable from p (in zero or more steps) performs
/// every summand of m: q steps by a to u for all (a,u) in m.
bool is_tail(const Term& p, const SummandSet& m);

/// Test-scale decision of next-provability: every step target of p that is
/// bisimilar to a vertex of the universe must be tick-against-tick or
/// provably equal to it. Defaults the universe to reachable(p).
bool next_provable(const Term& p);
bool next_provable(const Term& p, const std::vector<Vertex>& universe);

/// The data of one open proof goal around a star p*q: the sides of the shape
/// sigma(m).(p*q) + sigma(n) against `target`, with the depth budget that
/// gates recursive completeness calls below d(p*q).
struct Obligation {
    Term p, q;
    SummandSet m, n;
    Term target;
    int depth_budget;
};

struct ProverLimits {
    std::uint64_t max_cert_nodes = 1'000'000;
};

struct ProverStats {
    std::uint64_t cert_nodes = 0;
    int max_recursion_depth = 0;
};

/// Certificate synthesis for bisimilar pairs. Stateless between calls except
/// for a memo of already proved pairs and the running statistics.
class Prover {
public:
    explicit Prover(ProverLimits limits = {});
    ~Prover();

    Prover(const Prover&) = delete;
    Prover& operator=(const Prover&) = delete;

    /// Certificate concluding (p, q) whenever p ~ q; throws NotBisimilar
    /// otherwise. Proved by normalizing p and solving both sides against the
    /// normal form, with recursion on star depth.
    Proof prove_equal(const Term& p, const Term& q);

    /// Certificate concluding (r, q); requires is_nf(r) and r ~ q.
    Proof prove_with_nf(const Term& r, const Term& q);

    /// Certificate for sigma(m).(p*q)+sigma(n) = sigma(k).(p*q)+sigma(l);
    /// matched loop summands are cancelled and closed recursively at smaller
    /// star depth, other summands through the generic machinery.
    Proof prove_core(const SummandSet& m, const SummandSet& n, const SummandSet& k,
                     const SummandSet& l, const Term& p, const Term& q);

    /// Certificate for sigma(ob.m).(p*q)+sigma(ob.n) = ob.target.
    Proof prove_obligation(const Obligation& ob);

    /// Certificate for sigma(ob.m).(p*q)+sigma(ob.n) = r.s; requires
    /// ob.target == r.s.
    Proof prove_split(const Obligation& ob, const Term& r, const Term& s);

    const ProverStats& stats() const { return stats_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    ProverStats stats_;

    friend struct ProverAccess;
};

/// One-shot convenience wrapper around Prover::prove_equal.
Proof prove_equal(const Term& p, const Term& q);

} // namespace bks
