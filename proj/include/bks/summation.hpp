#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bks/proof.hpp"
#include "bks/semantics.hpp"
#include "bks/term.hpp"

namespace bks {

/// A canonical finite set of (action, vertex) summands: sorted by action
/// name, then target with tick first; duplicate-free.
class SummandSet {
public:
    SummandSet() = default;

    /// Sorts and deduplicates.
    static SummandSet from(std::vector<Step> entries);

    const std::vector<Step>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    bool contains(const Step& s) const;

    SummandSet union_with(const SummandSet& other) const;

    friend bool operator==(const SummandSet&, const SummandSet&) = default;

private:
    std::vector<Step> entries_;
};

/// The summation operator: sigma of the empty set is 0 and each entry
/// contributes `a` for a tick target or `a . u` for a term target, folded as
/// sigma(rest) + contribution along the canonical entry order.
Term sigma(const SummandSet& n);

/// Contribution of one summand to a sum: `a` or `a . u`.
Term summand_term(const Step& s);

struct Expansion {
    SummandSet summands; // exactly successors(p)
    Proof proof;         // concludes (p, sigma(summands))
};

/// Expands a term into summation form with a checkable certificate.
Expansion expand(const Term& p);

/// Certificate for (sigma(n1 union n2), sigma(n1) + sigma(n2)).
Proof prove_sigma_union(const SummandSet& n1, const SummandSet& n2);

/// Termination-or-provably-equal witness for a pair of step targets: either
/// both are tick, or a proof relating the two terms.
class TeqWitness {
public:
    static TeqWitness both_tick() { return TeqWitness(); }
    static TeqWitness eq(Term lhs, Term rhs, Proof pf) {
        TeqWitness w;
        w.eq_.emplace(EqData{std::move(lhs), std::move(rhs), std::move(pf)});
        return w;
    }

    bool is_tick() const { return !eq_.has_value(); }
    const Term& lhs() const { return eq_->lhs; }
    const Term& rhs() const { return eq_->rhs; }
    const Proof& proof() const { return eq_->pf; }

private:
    TeqWitness() = default;
    struct EqData {
        Term lhs, rhs;
        Proof pf;
    };
    std::optional<EqData> eq_;
};

class IncompleteMatching : public std::runtime_error {
public:
    explicit IncompleteMatching(const std::string& what) : std::runtime_error(what) {}
};

class BadWitness : public std::runtime_error {
public:
    explicit BadWitness(const std::string& what) : std::runtime_error(what) {}
};

/// One end of a step matching: the index of the partner step on the other
/// side plus the teq witness for the two targets. Forward entries align with
/// successors(p) and carry witnesses concluding (p-side target, q-side
/// target); backward entries align with successors(q) and conclude the
/// flipped pair.
struct MatchEntry {
    std::size_t partner;
    TeqWitness witness;
};

/// Builds a certificate for (p, q) from a total step matching: expands both
/// sides, rewrites matched summand bodies through the witnesses and absorbs
/// them into a shared sum.
Proof prove_by_matching(const Term& p, const Term& q,
                        const std::vector<MatchEntry>& forward,
                        const std::vector<MatchEntry>& backward);

} // namespace bks
