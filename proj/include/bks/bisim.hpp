#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bks/semantics.hpp"
#include "bks/term.hpp"

namespace bks {

/// A finite relation witnessing bisimilarity: tick relates only to tick, and
/// every step of one component is matched by a step of the other into the
/// relation.
struct BisimWitness {
    std::vector<std::pair<Vertex, Vertex>> pairs;
};

/// Decides bisimilarity by partition refinement over the union of the two
/// reachable fragments, splitting blocks on (action, target block) signatures.
bool bisimilar(const Vertex& u, const Vertex& v);
bool bisimilar(const Term& p, const Term& q);

/// Same decision, returning the relation induced by same-block pairs of the
/// final partition when the answer is positive.
std::optional<BisimWitness> bisim_witness(const Vertex& u, const Vertex& v);

/// Independent oracle: greatest fixpoint on the full product of the two
/// reachable vertex sets. Intended for small instances.
bool bisim_naive(const Vertex& u, const Vertex& v);
bool bisim_naive(const Term& p, const Term& q);

/// Checks the three defining clauses of a witness using only `successors`.
bool witness_valid(const BisimWitness& w);

} // namespace bks
