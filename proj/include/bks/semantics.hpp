#pragma once

#include <cstddef>
#include <vector>

#include "bks/term.hpp"

namespace bks {

/// One labeled step out of a vertex.
struct Step {
    Action label;
    Vertex target;

    friend bool operator==(const Step&, const Step&) = default;
};

/// Canonical order on steps: label name, then target (tick first).
bool step_less(const Step& a, const Step& b);

/// All steps of `v` derivable from the operational rules, duplicate-free and
/// in canonical order. Tick has none.
std::vector<Step> successors(const Vertex& v);
std::vector<Step> successors(const Term& t);

/// Vertices reachable from `p` in zero or more steps (including tick when
/// reachable), in deterministic breadth-first discovery order.
std::vector<Vertex> reachable(const Term& p);
std::vector<Vertex> reachable(const Vertex& v);

/// Terms reachable from `p` in one or more steps (p itself only when it loops
/// back), in deterministic breadth-first discovery order.
std::vector<Term> reachable_plus(const Term& p);

struct Transition {
    Vertex source;
    Action label;
    Vertex target;

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// The reachable fragment of a term, materialized. States are listed in the
/// deterministic enumeration order with the root first; transitions are
/// grouped by source in that order.
struct Lts {
    std::vector<Vertex> states;
    std::vector<Transition> transitions;
    Vertex root;
};

Lts build_lts(const Term& p);

/// Text dump: a state table of the term states, then one line per transition
/// `<index> <action> <index-or-TICK>`.
std::string dump_lts(const Lts& lts);

/// Process-wide cap on explored state counts; CapExceeded is thrown when a
/// closure would pass it. Default 100000.
std::size_t state_cap();
void set_state_cap(std::size_t cap);

} // namespace bks
