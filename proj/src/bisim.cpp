#include "bks/bisim.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

namespace bks {

namespace {

struct IndexedLts {
    std::vector<Vertex> states;
    std::unordered_map<Vertex, int, VertexHash> index;
    // outgoing edges per state as (label, target index), canonical order
    std::vector<std::vector<std::pair<std::string, int>>> adj;
    int u = -1, v = -1;
};

IndexedLts build_union(const Vertex& u, const Vertex& v) {
    IndexedLts g;
    auto add_state = [&](const Vertex& s) -> int {
        auto it = g.index.find(s);
        if (it != g.index.end()) return it->second;
        if (g.states.size() >= state_cap())
            throw CapExceeded("bisimulation state space exceeds cap");
        int id = static_cast<int>(g.states.size());
        g.states.push_back(s);
        g.index.emplace(s, id);
        return id;
    };
    for (const Vertex& root : {u, v})
        for (const Vertex& s : reachable(root)) add_state(s);
    g.adj.resize(g.states.size());
    for (std::size_t i = 0; i < g.states.size(); ++i)
        for (const Step& s : successors(g.states[i]))
            g.adj[i].push_back({s.label.name, g.index.at(s.target)});
    g.u = g.index.at(u);
    g.v = g.index.at(v);
    return g;
}

// Kanellakis-Smolka refinement to a fixpoint; returns the block id per state.
// A block splits when its states disagree on the (action, target block)
// signature; stable when a pass creates no new block.
std::vector<int> refine(const IndexedLts& g) {
    const int n = static_cast<int>(g.states.size());
    std::vector<int> block(n);
    std::size_t num_blocks = 0;
    {
        bool any_tick = false, any_term = false;
        for (int i = 0; i < n; ++i) {
            block[i] = g.states[i].is_tick() ? 0 : 1;
            (g.states[i].is_tick() ? any_tick : any_term) = true;
        }
        num_blocks = static_cast<std::size_t>(any_tick) + static_cast<std::size_t>(any_term);
    }

    using Signature = std::vector<std::pair<std::string, int>>;
    while (true) {
        std::map<std::pair<int, Signature>, int> next_ids;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            Signature sig;
            sig.reserve(g.adj[i].size());
            for (const auto& [a, t] : g.adj[i]) sig.push_back({a, block[t]});
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
            auto key = std::make_pair(block[i], std::move(sig));
            auto it = next_ids.emplace(std::move(key), static_cast<int>(next_ids.size())).first;
            next[i] = it->second;
        }
        bool stable = next_ids.size() == num_blocks;
        num_blocks = next_ids.size();
        block = std::move(next);
        if (stable) break;
    }
    return block;
}

} // namespace

bool bisimilar(const Vertex& u, const Vertex& v) {
    if (u == v) return true;
    IndexedLts g = build_union(u, v);
    std::vector<int> block = refine(g);
    return block[g.u] == block[g.v];
}

bool bisimilar(const Term& p, const Term& q) { return bisimilar(Vertex(p), Vertex(q)); }

std::optional<BisimWitness> bisim_witness(const Vertex& u, const Vertex& v) {
    IndexedLts g = build_union(u, v);
    std::vector<int> block = refine(g);
    if (block[g.u] != block[g.v]) return std::nullopt;
    BisimWitness w;
    const int n = static_cast<int>(g.states.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (block[i] == block[j]) w.pairs.push_back({g.states[i], g.states[j]});
    return w;
}

bool bisim_naive(const Vertex& u, const Vertex& v) {
    IndexedLts g = build_union(u, v);
    const int n = static_cast<int>(g.states.size());
    // Greatest fixpoint: start from the clause-1 relation and strike pairs
    // with an unmatched step until stable.
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rel[i][j] = g.states[i].is_tick() == g.states[j].is_tick();

    auto matched = [&](int x, int y) {
        for (const auto& [a, t] : g.adj[x]) {
            bool ok = false;
            for (const auto& [b, s] : g.adj[y]) {
                if (a == b && rel[t][s]) { ok = true; break; }
            }
            if (!ok) return false;
        }
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (!rel[i][j]) continue;
                if (!matched(i, j) || !matched(j, i)) {
                    rel[i][j] = false;
                    changed = true;
                }
            }
        }
    }
    return rel[g.u][g.v];
}

bool bisim_naive(const Term& p, const Term& q) { return bisim_naive(Vertex(p), Vertex(q)); }

bool witness_valid(const BisimWitness& w) {
    auto in_relation = [&](const Vertex& a, const Vertex& b) {
        for (const auto& [x, y] : w.pairs)
            if (x == a && y == b) return true;
        return false;
    };
    for (const auto& [x, y] : w.pairs) {
        if (x.is_tick() != y.is_tick()) return false;
        for (const Step& sx : successors(x)) {
            bool ok = false;
            for (const Step& sy : successors(y)) {
                if (sx.label == sy.label && in_relation(sx.target, sy.target)) { ok = true; break; }
            }
            if (!ok) return false;
        }
        for (const Step& sy : successors(y)) {
            bool ok = false;
            for (const Step& sx : successors(x)) {
                if (sx.label == sy.label && in_relation(sx.target, sy.target)) { ok = true; break; }
            }
            if (!ok) return false;
        }
    }
    return true;
}

} // namespace bks
