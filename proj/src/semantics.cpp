#include "bks/semantics.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace bks {

namespace {

std::atomic<std::size_t> g_state_cap{100000};

void collect_steps(const Term& t, std::vector<Step>& out) {
    switch (t.kind()) {
    case TermKind::Zero:
        break;
    case TermKind::Act:
        out.push_back({t.action(), Vertex::tick()});
        break;
    case TermKind::Plus:
        collect_steps(t.left(), out);
        collect_steps(t.right(), out);
        break;
    case TermKind::Mult: {
        std::vector<Step> ls;
        collect_steps(t.left(), ls);
        for (auto& s : ls) {
            if (s.target.is_tick())
                out.push_back({s.label, t.right()});
            else
                out.push_back({s.label, Term::mult(s.target.term(), t.right())});
        }
        break;
    }
    case TermKind::Star: {
        std::vector<Step> ls;
        collect_steps(t.left(), ls);
        for (auto& s : ls) {
            if (s.target.is_tick())
                out.push_back({s.label, t});
            else
                out.push_back({s.label, Term::mult(s.target.term(), t)});
        }
        collect_steps(t.right(), out);
        break;
    }
    }
}

} // namespace

bool step_less(const Step& a, const Step& b) {
    if (a.label.name != b.label.name) return a.label.name < b.label.name;
    return vertex_order(a.target, b.target) == Ordering::LT;
}

std::vector<Step> successors(const Term& t) {
    std::vector<Step> out;
    collect_steps(t, out);
    std::sort(out.begin(), out.end(), step_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Step> successors(const Vertex& v) {
    if (v.is_tick()) return {};
    return successors(v.term());
}

std::vector<Vertex> reachable(const Vertex& root) {
    std::vector<Vertex> order;
    std::unordered_set<Vertex, VertexHash> seen;
    std::deque<Vertex> work;
    const std::size_t cap = state_cap();

    seen.insert(root);
    order.push_back(root);
    work.push_back(root);
    while (!work.empty()) {
        Vertex v = work.front();
        work.pop_front();
        for (const Step& s : successors(v)) {
            if (seen.insert(s.target).second) {
                if (order.size() >= cap)
                    throw CapExceeded("reachable state count exceeds cap");
                order.push_back(s.target);
                work.push_back(s.target);
            }
        }
    }
    return order;
}

std::vector<Vertex> reachable(const Term& p) { return reachable(Vertex(p)); }

std::vector<Term> reachable_plus(const Term& p) {
    std::vector<Term> order;
    std::unordered_set<Term, TermHash> seen;
    std::deque<Term> work;
    const std::size_t cap = state_cap();

    auto visit = [&](const Term& t) {
        if (seen.insert(t).second) {
            if (order.size() >= cap)
                throw CapExceeded("reachable state count exceeds cap");
            order.push_back(t);
            work.push_back(t);
        }
    };

    for (const Step& s : successors(p))
        if (!s.target.is_tick()) visit(s.target.term());
    while (!work.empty()) {
        Term t = work.front();
        work.pop_front();
        for (const Step& s : successors(t))
            if (!s.target.is_tick()) visit(s.target.term());
    }
    return order;
}

Lts build_lts(const Term& p) {
    Lts lts{{}, {}, Vertex(p)};
    lts.states = reachable(p);
    for (const Vertex& v : lts.states)
        for (const Step& s : successors(v))
            lts.transitions.push_back({v, s.label, s.target});
    return lts;
}

std::string dump_lts(const Lts& lts) {
    std::unordered_map<Vertex, std::size_t, VertexHash> index;
    std::string out;
    std::size_t next = 0;
    for (const Vertex& v : lts.states) {
        if (v.is_tick()) continue;
        index.emplace(v, next);
        out += std::to_string(next);
        out += ' ';
        out += render(v.term());
        out += '\n';
        ++next;
    }
    for (const Transition& t : lts.transitions) {
        out += std::to_string(index.at(t.source));
        out += ' ';
        out += t.label.name;
        out += ' ';
        out += t.target.is_tick() ? "TICK" : std::to_string(index.at(t.target));
        out += '\n';
    }
    return out;
}

std::size_t state_cap() { return g_state_cap.load(std::memory_order_relaxed); }
void set_state_cap(std::size_t cap) { g_state_cap.store(cap, std::memory_order_relaxed); }

} // namespace bks
