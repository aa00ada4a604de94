#include "bks/proof.hpp"

#include <cassert>
#include <limits>
#include <unordered_map>
#include <utility>

#include "lexer.hpp"

namespace bks {

struct ProofNode {
    Rule rule = Rule::Refl;
    std::vector<Term> terms;
    std::vector<Proof> premises;
    std::uint64_t nodes = 1;

    // Iterative teardown; long transitivity chains would otherwise recurse
    // once per link on destruction.
    ~ProofNode() {
        std::vector<Proof> stack;
        stack.swap(premises);
        while (!stack.empty()) {
            Proof p = std::move(stack.back());
            stack.pop_back();
            if (p.node_ && p.node_.use_count() == 1) {
                auto* n = const_cast<ProofNode*>(p.node_.get());
                for (auto& c : n->premises) stack.push_back(std::move(c));
                n->premises.clear();
            }
        }
    }
};

namespace {

constexpr std::uint64_t kNodeSaturation = std::uint64_t(1) << 62;

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s < a || s > kNodeSaturation) return kNodeSaturation;
    return s;
}

struct RuleSpec {
    Rule rule;
    int nterms;
    int nproofs;
};

const std::pair<const char*, RuleSpec> kRuleTable[] = {
    {"refl", {Rule::Refl, 1, 0}},       {"symm", {Rule::Symm, 0, 1}},
    {"trans", {Rule::Trans, 0, 2}},     {"comp-plus", {Rule::CompPlus, 0, 2}},
    {"comp-mult", {Rule::CompMult, 0, 2}}, {"comp-star", {Rule::CompStar, 0, 2}},
    {"b1", {Rule::B1, 2, 0}},           {"b2", {Rule::B2, 3, 0}},
    {"b3", {Rule::B3, 1, 0}},           {"b4", {Rule::B4, 3, 0}},
    {"b5", {Rule::B5, 3, 0}},           {"b6", {Rule::B6, 1, 0}},
    {"b7", {Rule::B7, 1, 0}},           {"bks1", {Rule::BKS1, 2, 0}},
    {"bks2", {Rule::BKS2, 3, 0}},       {"rsp", {Rule::RSP, 0, 1}},
};

const RuleSpec& spec_of(Rule r) {
    for (const auto& [name, spec] : kRuleTable)
        if (spec.rule == r) return spec;
    throw std::logic_error("unknown rule");
}

const RuleSpec* spec_by_name(std::string_view name) {
    for (const auto& [n, spec] : kRuleTable)
        if (name == n) return &spec;
    return nullptr;
}

} // namespace

const char* rule_name(Rule r) {
    for (const auto& [name, spec] : kRuleTable)
        if (spec.rule == r) return name;
    return "?";
}

Proof Proof::make(Rule r, std::vector<Term> terms, std::vector<Proof> premises) {
    const RuleSpec& spec = spec_of(r);
    assert(static_cast<int>(terms.size()) == spec.nterms);
    assert(static_cast<int>(premises.size()) == spec.nproofs);
    (void)spec;
    std::uint64_t nodes = 1;
    for (const Proof& p : premises) nodes = saturating_add(nodes, p.node_count());
    // Created non-const (and only exposed as const) so the teardown in
    // ~ProofNode may legally steal children.
    auto node = std::make_shared<ProofNode>();
    node->rule = r;
    node->terms = std::move(terms);
    node->premises = std::move(premises);
    node->nodes = nodes;
    return Proof(std::move(node));
}

Proof Proof::refl(Term x) { return make(Rule::Refl, {std::move(x)}, {}); }
Proof Proof::symm(Proof p) { return make(Rule::Symm, {}, {std::move(p)}); }
Proof Proof::trans(Proof p, Proof q) { return make(Rule::Trans, {}, {std::move(p), std::move(q)}); }
Proof Proof::comp_plus(Proof p, Proof q) {
    return make(Rule::CompPlus, {}, {std::move(p), std::move(q)});
}
Proof Proof::comp_mult(Proof p, Proof q) {
    return make(Rule::CompMult, {}, {std::move(p), std::move(q)});
}
Proof Proof::comp_star(Proof p, Proof q) {
    return make(Rule::CompStar, {}, {std::move(p), std::move(q)});
}
Proof Proof::b1(Term x, Term y) { return make(Rule::B1, {std::move(x), std::move(y)}, {}); }
Proof Proof::b2(Term x, Term y, Term z) {
    return make(Rule::B2, {std::move(x), std::move(y), std::move(z)}, {});
}
Proof Proof::b3(Term x) { return make(Rule::B3, {std::move(x)}, {}); }
Proof Proof::b4(Term x, Term y, Term z) {
    return make(Rule::B4, {std::move(x), std::move(y), std::move(z)}, {});
}
Proof Proof::b5(Term x, Term y, Term z) {
    return make(Rule::B5, {std::move(x), std::move(y), std::move(z)}, {});
}
Proof Proof::b6(Term x) { return make(Rule::B6, {std::move(x)}, {}); }
Proof Proof::b7(Term x) { return make(Rule::B7, {std::move(x)}, {}); }
Proof Proof::bks1(Term x, Term y) { return make(Rule::BKS1, {std::move(x), std::move(y)}, {}); }
Proof Proof::bks2(Term x, Term y, Term z) {
    return make(Rule::BKS2, {std::move(x), std::move(y), std::move(z)}, {});
}
Proof Proof::rsp(Proof p) { return make(Rule::RSP, {}, {std::move(p)}); }

Rule Proof::rule() const { return node_->rule; }
const std::vector<Proof>& Proof::premises() const { return node_->premises; }
const std::vector<Term>& Proof::terms() const { return node_->terms; }
std::uint64_t Proof::node_count() const { return node_->nodes; }

bool operator==(const Proof& a, const Proof& b) {
    if (a.node_ == b.node_) return true;
    if (a.rule() != b.rule()) return false;
    if (a.terms() != b.terms()) return false;
    const auto& pa = a.premises();
    const auto& pb = b.premises();
    if (pa.size() != pb.size()) return false;
    for (std::size_t i = 0; i < pa.size(); ++i)
        if (!(pa[i] == pb[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Checking
// ---------------------------------------------------------------------------

namespace {

Conclusion axiom_conclusion(Rule r, const std::vector<Term>& t) {
    const Term zero = Term::zero();
    switch (r) {
    case Rule::Refl:
        return {t[0], t[0]};
    case Rule::B1:
        return {Term::plus(t[0], t[1]), Term::plus(t[1], t[0])};
    case Rule::B2:
        return {Term::plus(Term::plus(t[0], t[1]), t[2]),
                Term::plus(t[0], Term::plus(t[1], t[2]))};
    case Rule::B3:
        return {Term::plus(t[0], t[0]), t[0]};
    case Rule::B4:
        return {Term::mult(Term::plus(t[0], t[1]), t[2]),
                Term::plus(Term::mult(t[0], t[2]), Term::mult(t[1], t[2]))};
    case Rule::B5:
        return {Term::mult(Term::mult(t[0], t[1]), t[2]),
                Term::mult(t[0], Term::mult(t[1], t[2]))};
    case Rule::B6:
        return {Term::plus(t[0], zero), t[0]};
    case Rule::B7:
        return {Term::mult(zero, t[0]), zero};
    case Rule::BKS1:
        return {Term::plus(Term::mult(t[0], Term::star(t[0], t[1])), t[1]),
                Term::star(t[0], t[1])};
    case Rule::BKS2:
        return {Term::mult(Term::star(t[0], t[1]), t[2]),
                Term::star(t[0], Term::mult(t[1], t[2]))};
    default:
        throw std::logic_error("not an axiom rule");
    }
}

struct CheckFrame {
    const ProofNode* node;
    std::size_t next_premise = 0;
};

std::string frame_path(const std::vector<CheckFrame>& stack) {
    std::string path;
    for (std::size_t i = 0; i < stack.size(); ++i) {
        if (i > 0) {
            path += '.';
            path += std::to_string(stack[i - 1].next_premise - 1);
            path += '/';
        }
        path += rule_name(stack[i].node->rule);
    }
    return path.empty() ? "root" : path;
}

} // namespace

Conclusion conclusion(const Proof& p) {
    std::unordered_map<const ProofNode*, Conclusion> memo;
    std::vector<CheckFrame> stack;
    stack.push_back({p.node_.get()});
    while (!stack.empty()) {
        CheckFrame& f = stack.back();
        const ProofNode* n = f.node;
        if (f.next_premise < n->premises.size()) {
            const ProofNode* child = n->premises[f.next_premise].node_.get();
            ++f.next_premise;
            if (!memo.count(child)) stack.push_back({child});
            continue;
        }
        Conclusion c{Term::zero(), Term::zero()};
        switch (n->rule) {
        case Rule::Symm: {
            const Conclusion& a = memo.at(n->premises[0].node_.get());
            c = {a.rhs, a.lhs};
            break;
        }
        case Rule::Trans: {
            const Conclusion& a = memo.at(n->premises[0].node_.get());
            const Conclusion& b = memo.at(n->premises[1].node_.get());
            if (a.rhs != b.lhs)
                throw IllFormed("transitivity endpoints differ: '" + render(a.rhs) +
                                    "' vs '" + render(b.lhs) + "'",
                                frame_path(stack));
            c = {a.lhs, b.rhs};
            break;
        }
        case Rule::CompPlus:
        case Rule::CompMult:
        case Rule::CompStar: {
            const Conclusion& a = memo.at(n->premises[0].node_.get());
            const Conclusion& b = memo.at(n->premises[1].node_.get());
            auto combine = n->rule == Rule::CompPlus  ? Term::plus
                           : n->rule == Rule::CompMult ? Term::mult
                                                       : Term::star;
            c = {combine(a.lhs, b.lhs), combine(a.rhs, b.rhs)};
            break;
        }
        case Rule::RSP: {
            const Conclusion& a = memo.at(n->premises[0].node_.get());
            // Premise must conclude (x, y.x + z), matched structurally.
            const Term& rhs = a.rhs;
            bool ok = rhs.is(TermKind::Plus) && rhs.left().is(TermKind::Mult) &&
                      rhs.left().right() == a.lhs;
            if (!ok)
                throw IllFormed("premise of rsp does not conclude a pair of shape "
                                "(x, y . x + z): got '" +
                                    render(a.lhs) + "' = '" + render(rhs) + "'",
                                frame_path(stack));
            c = {a.lhs, Term::star(rhs.left().left(), rhs.right())};
            break;
        }
        default:
            c = axiom_conclusion(n->rule, n->terms);
            break;
        }
        memo.emplace(n, std::move(c));
        stack.pop_back();
    }
    return memo.at(p.node_.get());
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string serialize(const Proof& p) {
    std::string out;
    struct Frame {
        const ProofNode* node;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    auto open = [&](const ProofNode* n) {
        out += '(';
        out += rule_name(n->rule);
        for (const Term& t : n->terms) {
            out += ' ';
            out += render(t);
        }
        stack.push_back({n});
    };
    open(p.node_.get());
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < f.node->premises.size()) {
            const ProofNode* child = f.node->premises[f.next].node_.get();
            ++f.next;
            out += ' ';
            open(child);
            continue;
        }
        out += ')';
        stack.pop_back();
    }
    return out;
}

Proof parse_proof(std::string_view text) {
    detail::Lexer lx(text);

    struct Building {
        const RuleSpec* spec;
        std::vector<Term> terms;
        std::vector<Proof> premises;
    };
    std::vector<Building> stack;

    auto read_head = [&]() -> Building {
        detail::Token open = lx.next();
        if (open.type != detail::Tok::LParen)
            throw SyntaxError("expected '('", open.pos);
        detail::Token kw = lx.next();
        if (kw.type != detail::Tok::Ident)
            throw SyntaxError("expected a rule keyword", kw.pos);
        const RuleSpec* spec = spec_by_name(kw.text);
        if (!spec) throw SyntaxError("unknown rule '" + kw.text + "'", kw.pos);
        Building b{spec, {}, {}};
        for (int i = 0; i < spec->nterms; ++i)
            b.terms.push_back(detail::parse_term_stream(lx));
        return b;
    };

    auto close_paren = [&]() {
        detail::Token t = lx.next();
        if (t.type != detail::Tok::RParen)
            throw SyntaxError("expected ')'", t.pos);
    };

    auto build = [](Building&& b) {
        return Proof::make(b.spec->rule, std::move(b.terms), std::move(b.premises));
    };

    for (;;) {
        Building b = read_head();
        if (b.spec->nproofs > 0) {
            stack.push_back(std::move(b));
            continue;
        }
        close_paren();
        Proof done = build(std::move(b));
        for (;;) {
            if (stack.empty()) {
                if (lx.peek().type != detail::Tok::End)
                    throw SyntaxError("unexpected trailing input", lx.peek().pos);
                return done;
            }
            stack.back().premises.push_back(std::move(done));
            if (static_cast<int>(stack.back().premises.size()) < stack.back().spec->nproofs)
                break; // parse the next sibling
            close_paren();
            done = build(std::move(stack.back()));
            stack.pop_back();
        }
    }
}

} // namespace bks
