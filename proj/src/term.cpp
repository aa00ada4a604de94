#include "bks/term.hpp"

#include <algorithm>
#include <cassert>

#include "lexer.hpp"

namespace bks {

namespace {

std::size_t hash_mix(std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::shared_ptr<const TermNode> binary_node(TermKind k, Term l, Term r) {
    std::size_t h = hash_mix(hash_mix(l.hash(), r.hash()), static_cast<std::size_t>(k) + 3);
    std::size_t sz = 1 + l.size() + r.size();
    int dl = star_depth(l);
    int dr = star_depth(r);
    int d = k == TermKind::Star ? std::max(1 + dl, dr) : std::max(dl, dr);
    return std::make_shared<const TermNode>(
        TermNode{k, {}, std::move(l), std::move(r), sz, h, d});
}

} // namespace

bool valid_action_name(std::string_view name) {
    if (name.empty()) return false;
    if (name.front() < 'a' || name.front() > 'z') return false;
    for (char c : name.substr(1)) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

Term Term::zero() {
    static const std::shared_ptr<const TermNode> node = std::make_shared<const TermNode>(
        TermNode{TermKind::Zero, {}, std::nullopt, std::nullopt, 1, hash_mix(0, 1), 0});
    return Term(node);
}

Term Term::act(Action a) {
    if (!valid_action_name(a.name))
        throw std::invalid_argument("invalid action name: '" + a.name + "'");
    std::size_t h = hash_mix(std::hash<std::string>{}(a.name), 2);
    auto node = std::make_shared<const TermNode>(
        TermNode{TermKind::Act, std::move(a), std::nullopt, std::nullopt, 1, h, 0});
    return Term(std::move(node));
}

Term Term::act(std::string name) { return act(Action{std::move(name)}); }

Term Term::plus(Term l, Term r) {
    return Term(binary_node(TermKind::Plus, std::move(l), std::move(r)));
}
Term Term::mult(Term l, Term r) {
    return Term(binary_node(TermKind::Mult, std::move(l), std::move(r)));
}
Term Term::star(Term l, Term r) {
    return Term(binary_node(TermKind::Star, std::move(l), std::move(r)));
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash) return false;
    if (a.node_->kind != b.node_->kind) return false;
    switch (a.node_->kind) {
    case TermKind::Zero: return true;
    case TermKind::Act: return a.node_->act == b.node_->act;
    default:
        return *a.node_->l == *b.node_->l && *a.node_->r == *b.node_->r;
    }
}

Ordering term_order(const Term& a, const Term& b) {
    if (a == b) return Ordering::EQ;
    auto ra = static_cast<int>(a.kind());
    auto rb = static_cast<int>(b.kind());
    if (ra != rb) return ra < rb ? Ordering::LT : Ordering::GT;
    switch (a.kind()) {
    case TermKind::Zero:
        return Ordering::EQ;
    case TermKind::Act: {
        int c = a.action().name.compare(b.action().name);
        return c < 0 ? Ordering::LT : c > 0 ? Ordering::GT : Ordering::EQ;
    }
    default: {
        Ordering l = term_order(a.left(), b.left());
        if (l != Ordering::EQ) return l;
        return term_order(a.right(), b.right());
    }
    }
}

Ordering vertex_order(const Vertex& a, const Vertex& b) {
    if (a.is_tick() && b.is_tick()) return Ordering::EQ;
    if (a.is_tick()) return Ordering::LT;
    if (b.is_tick()) return Ordering::GT;
    return term_order(a.term(), b.term());
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

namespace {

// Recursive descent with a nesting guard; unbounded inputs would otherwise
// exhaust the call stack.
constexpr int kMaxNesting = 10000;

struct TermParser {
    Lexer& lx;
    int depth = 0;

    struct Nested {
        TermParser& p;
        explicit Nested(TermParser& parser) : p(parser) {
            if (++p.depth > kMaxNesting)
                throw SyntaxError("term nesting too deep", p.lx.peek().pos);
        }
        ~Nested() { --p.depth; }
    };

    Term parse_sum() {
        Term t = parse_seq();
        while (lx.peek().type == Tok::Plus) {
            lx.next();
            t = Term::plus(std::move(t), parse_seq());
        }
        return t;
    }

    Term parse_seq() {
        Nested guard(*this);
        Term t = parse_star_chain();
        if (lx.peek().type == Tok::Dot) {
            lx.next();
            return Term::mult(std::move(t), parse_seq());
        }
        return t;
    }

    Term parse_star_chain() {
        Term t = parse_atom();
        while (lx.peek().type == Tok::Star) {
            lx.next();
            t = Term::star(std::move(t), parse_atom());
        }
        return t;
    }

    Term parse_atom() {
        Token t = lx.next();
        switch (t.type) {
        case Tok::Zero:
            return Term::zero();
        case Tok::Ident:
            if (!valid_action_name(t.text))
                throw SyntaxError("invalid action name '" + t.text + "'", t.pos);
            return Term::act(t.text);
        case Tok::LParen: {
            Nested guard(*this);
            Term inner = parse_sum();
            Token close = lx.next();
            if (close.type != Tok::RParen)
                throw SyntaxError("expected ')'", close.pos);
            return inner;
        }
        default:
            throw SyntaxError("expected '0', identifier or '('", t.pos);
        }
    }
};

} // namespace

Term parse_term_stream(Lexer& lx) {
    TermParser p{lx};
    return p.parse_sum();
}

} // namespace detail

Term parse_term(std::string_view text) {
    detail::Lexer lx(text);
    Term t = detail::parse_term_stream(lx);
    if (lx.peek().type != detail::Tok::End)
        throw SyntaxError("unexpected trailing input", lx.peek().pos);
    return t;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

// Precedence levels: plus 1, mult 2, star 3, atoms 4.
int prec(const Term& t) {
    switch (t.kind()) {
    case TermKind::Plus: return 1;
    case TermKind::Mult: return 2;
    case TermKind::Star: return 3;
    default: return 4;
    }
}

void render_into(const Term& t, std::string& out, int min_prec) {
    bool wrap = prec(t) < min_prec;
    if (wrap) out += '(';
    switch (t.kind()) {
    case TermKind::Zero:
        out += '0';
        break;
    case TermKind::Act:
        out += t.action().name;
        break;
    case TermKind::Plus:
        render_into(t.left(), out, 1);
        out += " + ";
        render_into(t.right(), out, 2);
        break;
    case TermKind::Mult:
        render_into(t.left(), out, 3);
        out += " . ";
        render_into(t.right(), out, 2);
        break;
    case TermKind::Star:
        render_into(t.left(), out, 3);
        out += " * ";
        render_into(t.right(), out, 4);
        break;
    }
    if (wrap) out += ')';
}

} // namespace

std::string render(const Term& t) {
    std::string out;
    render_into(t, out, 0);
    return out;
}

std::string render(const Vertex& v) {
    return v.is_tick() ? "TICK" : render(v.term());
}

} // namespace bks
