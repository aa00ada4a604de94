#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "bks/errors.hpp"

namespace bks {

enum class TermKind : unsigned char { Zero, Act, Plus, Mult, Star };

/// Actions are bare identifiers; two actions are equal iff their names are
/// byte-equal. The action alphabet is open: anything that lexes as an
/// identifier is an action.
struct Action {
    std::string name;

    friend bool operator==(const Action&, const Action&) = default;
    friend auto operator<=>(const Action&, const Action&) = default;
};

/// True iff `name` is a lowercase letter followed by letters, digits or
/// underscores.
bool valid_action_name(std::string_view name);

struct TermNode;

/// Immutable term of the process algebra: 0, an action, p+q, p.q or the
/// binary star p*q. Value semantics, structurally shared underneath;
/// operator== is exact syntactic equality.
class Term {
public:
    static Term zero();
    static Term act(std::string name);
    static Term act(Action a);
    static Term plus(Term l, Term r);
    static Term mult(Term l, Term r);
    static Term star(Term l, Term r);

    TermKind kind() const;
    bool is(TermKind k) const { return kind() == k; }

    /// Valid for Act terms only.
    const Action& action() const;
    /// Valid for Plus/Mult/Star terms only.
    const Term& left() const;
    const Term& right() const;

    /// Number of syntax tree nodes.
    std::size_t size() const;
    std::size_t hash() const;

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}

    std::shared_ptr<const TermNode> node_;

    friend int star_depth(const Term&);
};

struct TermNode {
    TermKind kind;
    Action act;
    std::optional<Term> l, r;
    std::size_t size;
    std::size_t hash;
    int depth; // star nesting depth
};

inline TermKind Term::kind() const { return node_->kind; }
inline const Action& Term::action() const { return node_->act; }
inline const Term& Term::left() const { return *node_->l; }
inline const Term& Term::right() const { return *node_->r; }
inline std::size_t Term::size() const { return node_->size; }
inline std::size_t Term::hash() const { return node_->hash; }
inline int star_depth(const Term& t) { return t.node_->depth; }

enum class Ordering { LT, EQ, GT };

/// Total order on terms: constructor rank (0 < action < + < . < *), then
/// lexicographically on action names / children. EQ iff syntactically equal.
Ordering term_order(const Term& a, const Term& b);
inline bool term_less(const Term& a, const Term& b) {
    return term_order(a, b) == Ordering::LT;
}

/// Parses the concrete syntax. Grammar, loosest first:
///   term := seq ("+" seq)*          left associative
///   seq  := star ("." seq)?         right associative
///   star := atom ("*" atom)*        left associative
///   atom := "0" | ident | "(" term ")"
/// Throws SyntaxError on malformed input.
Term parse_term(std::string_view text);

/// Minimal-parenthesization rendering; parse_term(render(t)) == t.
std::string render(const Term& t);

/// A vertex is either a term or the termination symbol (tick). Tick has no
/// outgoing transitions and is only bisimilar to itself.
class Vertex {
public:
    static Vertex tick() { return Vertex(); }
    Vertex(Term t) : t_(std::move(t)) {}

    bool is_tick() const { return !t_.has_value(); }
    const Term& term() const { return *t_; }

    std::size_t hash() const { return t_ ? t_->hash() : 0x9e3779b97f4a7c15ull; }

    friend bool operator==(const Vertex& a, const Vertex& b) {
        if (a.is_tick() || b.is_tick()) return a.is_tick() == b.is_tick();
        return *a.t_ == *b.t_;
    }
    friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }

private:
    Vertex() = default;
    std::optional<Term> t_;
};

/// Total order on vertices: tick first, then term_order.
Ordering vertex_order(const Vertex& a, const Vertex& b);

/// Renders a vertex; tick prints as "TICK".
std::string render(const Vertex& v);

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct VertexHash {
    std::size_t operator()(const Vertex& v) const { return v.hash(); }
};

} // namespace bks
