#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bks/term.hpp"

namespace bks {

/// Derivation rules of the equational system: closure rules, the axiom
/// schemas B1-B7/BKS1/BKS2 carrying their instantiating terms, and the
/// conditional rule RSP.
enum class Rule : unsigned char {
    Refl, Symm, Trans, CompPlus, CompMult, CompStar,
    B1, B2, B3, B4, B5, B6, B7, BKS1, BKS2, RSP
};

const char* rule_name(Rule r);

struct Conclusion {
    Term lhs, rhs;

    friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

/// Raised by the checker on a proof tree whose rule applications do not fit
/// together; `path` locates the offending node.
class IllFormed : public std::runtime_error {
public:
    IllFormed(const std::string& reason, const std::string& path)
        : std::runtime_error(reason + " [at " + path + "]"), reason_(reason), path_(path) {}

    const std::string& reason() const { return reason_; }
    const std::string& path() const { return path_; }

private:
    std::string reason_;
    std::string path_;
};

struct ProofNode;

/// An immutable derivation tree. Construction is unchecked; well-formedness
/// is exactly "conclusion() succeeds".
class Proof {
public:
    static Proof refl(Term x);
    static Proof symm(Proof p);
    static Proof trans(Proof p, Proof q);
    static Proof comp_plus(Proof p, Proof q);
    static Proof comp_mult(Proof p, Proof q);
    static Proof comp_star(Proof p, Proof q);
    static Proof b1(Term x, Term y);
    static Proof b2(Term x, Term y, Term z);
    static Proof b3(Term x);
    static Proof b4(Term x, Term y, Term z);
    static Proof b5(Term x, Term y, Term z);
    static Proof b6(Term x);
    static Proof b7(Term x);
    static Proof bks1(Term x, Term y);
    static Proof bks2(Term x, Term y, Term z);
    static Proof rsp(Proof p);

    Rule rule() const;
    const std::vector<Proof>& premises() const;
    const std::vector<Term>& terms() const;

    /// Tree node count (shared subtrees counted once per occurrence),
    /// saturating.
    std::uint64_t node_count() const;

    friend bool operator==(const Proof& a, const Proof& b);
    friend bool operator!=(const Proof& a, const Proof& b) { return !(a == b); }

private:
    explicit Proof(std::shared_ptr<const ProofNode> n) : node_(std::move(n)) {}
    static Proof make(Rule r, std::vector<Term> terms, std::vector<Proof> premises);

    std::shared_ptr<const ProofNode> node_;

    friend struct ProofNode;
    friend Conclusion conclusion(const Proof&);
    friend std::string serialize(const Proof&);
    friend Proof parse_proof(std::string_view);
};

/// Computes the certificate's conclusion bottom-up; throws IllFormed when a
/// transitivity joint or the RSP premise shape does not fit.
Conclusion conclusion(const Proof& p);

/// Canonical s-expression form, e.g. "(trans (b3 a) (refl a))".
std::string serialize(const Proof& p);

/// Inverse of serialize. Terms inside certificates use the term grammar and
/// are consumed greedily, so compound arguments may be parenthesized but the
/// output of serialize parses back unambiguously.
Proof parse_proof(std::string_view text);

} // namespace bks
