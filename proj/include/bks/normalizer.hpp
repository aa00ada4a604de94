#pragma once

#include "bks/term.hpp"

namespace bks {

/// True iff no t reachable from p in one or more steps satisfies t.q ~ q.
/// This is the premise that lets a common right context be cancelled.
bool congr(const Term& p, const Term& q);

/// Context-relative normal form predicate. On a star p1*p2 it additionally
/// demands congr of the body against the unrolled context.
bool is_nfmult(const Term& p, const Term& q);

/// Normal form predicate.
bool is_nf(const Term& p);

/// Result of one collapse step: either a term that left-multiplies the
/// ambient context r in place of the input, or a replacement s for r itself
/// with r ~ s.0 and s.0 in normal form.
struct NormalizationOutcome {
    enum class Kind { Multiplied, Collapsed };
    Kind kind;
    Term value;

    static NormalizationOutcome multiplied(Term t) {
        return {Kind::Multiplied, std::move(t)};
    }
    static NormalizationOutcome collapsed(Term t) {
        return {Kind::Collapsed, std::move(t)};
    }
};

/// Requires is_nfmult(p.q, r) and congr(q, r). Produces either s with
/// p.q.r ~ s.r, is_nfmult(s,r), congr(s,r) and d(s) <= d(p.q), or s with
/// r ~ s.0, is_nf(s.0) and d(s) <= 1+d(p.q).
NormalizationOutcome congr_mult_step(const Term& p, const Term& q, const Term& r);

/// Requires is_nfmult(p, r). Produces either q with p.r ~ q.r, is_nfmult(q,r),
/// congr(q,r) and d(q) <= d(p), or q with r ~ q.0, is_nf(q.0) and
/// d(q) <= 1+d(p).
NormalizationOutcome congr_ex_step(const Term& p, const Term& r);

/// q with p.r ~ q.r, is_nfmult(q, r) and d(q) <= d(p).
Term normalize_mult(const Term& p, const Term& r);

/// q with p ~ q, is_nf(q) and d(q) <= d(p).
Term normalize(const Term& p);

} // namespace bks
