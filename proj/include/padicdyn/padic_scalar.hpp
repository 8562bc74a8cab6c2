#pragma once

#include <optional>

#include "padicdyn/norm_exp.hpp"
#include "padicdyn/numbers.hpp"

namespace padicdyn {

// Element of Q_p at fixed relative precision: denotes exactly unit * p^valuation,
// unit in [1, p^prec) with p not dividing unit. Exact zero has no unit.
// Operations act on denotations exactly, then truncate the unit to the result
// precision; valuations are always exact. Full cancellation in add/sub throws
// PrecisionExhausted, so inexact zeros are never constructed.
class PadicScalar {
public:
    static PadicScalar zero(BigInt p, long prec);
    static PadicScalar embed(const BigRat& x, const BigInt& p, long prec);
    // Preassembled representation; validates p | unit and ranges.
    static PadicScalar make(BigInt p, BigInt valuation, BigInt unit, long prec);

    bool is_zero() const { return zero_; }
    const BigInt& prime() const { return p_; }
    // valuation of an exact zero is +inf; callers must check is_zero first
    const BigInt& valuation() const;
    const BigInt& unit() const;
    long precision() const { return prec_; }

    PadicScalar add(const PadicScalar& o) const { return add_sub(o, false); }
    PadicScalar sub(const PadicScalar& o) const { return add_sub(o, true); }
    PadicScalar mul(const PadicScalar& o) const;
    PadicScalar div(const PadicScalar& o) const;
    PadicScalar neg() const;
    // Right operand is an exact rational: the precision window comes from
    // *this alone. Used by Horner evaluation with exact coefficients.
    PadicScalar add_rational(const BigRat& x) const;

    NormExp abs() const;       // |z| = p^{-valuation}
    NormExp big_norm() const;  // max(1, |z|)

    // exact rational the representation denotes: unit * p^valuation
    BigRat denotation() const;

    // representation equality (zero flag, valuation, unit, precision);
    // this is the state compared by the trapped-orbit detector
    bool same_state(const PadicScalar& o) const;

private:
    PadicScalar(BigInt p, bool zero, BigInt val, BigInt unit, long prec)
        : p_(std::move(p)), zero_(zero), val_(std::move(val)), unit_(std::move(unit)), prec_(prec) {}

    PadicScalar add_sub(const PadicScalar& o, bool subtract) const;

    BigInt p_;
    bool zero_;
    BigInt val_;
    BigInt unit_;
    long prec_;
};

// rho(z, w) = |z - w| / (max(1,|z|) max(1,|w|)); nullopt is the point at infinity.
NormExp chordal(const std::optional<PadicScalar>& z, const std::optional<PadicScalar>& w);
NormExp chordal(const PadicScalar& z, const PadicScalar& w);

// p^k for k >= 0
BigInt pow_p(const BigInt& p, long k);

}  // namespace padicdyn
