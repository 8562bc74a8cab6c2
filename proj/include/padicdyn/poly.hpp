#pragma once

#include <vector>

#include "padicdyn/padic_scalar.hpp"

namespace padicdyn {

// Polynomial over Q_p with exact rational coefficients, low degree first.
class Poly {
public:
    Poly(BigInt p, std::vector<BigRat> coeffs);

    const BigInt& prime() const { return p_; }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const BigRat& leading() const { return coeffs_.back(); }

    // guard for dynamical operations (iteration, escape, certification)
    void require_dynamical(const char* op) const;

private:
    BigInt p_;
    std::vector<BigRat> coeffs_;
};

struct OrbitPoint {
    long index;
    PadicScalar value;
    NormExp norm;  // abs(value), exact
};

PadicScalar eval(const Poly& f, const PadicScalar& z);
BigRat eval(const Poly& f, const BigRat& x);

// Coefficients of f(a + w): result[0] = f(a), result[i] = c_i for i >= 1,
// so f(a + w) - f(a) = sum_{i>=1} c_i w^i. Exact over the rationals.
std::vector<BigRat> taylor_shift(const Poly& f, const BigRat& a);
// Same shift with a scalar center, by synthetic division in scalar arithmetic.
std::vector<PadicScalar> taylor_shift(const Poly& f, const PadicScalar& a);

// forward orbit z, f(z), ..., f^n(z); throws PrecisionExhausted (with the
// failing index) if a value's digits cancel out along the way
std::vector<OrbitPoint> iterate(const Poly& f, const PadicScalar& z, long n);

// F(w) = f(w + alpha) - alpha, so F-orbits of z - alpha mirror f-orbits of z
// and avoidance of alpha becomes avoidance of 0.
Poly conjugate_translate(const Poly& f, const BigRat& alpha);

// r_f = max(1, max_{i<d} (|a_i|/|a_d|)^{1/(d-i)}, |a_d|^{-1/(d-1)}).
// Contract: |z| > r_f implies |f(z)| = |a_d| |z|^d > |z|.
NormExp escape_radius(const Poly& f);

// exponent bound for sup_{|z| <= r} |f(z)|: max_i |a_i| r^i (Gauss norm on the ball)
NormExp sup_norm_on_ball(const Poly& f, const NormExp& r);

}  // namespace padicdyn
