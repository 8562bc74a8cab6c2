#pragma once

#include "padicdyn/disk.hpp"
#include "padicdyn/poly.hpp"

namespace padicdyn {

enum class GreenProvenance { EscapeTail, TrappedOrbit, Truncated };

// Value of the Green function as a rational multiple of log p:
// the semantic value lies in [lo*log p, hi*log p]; lo == hi when exact.
struct GreenValue {
    bool exact;
    BigRat lo;
    BigRat hi;
    GreenProvenance provenance;
    long n;  // escape index / detection step / truncation depth
};

struct SeriesTerm {
    long k;
    BigRat value;  // q_k with q_k*log p the k-th summand
};

struct GreenOptions {
    // digits added on top of the requested precision when embedding rational
    // entry points; headroom for cancellation along the orbit
    long guard_digits = 16;
    // compute the truncated interval even when an exact branch applies
    bool force_truncated = false;
};

// terms q_k, k < n, with q_k = e_{k+1}/d^{k+1} - e_k/d^k (big-norm exponents);
// the prefix sum telescopes to e_n/d^n - e_0
std::vector<SeriesTerm> green_series_prefix(const Poly& f, const PadicScalar& z, long n);

// G_f(z) with one of three certified outcomes:
//  escape     |f^n(z)| > r_f: tail is exactly log|a_d|/(d^n(d-1)), value exact
//  trapped    orbit provably stays in a bounded region, value exactly -log||z||;
//             proof is either ball invariance (sup |f| on the r_f-ball <= r_f)
//             or a repeat of the full scalar state (deterministic map, so the
//             state orbit is periodic and norms stay bounded)
//  truncated  interval prefix +- B_n once 2*B_n <= eps,
//             B_n = 2*E*d/((d-1)*d^n), E = max(0, e_r, sup exponent on r_f-ball)
GreenValue green_value(const Poly& f, const PadicScalar& z, const BigRat& eps,
                       const GreenOptions& opts = {});

// rational entry point: embeds z at precision + guard digits
GreenValue green_value(const Poly& f, const BigRat& z, const BigRat& eps, long precision,
                       const GreenOptions& opts = {});

// exact identity G(f(z)) + log||f(z)|| = d*(G(z) + log||z||); both values must
// come out Exact, else NotExact
bool green_functional_check(const Poly& f, const PadicScalar& z);

struct MontelCertificate;

struct GreenOnDisk {
    GreenValue value;  // the constant value of G_f on the disk
    std::vector<BigRat> spot_points;
    std::vector<GreenValue> spot_values;
};

// the constant Green value on a certified disk (certificate for omitted point
// 0, not conjugated), spot-verified at 3 sampled rational points
GreenOnDisk green_on_disk(const Poly& f, const UltraDisk& U, const MontelCertificate& cert,
                          const BigRat& eps, long precision, const GreenOptions& opts = {});

}  // namespace padicdyn
