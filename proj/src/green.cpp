#include "padicdyn/green.hpp"

#include "padicdyn/montel.hpp"

namespace padicdyn {

namespace {

// big-norm exponent max(0, -v) of a scalar, exact
BigRat big_exp(const PadicScalar& z) {
    NormExp e = z.big_norm();
    return e.exp;
}

}  // namespace

std::vector<SeriesTerm> green_series_prefix(const Poly& f, const PadicScalar& z, long n) {
    f.require_dynamical("green_series_prefix");
    long d = f.degree();
    std::vector<OrbitPoint> orbit = iterate(f, z, n);
    std::vector<SeriesTerm> terms;
    terms.reserve(n);
    BigRat dk = 1;  // d^k
    for (long k = 0; k < n; ++k) {
        BigRat ek = big_exp(orbit[k].value);
        BigRat ek1 = big_exp(orbit[k + 1].value);
        terms.push_back({k, (ek1 / BigRat(d) - ek) / dk});
        dk *= d;
    }
    return terms;
}

GreenValue green_value(const Poly& f, const PadicScalar& z, const BigRat& eps,
                       const GreenOptions& opts) {
    f.require_dynamical("green_value");
    if (eps <= 0) throw Error("green_value: epsilon must be positive");
    long d = f.degree();
    const BigInt& p = f.prime();

    BigRat e_r = escape_radius(f).exp;
    BigRat S = sup_norm_on_ball(f, NormExp::from_exp(e_r)).exp;
    bool ball_invariant = S <= e_r;
    BigRat L = -BigRat(*vp(f.leading(), p));  // log_p |a_d|
    BigRat E = e_r;                           // = max(0, e_r, S); e_r >= 0 already
    if (S > E) E = S;

    // smallest n with 2*B_n <= eps, B_n = 2 E d / ((d-1) d^n)
    BigRat B = 2 * E * BigRat(d) / BigRat(d - 1);  // B_0
    long n_stop = 0;
    while (2 * B > eps) {
        B /= d;
        ++n_stop;
    }

    BigRat e0 = big_exp(z);
    std::vector<PadicScalar> states;
    PadicScalar cur = z;
    BigRat dk = 1;  // d^k

    for (long k = 0;; ++k) {
        if (!opts.force_truncated) {
            // escape: |f^k(z)| > r_f (r_f >= 1, so the big norm agrees)
            if (!cur.is_zero() && cur.abs().exp > e_r) {
                BigRat ek = big_exp(cur);
                BigRat g = ek / dk - e0 + L / (dk * BigRat(d - 1));
                return GreenValue{true, g, g, GreenProvenance::EscapeTail, k};
            }
            // trapped via ball invariance: the r_f-ball maps into itself
            if (ball_invariant && (cur.is_zero() || cur.abs().exp <= e_r)) {
                return GreenValue{true, -e0, -e0, GreenProvenance::TrappedOrbit, k};
            }
            // trapped via state repeat: the evaluation map is deterministic on
            // representations, so a repeat makes the state orbit periodic and
            // the (exact) valuations bounded
            for (const PadicScalar& seen : states) {
                if (cur.same_state(seen)) {
                    return GreenValue{true, -e0, -e0, GreenProvenance::TrappedOrbit, k};
                }
            }
            states.push_back(cur);
        }

        if (k == n_stop) {
            BigRat prefix = big_exp(cur) / dk - e0;
            return GreenValue{false, prefix - B, prefix + B, GreenProvenance::Truncated, k};
        }

        try {
            cur = eval(f, cur);
        } catch (PrecisionExhausted& e) {
            e.index = static_cast<std::size_t>(k + 1);
            throw;
        }
        dk *= d;
    }
}

GreenValue green_value(const Poly& f, const BigRat& z, const BigRat& eps, long precision,
                       const GreenOptions& opts) {
    PadicScalar zs = PadicScalar::embed(z, f.prime(), precision + opts.guard_digits);
    return green_value(f, zs, eps, opts);
}

bool green_functional_check(const Poly& f, const PadicScalar& z) {
    f.require_dynamical("green_functional_check");
    BigRat eps(1);
    GreenValue gz = green_value(f, z, eps);
    PadicScalar fz = eval(f, z);
    GreenValue gfz = green_value(f, fz, eps);
    if (!gz.exact || !gfz.exact)
        throw NotExact("green_functional_check: interval-valued green value");
    BigRat lhs = gfz.lo + big_exp(fz);
    BigRat rhs = BigRat(f.degree()) * (gz.lo + big_exp(z));
    return lhs == rhs;
}

GreenOnDisk green_on_disk(const Poly& f, const UltraDisk& U, const MontelCertificate& cert,
                          const BigRat& eps, long precision, const GreenOptions& opts) {
    f.require_dynamical("green_on_disk");
    if (cert.status != CertStatus::Certified)
        throw CertificateRequired("green_on_disk: certificate is not Certified");
    if (cert.omitted_point != 0 || cert.conjugated)
        throw CertificateRequired("green_on_disk: certificate must omit the point 0");
    if (cert.original.prime() != f.prime() || cert.original.coeffs() != f.coeffs())
        throw CertificateRequired("green_on_disk: certificate is for a different polynomial");
    if (cert.orbit.disks.empty() || cert.orbit.disks[0].center != U.center ||
        !(cert.orbit.disks[0].radius == U.radius))
        throw CertificateRequired("green_on_disk: certificate is for a different disk");

    GreenOnDisk out{green_value(f, U.center, eps, precision, opts), {}, {}};
    out.spot_points = sample_disk_points(U, 3, 0x9e3779b97f4a7c15ull);
    for (const BigRat& pt : out.spot_points) {
        GreenValue gv = green_value(f, pt, eps, precision, opts);
        bool agree;
        if (out.value.exact && gv.exact) {
            agree = gv.lo == out.value.lo;
        } else {
            // interval overlap: both enclose the common constant value
            agree = out.value.lo <= gv.hi && gv.lo <= out.value.hi;
        }
        if (!agree)
            throw InvariantViolated("green_on_disk: spot check at " + rational_to_string(pt) +
                                    " disagrees with the center value");
        out.spot_values.push_back(std::move(gv));
    }
    return out;
}

}  // namespace padicdyn
