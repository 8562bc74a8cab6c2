#include "padicdyn/disk.hpp"

#include <random>

namespace padicdyn {

bool contains_zero(const UltraDisk& D) {
    return rational_norm(D.center, D.p) <= D.radius;
}

bool disk_contains(const UltraDisk& D1, const UltraDisk& D2) {
    if (D1.p != D2.p) throw Error("disk_contains: mixed primes");
    return rational_norm(D2.center - D1.center, D1.p) <= D1.radius && D2.radius <= D1.radius;
}

bool point_in_disk(const UltraDisk& D, const BigRat& z) {
    return rational_norm(z - D.center, D.p) <= D.radius;
}

UltraDisk image_disk(const Poly& f, const UltraDisk& D) {
    f.require_dynamical("image_disk");
    if (f.prime() != D.p) throw Error("image_disk: mixed primes");
    std::vector<BigRat> c = taylor_shift(f, D.center);
    NormExp s = NormExp::of_zero();
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        NormExp term = rational_norm(c[i], D.p).mul(D.radius.pow(BigInt(i)));
        s = norm_max(s, term);
    }
    // c_d = a_d != 0, so s > 0 whenever d >= 1
    if (s.is_zero()) throw InvariantViolated("image_disk: zero image radius");
    return UltraDisk(D.p, std::move(c[0]), std::move(s));
}

namespace {

long rational_bits(const BigRat& q) {
    return static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(numerator(q)) + 1) +
                             boost::multiprecision::msb(denominator(q) + 1)) + 2;
}

}  // namespace

DiskOrbit orbit_disks(const Poly& f, const UltraDisk& U, long budget,
                      const DiskOrbitOptions& opts) {
    f.require_dynamical("orbit_disks");
    if (f.prime() != U.p) throw Error("orbit_disks: mixed primes");
    if (budget < 1) throw Error("orbit_disks: budget must be >= 1");

    NormExp r_esc = escape_radius(f);
    DiskOrbit orbit;
    orbit.budget = budget;
    orbit.disks.push_back(U);

    for (long k = 0;; ++k) {
        const UltraDisk& D = orbit.disks.back();

        if (contains_zero(D)) {
            orbit.events.push_back({OrbitEventKind::ZeroHit, k, -1});
            orbit.stop_reason = OrbitStopReason::Event;
            return orbit;
        }
        NormExp center_norm = rational_norm(D.center, D.p);
        if (center_norm > r_esc && D.radius < center_norm) {
            orbit.events.push_back({OrbitEventKind::Escaped, k, -1});
            orbit.stop_reason = OrbitStopReason::Event;
            return orbit;
        }
        for (long j = 0; j < k; ++j) {
            if (disk_contains(orbit.disks[j], D)) {
                orbit.events.push_back({OrbitEventKind::ContainedInEarlier, k, j});
                orbit.stop_reason = OrbitStopReason::Event;
                return orbit;
            }
        }

        if (k == budget) {
            orbit.stop_reason = OrbitStopReason::BudgetExhausted;
            return orbit;
        }
        if (rational_bits(D.center) > opts.max_center_bits) {
            orbit.stop_reason = OrbitStopReason::SizeLimit;
            return orbit;
        }
        orbit.disks.push_back(image_disk(f, D));
    }
}

std::vector<BigRat> sample_disk_points(const UltraDisk& D, int count, std::uint64_t seed) {
    // scale exponent m: |p^m| = p^-m <= r, i.e. m >= -radius.exp
    BigInt m = ceil_rat(-D.radius.exp);
    BigRat scale;
    if (m >= 0)
        scale = BigRat(pow_p(D.p, static_cast<long>(m)));
    else
        scale = BigRat(1, pow_p(D.p, static_cast<long>(-m)));

    // offsets u drawn from [0, p^8): every center + u*scale lies in D
    BigInt modulus = pow_p(D.p, 8);
    std::uint64_t mod64 = static_cast<std::uint64_t>(modulus);
    std::mt19937_64 rng(seed);
    std::vector<BigRat> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) {
        BigInt u(static_cast<std::uint64_t>(rng() % mod64));
        pts.push_back(D.center + BigRat(u) * scale);
    }
    return pts;
}

}  // namespace padicdyn
