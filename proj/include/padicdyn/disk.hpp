#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padicdyn/poly.hpp"

namespace padicdyn {

// Closed ultrametric disk D(center, radius) = { z : |z - center| <= radius }.
// Center exact rational, radius an exact power of p (positive).
struct UltraDisk {
    BigInt p;
    BigRat center;
    NormExp radius;

    UltraDisk(BigInt prime, BigRat c, NormExp r)
        : p(std::move(prime)), center(std::move(c)), radius(std::move(r)) {
        if (radius.is_zero()) throw Error("UltraDisk: radius must be positive");
    }
};

enum class OrbitEventKind { ZeroHit, Escaped, ContainedInEarlier };

struct OrbitEvent {
    OrbitEventKind kind;
    long index;             // k where the event fired
    long contained_in = -1; // j for ContainedInEarlier
};

enum class OrbitStopReason { Event, BudgetExhausted, SizeLimit };

struct DiskOrbit {
    std::vector<UltraDisk> disks;
    std::vector<OrbitEvent> events;
    OrbitStopReason stop_reason = OrbitStopReason::BudgetExhausted;
    long budget = 0;
};

struct DiskOrbitOptions {
    // stop (inconclusive) once a center's numerator+denominator exceed this
    // many bits; centers can square in height every step
    long max_center_bits = 1000000;
};

bool contains_zero(const UltraDisk& D);

// D2 subset of D1: |a2 - a1| <= r1 and r2 <= r1
bool disk_contains(const UltraDisk& D1, const UltraDisk& D2);

bool point_in_disk(const UltraDisk& D, const BigRat& z);

// f(D(a,r)) subset of D(f(a), s), s = max_{i>=1} |c_i| r^i (Gauss norm of the shift)
UltraDisk image_disk(const Poly& f, const UltraDisk& D);

// D_0 = U, D_{k+1} = image_disk(f, D_k); stops at the first of
// ZeroHit / Escaped / ContainedInEarlier, or at the budget
DiskOrbit orbit_disks(const Poly& f, const UltraDisk& U, long budget,
                      const DiskOrbitOptions& opts = {});

// deterministic rational sample points of D (center + u p^m with p^-m <= r)
std::vector<BigRat> sample_disk_points(const UltraDisk& D, int count, std::uint64_t seed);

}  // namespace padicdyn
