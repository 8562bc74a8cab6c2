#include <random>

#include "doctest.h"
#include "padicdyn/disk.hpp"

using namespace padicdyn;

namespace {

UltraDisk mk(long p, BigRat c, BigRat rexp) {
    return UltraDisk(BigInt(p), std::move(c), NormExp::from_exp(std::move(rexp)));
}

Poly make(const BigInt& p, std::initializer_list<BigRat> cs) {
    return Poly(p, std::vector<BigRat>(cs));
}

// reduction mod p of the unit part of a nonzero rational
BigInt unit_mod_p(const BigRat& x, const BigInt& p) {
    BigInt num = numerator(x);
    BigInt den = denominator(x);
    // strip p from numerator or denominator
    while (num % p == 0) num /= p;
    while (den % p == 0) den /= p;
    BigInt r = (num % p) * mod_inverse(den % p, p) % p;
    if (r < 0) r += p;
    return r;
}

Poly random_monicish(std::mt19937_64& rng, const BigInt& p, int dmax) {
    std::uniform_int_distribution<int> deg(2, dmax);
    std::uniform_int_distribution<long> coef(-25, 25);
    std::uniform_int_distribution<long> den(1, 9);
    int d = deg(rng);
    std::vector<BigRat> cs;
    for (int i = 0; i < d; ++i) cs.push_back(BigRat(coef(rng), den(rng)));
    long lead = coef(rng);
    if (lead == 0) lead = 1;
    cs.push_back(BigRat(lead, den(rng)));
    return Poly(p, std::move(cs));
}

}  // namespace

TEST_CASE("image_disk examples") {
    Poly sq3 = make(3, {BigRat(0), BigRat(0), BigRat(1)});
    UltraDisk a = image_disk(sq3, mk(3, BigRat(0), BigRat(-1)));
    CHECK(a.center == 0);
    CHECK(a.radius.exp == -2);

    UltraDisk b = image_disk(sq3, mk(3, BigRat(1), BigRat(-1)));
    CHECK(b.center == 1);
    CHECK(b.radius.exp == -1);  // |2| r beats r^2 over Q_3

    Poly sq2 = make(2, {BigRat(0), BigRat(0), BigRat(1)});
    UltraDisk c = image_disk(sq2, mk(2, BigRat(1), BigRat(-1)));
    CHECK(c.center == 1);
    CHECK(c.radius.exp == -2);  // |2| r and r^2 tie at 1/4
}

TEST_CASE("contains_zero / disk_contains / point_in_disk examples") {
    CHECK(contains_zero(mk(2, BigRat(0), BigRat(-5))));
    CHECK(!contains_zero(mk(2, BigRat(1), BigRat(-1))));
    CHECK(contains_zero(mk(2, BigRat(2), BigRat(0))));
    CHECK(contains_zero(mk(2, BigRat(1), BigRat(0))));

    // D(0,1) inside D(1,1) over Q_2 (same disk, ultrametric recentering)
    CHECK(disk_contains(mk(2, BigRat(1), BigRat(0)), mk(2, BigRat(0), BigRat(0))));
    CHECK(disk_contains(mk(2, BigRat(0), BigRat(0)), mk(2, BigRat(1), BigRat(0))));
    CHECK(!disk_contains(mk(2, BigRat(0), BigRat(-1)), mk(2, BigRat(0), BigRat(0))));
    CHECK(disk_contains(mk(2, BigRat(0), BigRat(0)), mk(2, BigRat(5), BigRat(-2))));
    CHECK(!disk_contains(mk(3, BigRat(0), BigRat(0)), mk(3, BigRat(1, 3), BigRat(-1))));

    CHECK(point_in_disk(mk(3, BigRat(1), BigRat(-1)), BigRat(4)));
    CHECK(!point_in_disk(mk(3, BigRat(1), BigRat(-1)), BigRat(2)));
    CHECK(point_in_disk(mk(3, BigRat(1), BigRat(-1)), BigRat(1)));
}

TEST_CASE("orbit_disks: containment witness") {
    Poly sq3 = make(3, {BigRat(0), BigRat(0), BigRat(1)});
    DiskOrbit orb = orbit_disks(sq3, mk(3, BigRat(1), BigRat(-1)), 10);
    REQUIRE(orb.disks.size() == 2);
    REQUIRE(orb.events.size() == 1);
    CHECK(orb.events[0].kind == OrbitEventKind::ContainedInEarlier);
    CHECK(orb.events[0].index == 1);
    CHECK(orb.events[0].contained_in == 0);
    CHECK(orb.stop_reason == OrbitStopReason::Event);
    CHECK(orb.budget == 10);
}

TEST_CASE("orbit_disks: zero hit on the initial disk") {
    Poly f = make(2, {BigRat(-1), BigRat(0), BigRat(1)});
    DiskOrbit orb = orbit_disks(f, mk(2, BigRat(0), BigRat(0)), 10);
    REQUIRE(orb.disks.size() == 1);
    REQUIRE(orb.events.size() == 1);
    CHECK(orb.events[0].kind == OrbitEventKind::ZeroHit);
    CHECK(orb.events[0].index == 0);
    CHECK(orb.stop_reason == OrbitStopReason::Event);
}

TEST_CASE("orbit_disks: escape event") {
    // |center| = 2 > r_f = 1 and the radius stays below the center norm
    Poly sq2 = make(2, {BigRat(0), BigRat(0), BigRat(1)});
    DiskOrbit orb = orbit_disks(sq2, mk(2, BigRat(1, 2), BigRat(-2)), 10);
    REQUIRE(!orb.events.empty());
    CHECK(orb.events[0].kind == OrbitEventKind::Escaped);
    CHECK(orb.events[0].index == 0);
    CHECK(orb.stop_reason == OrbitStopReason::Event);
}

TEST_CASE("orbit_disks: budget exhaustion (shrinking towards zero, never hitting)") {
    Poly sq3 = make(3, {BigRat(0), BigRat(0), BigRat(1)});
    DiskOrbit orb = orbit_disks(sq3, mk(3, BigRat(3), BigRat(-2)), 10);
    CHECK(orb.stop_reason == OrbitStopReason::BudgetExhausted);
    CHECK(orb.events.empty());
    REQUIRE(orb.disks.size() == 11);
    CHECK(orb.disks[1].center == 9);
    CHECK(orb.disks[1].radius.exp == -3);
    CHECK(orb.disks[2].center == 81);
    CHECK(orb.disks[2].radius.exp == -5);
}

TEST_CASE("orbit_disks: center size limit") {
    Poly sq3 = make(3, {BigRat(0), BigRat(0), BigRat(1)});
    DiskOrbitOptions opts;
    opts.max_center_bits = 40;
    DiskOrbit orb = orbit_disks(sq3, mk(3, BigRat(3), BigRat(-2)), 200, opts);
    CHECK(orb.stop_reason == OrbitStopReason::SizeLimit);
    CHECK(orb.events.empty());
    CHECK(orb.disks.size() < 12);
}

TEST_CASE("image_disk contains every image point") {
    std::mt19937_64 rng(1234321);
    std::uniform_int_distribution<long> rexp(-3, 1);
    std::uniform_int_distribution<long> cent(-40, 40);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        for (long p : {2L, 3L, 5L}) {
            Poly f = random_monicish(rng, p, 4);
            UltraDisk D = mk(p, BigRat(cent(rng), 1 + (cent(rng) & 3)), BigRat(rexp(rng)));
            UltraDisk img = image_disk(f, D);
            CHECK(img.center == eval(f, D.center));
            std::vector<BigRat> pts = sample_disk_points(D, 3, 0xabcdef);
            for (const BigRat& z : pts) {
                REQUIRE(point_in_disk(D, z));
                CHECK(point_in_disk(img, eval(f, z)));
                ++checked;
            }
        }
    }
    CHECK(checked >= 500);
}

TEST_CASE("image radius is sharp exactly when the reduced form has a nonzero value") {
    std::mt19937_64 rng(55551111);
    std::uniform_int_distribution<long> rexp(-2, 0);
    std::uniform_int_distribution<long> cent(-9, 9);
    int attained_cases = 0, missed_cases = 0;
    for (int trial = 0; trial < 40; ++trial) {
        for (long pl : {2L, 3L, 5L}) {
            BigInt p(pl);
            Poly f = random_monicish(rng, p, 3);
            long m = -rexp(rng);  // radius p^{-m}, m >= 0
            BigRat c(cent(rng));
            UltraDisk D = mk(pl, c, BigRat(-m));
            UltraDisk img = image_disk(f, D);
            BigRat s_exp = img.radius.exp;

            // b_i = coefficient of u^i in f(c + p^m u) - f(c)
            std::vector<BigRat> shifted = taylor_shift(f, c);
            std::vector<BigRat> b(shifted.size(), 0);
            BigRat pm(pow_p(p, m));
            BigRat pmi = 1;
            for (std::size_t i = 1; i < shifted.size(); ++i) {
                pmi *= pm;
                b[i] = shifted[i] * pmi;
            }

            // reduced dominant form h(x) = sum over argmax |b_i| of unit(b_i) x^i
            BigRat vmin = s_exp;  // |b_i| <= p^{s_exp}; maximizers have exp == s_exp
            bool attained = false;
            for (BigInt u0 = 1; u0 < p; ++u0) {
                BigInt acc = 0;
                BigInt x = 1;
                for (std::size_t i = 1; i < b.size(); ++i) {
                    x = x * u0 % p;
                    if (b[i] != 0 && rational_norm(b[i], p).exp == vmin)
                        acc = (acc + unit_mod_p(b[i], p) * x) % p;
                }
                if (acc % p != 0) { attained = true; break; }
            }

            // brute-force sup over lifts of every residue class mod p^2
            NormExp best = NormExp::of_zero();
            long np = pl * pl;
            for (long u = 0; u < np; ++u) {
                BigRat z = c + BigRat(u) * pm;
                NormExp d = rational_norm(eval(f, z) - eval(f, c), p);
                best = norm_max(best, d);
            }
            REQUIRE(best <= img.radius);
            if (attained) {
                CHECK(best == img.radius);
                ++attained_cases;
            } else {
                CHECK(best < img.radius);
                ++missed_cases;
            }
        }
    }
    CHECK(attained_cases >= 40);

    // the documented specimen: z^2 on D(1, 1/2) over Q_2 has image radius 1/4
    // but |f(z) - f(1)| = |4||u + u^2| <= 1/8 for every z = 1 + 2u in Q_2
    Poly sq2 = make(2, {BigRat(0), BigRat(0), BigRat(1)});
    UltraDisk spec = image_disk(sq2, mk(2, BigRat(1), BigRat(-1)));
    CHECK(spec.radius.exp == -2);
    NormExp best = NormExp::of_zero();
    for (long u = 0; u < 16; ++u) {
        BigRat z = 1 + BigRat(2 * u);
        best = norm_max(best, rational_norm(eval(sq2, z) - 1, BigInt(2)));
    }
    CHECK(best.exp == -3);
}

TEST_CASE("points of a zero-free disk share the center norm") {
    std::mt19937_64 rng(24680);
    std::uniform_int_distribution<long> cexp(-3, 3);
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        for (long pl : {2L, 3L, 5L}) {
            BigInt p(pl);
            long e = cexp(rng);
            BigRat c = e >= 0 ? BigRat(pow_p(p, e)) : BigRat(1, pow_p(p, -e));
            c *= BigRat(1 + pl * static_cast<long>(rng() % 3));  // 1 mod p, a unit
            NormExp cn = rational_norm(c, p);
            // radius strictly below |c| so zero stays outside
            UltraDisk D(p, c, NormExp::from_exp(cn.exp - 1));
            REQUIRE(!contains_zero(D));
            for (const BigRat& z : sample_disk_points(D, 4, rng())) {
                CHECK(rational_norm(z, p) == cn);
                ++checked;
            }
        }
    }
    CHECK(checked >= 900);
}

TEST_CASE("image_disk preserves containment") {
    std::mt19937_64 rng(86420);
    std::uniform_int_distribution<long> rexp(-3, 1);
    std::uniform_int_distribution<long> cent(-30, 30);
    for (int trial = 0; trial < 70; ++trial) {
        for (long p : {2L, 3L}) {
            Poly f = random_monicish(rng, p, 4);
            long r1 = rexp(rng);
            UltraDisk outer = mk(p, BigRat(cent(rng)), BigRat(r1));
            // inner disk: center shifted by something of norm <= r1, radius smaller
            BigRat shift = BigRat(cent(rng)) * BigRat(pow_p(BigInt(p), std::max(0L, -r1)));
            shift /= BigRat(pow_p(BigInt(p), std::max(0L, r1)));
            UltraDisk inner = mk(p, outer.center + shift, BigRat(r1 - 1 - static_cast<long>(rng() % 2)));
            REQUIRE(disk_contains(outer, inner));
            CHECK(disk_contains(image_disk(f, outer), image_disk(f, inner)));
        }
    }
}

TEST_CASE("containment witness is forward invariant") {
    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<long> cent(-8, 8);
    std::uniform_int_distribution<long> coef(-6, 6);
    int witnessed = 0;
    for (int trial = 0; trial < 200 && witnessed < 12; ++trial) {
        for (long p : {2L, 3L, 5L}) {
            // monic integer polynomial, integer center, radius <= 1/p:
            // orbits stay integral, containment fires often
            std::vector<BigRat> cs;
            int d = 2 + static_cast<int>(rng() % 2);
            for (int i = 0; i < d; ++i) cs.push_back(BigRat(coef(rng)));
            cs.push_back(BigRat(1));
            Poly f(p, std::move(cs));
            UltraDisk U = mk(p, BigRat(cent(rng)), BigRat(-1));
            DiskOrbit orb = orbit_disks(f, U, 24);
            if (orb.events.empty() || orb.events[0].kind != OrbitEventKind::ContainedInEarlier)
                continue;
            long k = orb.events[0].index;
            long j = orb.events[0].contained_in;
            UltraDisk a = orb.disks[static_cast<std::size_t>(k)];
            UltraDisk bj = orb.disks[static_cast<std::size_t>(j)];
            for (int m = 1; m <= 5; ++m) {
                a = image_disk(f, a);
                bj = image_disk(f, bj);
                CHECK(disk_contains(bj, a));
            }
            ++witnessed;
        }
    }
    CHECK(witnessed >= 12);
}

TEST_CASE("sample_disk_points is deterministic and in-disk") {
    UltraDisk D = mk(3, BigRat(2, 5), BigRat(-2));
    std::vector<BigRat> a = sample_disk_points(D, 10, 42);
    std::vector<BigRat> b = sample_disk_points(D, 10, 42);
    std::vector<BigRat> c = sample_disk_points(D, 10, 43);
    REQUIRE(a.size() == 10);
    CHECK(a == b);
    CHECK(a != c);
    for (const BigRat& z : a) CHECK(point_in_disk(D, z));
}
