#include "padicdyn/montel.hpp"

namespace padicdyn {

namespace {

// first event that fires on disk k, in the canonical order zero -> escape -> containment
std::optional<OrbitEvent> event_at(const std::vector<UltraDisk>& disks, long k,
                                   const NormExp& r_esc) {
    const UltraDisk& D = disks[k];
    if (contains_zero(D)) return OrbitEvent{OrbitEventKind::ZeroHit, k, -1};
    NormExp cn = rational_norm(D.center, D.p);
    if (cn > r_esc && D.radius < cn) return OrbitEvent{OrbitEventKind::Escaped, k, -1};
    for (long j = 0; j < k; ++j)
        if (disk_contains(disks[j], D))
            return OrbitEvent{OrbitEventKind::ContainedInEarlier, k, j};
    return std::nullopt;
}

std::vector<PadicScalar> scalar_orbit(const Poly& F, const BigRat& z, long kmax, long precision) {
    for (int attempt = 0;; ++attempt) {
        long prec = attempt == 0 ? precision : 4 * precision;
        try {
            std::vector<PadicScalar> points;
            points.reserve(kmax + 1);
            points.push_back(PadicScalar::embed(z, F.prime(), prec));
            for (long k = 1; k <= kmax; ++k) points.push_back(eval(F, points.back()));
            return points;
        } catch (const PrecisionExhausted&) {
            if (attempt == 1) throw;
        }
    }
}

std::optional<NormExp> try_chordal(const PadicScalar& a, const PadicScalar& b) {
    try {
        return chordal(a, b);
    } catch (const PrecisionExhausted&) {
        return std::nullopt;
    }
}

void require_matching(const MontelCertificate& cert, const Poly& f, const UltraDisk& U,
                      const char* who) {
    if (cert.status != CertStatus::Certified)
        throw CertificateRequired(std::string(who) + ": certificate is not Certified");
    if (cert.original.prime() != f.prime() || cert.original.coeffs() != f.coeffs())
        throw CertificateRequired(std::string(who) + ": certificate is for a different polynomial");
    if (cert.orbit.disks.empty())
        throw CertificateRequired(std::string(who) + ": certificate carries no disks");
    const UltraDisk& W = cert.orbit.disks[0];
    if (W.center != U.center - cert.omitted_point || !(W.radius == U.radius))
        throw CertificateRequired(std::string(who) + ": certificate is for a different disk");
}

// exponent of the certified bound on rho at step k: s_idx - 2 max(0, e_R(idx)),
// idx folding k through the containment cycle or the escape recursion
BigRat certified_rho_bound(const MontelCertificate& cert, long k) {
    const auto& disks = cert.orbit.disks;
    long last = static_cast<long>(disks.size()) - 1;
    auto disk_bound = [&](long i) -> BigRat {
        BigRat es = disks[i].radius.exp;
        // certified disks never contain 0, so every point has the center's norm
        BigRat eR = -BigRat(*vp(disks[i].center, disks[i].p));
        BigRat big = eR > 0 ? eR : BigRat(0);
        return es - 2 * big;
    };
    if (cert.rule == WitnessRule::ContainmentWitness) {
        long kk = k;
        long period = cert.witness_k - cert.witness_j;
        while (kk >= cert.witness_k) kk -= period;
        return disk_bound(kk);
    }
    if (k <= last) return disk_bound(k);
    // beyond the escape witness: R_{i+1} = |a_d| R_i^d, s_{i+1} <= s_i |a_d| R_i^{d-1}
    long d = cert.translated.degree();
    BigRat L = -BigRat(*vp(cert.translated.leading(), cert.translated.prime()));
    BigRat eR = -BigRat(*vp(disks[last].center, disks[last].p));
    BigRat es = disks[last].radius.exp;
    for (long i = last; i < k; ++i) {
        es += L + BigRat(d - 1) * eR;
        eR = L + BigRat(d) * eR;
    }
    BigRat big = eR > 0 ? eR : BigRat(0);
    return es - 2 * big;
}

}  // namespace

MontelCertificate certify(const Poly& f, const UltraDisk& U, const BigRat& alpha, long budget,
                          const DiskOrbitOptions& opts) {
    f.require_dynamical("certify");
    if (f.prime() != U.p) throw Error("certify: mixed primes");
    Poly F = conjugate_translate(f, alpha);
    UltraDisk W(U.p, U.center - alpha, U.radius);
    DiskOrbit orbit = orbit_disks(F, W, budget, opts);

    MontelCertificate cert{CertStatus::Inconclusive,
                           std::nullopt,
                           -1,
                           -1,
                           -1,
                           -1,
                           budget,
                           std::move(orbit),
                           alpha,
                           alpha != 0,
                           f,
                           std::move(F)};
    if (!cert.orbit.events.empty()) {
        const OrbitEvent& ev = cert.orbit.events.front();
        switch (ev.kind) {
            case OrbitEventKind::ZeroHit:
                cert.status = CertStatus::Refuted;
                cert.zero_hit_index = ev.index;
                break;
            case OrbitEventKind::Escaped:
                cert.status = CertStatus::Certified;
                cert.rule = WitnessRule::EscapeWitness;
                cert.witness_n = ev.index;
                break;
            case OrbitEventKind::ContainedInEarlier:
                cert.status = CertStatus::Certified;
                cert.rule = WitnessRule::ContainmentWitness;
                cert.witness_k = ev.index;
                cert.witness_j = ev.contained_in;
                break;
        }
    }
    return cert;
}

bool verify_certificate(const MontelCertificate& cert, const Poly& f) {
    try {
        if (cert.original.prime() != f.prime() || cert.original.coeffs() != f.coeffs())
            return false;
        if (cert.conjugated != (cert.omitted_point != 0)) return false;
        Poly F = conjugate_translate(f, cert.omitted_point);
        if (F.coeffs() != cert.translated.coeffs() || cert.translated.prime() != f.prime())
            return false;

        const auto& disks = cert.orbit.disks;
        if (disks.empty()) return false;
        long last = static_cast<long>(disks.size()) - 1;
        if (cert.budget < 1 || last > cert.budget) return false;
        if (cert.orbit.budget != cert.budget) return false;
        for (const UltraDisk& D : disks)
            if (D.p != f.prime()) return false;

        for (long i = 0; i < last; ++i) {
            UltraDisk img = image_disk(F, disks[i]);
            if (img.center != disks[i + 1].center || !(img.radius == disks[i + 1].radius))
                return false;
        }
        NormExp r_esc = escape_radius(F);
        for (long k = 0; k < last; ++k)
            if (event_at(disks, k, r_esc)) return false;
        std::optional<OrbitEvent> ev = event_at(disks, last, r_esc);

        if (cert.orbit.events.size() > 1) return false;
        if (cert.orbit.events.empty()) {
            if (ev) return false;
            if (cert.orbit.stop_reason == OrbitStopReason::Event) return false;
            if (cert.orbit.stop_reason == OrbitStopReason::BudgetExhausted && last != cert.budget)
                return false;
            return cert.status == CertStatus::Inconclusive && !cert.rule &&
                   cert.zero_hit_index == -1;
        }

        const OrbitEvent& se = cert.orbit.events.front();
        if (!ev) return false;
        if (cert.orbit.stop_reason != OrbitStopReason::Event) return false;
        if (se.kind != ev->kind || se.index != ev->index || se.contained_in != ev->contained_in)
            return false;
        if (se.index != last) return false;

        switch (se.kind) {
            case OrbitEventKind::ZeroHit:
                return cert.status == CertStatus::Refuted && !cert.rule &&
                       cert.zero_hit_index == last;
            case OrbitEventKind::Escaped:
                return cert.status == CertStatus::Certified &&
                       cert.rule == WitnessRule::EscapeWitness && cert.witness_n == last &&
                       cert.zero_hit_index == -1;
            case OrbitEventKind::ContainedInEarlier:
                return cert.status == CertStatus::Certified &&
                       cert.rule == WitnessRule::ContainmentWitness && cert.witness_k == last &&
                       cert.witness_j == se.contained_in && cert.zero_hit_index == -1;
        }
        return false;
    } catch (...) {
        return false;
    }
}

ProbeReport norm_invariance_probe(const Poly& f, const UltraDisk& U, const MontelCertificate& cert,
                                  int samples, long kmax, long precision, std::uint64_t seed) {
    require_matching(cert, f, U, "norm_invariance_probe");
    const Poly& F = cert.translated;
    const UltraDisk& W = cert.orbit.disks[0];

    std::vector<PadicScalar> oa = scalar_orbit(F, W.center, kmax, precision);
    ProbeReport rep;
    for (const BigRat& z : sample_disk_points(W, samples, seed)) {
        std::vector<PadicScalar> oz = scalar_orbit(F, z, kmax, precision);
        bool rho_alive = true;
        for (long k = 0; k <= kmax; ++k) {
            const PadicScalar& xa = oa[k];
            const PadicScalar& xz = oz[k];
            bool equal = xa.is_zero() == xz.is_zero() &&
                         (xa.is_zero() || xa.valuation() == xz.valuation());
            if (!equal)
                throw InvariantViolated("norm invariance fails at z = " + rational_to_string(z) +
                                        ", k = " + std::to_string(k));
            if (rho_alive) {
                if (auto rho = try_chordal(xz, xa)) {
                    rep.samples.push_back({z, W.center, k, *rho});
                    rep.max_observed = norm_max(rep.max_observed, *rho);
                } else {
                    rho_alive = false;
                }
            }
        }
    }
    return rep;
}

ProbeReport equicontinuity_probe(const Poly& f, const UltraDisk& U, int samples, long kmax,
                                 const MontelCertificate* cert, long precision,
                                 std::uint64_t seed) {
    f.require_dynamical("equicontinuity_probe");
    const Poly* F = &f;
    const UltraDisk* W = &U;
    if (cert) {
        require_matching(*cert, f, U, "equicontinuity_probe");
        F = &cert->translated;
        W = &cert->orbit.disks[0];
    }
    std::vector<BigRat> pts = sample_disk_points(*W, 2 * samples, seed);
    ProbeReport rep;
    for (int i = 0; i < samples; ++i) {
        const BigRat& z = pts[2 * i];
        const BigRat& w = pts[2 * i + 1];
        std::vector<PadicScalar> oz = scalar_orbit(*F, z, kmax, precision);
        std::vector<PadicScalar> ow = scalar_orbit(*F, w, kmax, precision);
        for (long k = 0; k <= kmax; ++k) {
            std::optional<NormExp> rho = try_chordal(oz[k], ow[k]);
            if (!rho) break;
            rep.samples.push_back({z, w, k, *rho});
            rep.max_observed = norm_max(rep.max_observed, *rho);
            if (cert && !rho->is_zero() && rho->exp > certified_rho_bound(*cert, k))
                ++rep.violations;
        }
    }
    return rep;
}

}  // namespace padicdyn
