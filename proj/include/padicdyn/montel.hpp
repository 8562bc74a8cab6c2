#pragma once

#include <cstdint>

#include "padicdyn/disk.hpp"

namespace padicdyn {

enum class CertStatus { Certified, Refuted, Inconclusive };
enum class WitnessRule { EscapeWitness, ContainmentWitness };

// Self-contained evidence that the forward orbit of a disk avoids the omitted
// point (after translating it to 0), hence f is equicontinuous on the disk.
// Every claim is re-checkable from the stored disks alone.
struct MontelCertificate {
    CertStatus status;
    std::optional<WitnessRule> rule;  // present iff Certified
    long witness_n = -1;              // EscapeWitness(n)
    long witness_k = -1;              // ContainmentWitness(k, j)
    long witness_j = -1;
    long zero_hit_index = -1;         // Refuted
    long budget = 0;
    DiskOrbit orbit;                  // orbit of the translated disk under `translated`
    BigRat omitted_point;
    bool conjugated = false;          // omitted_point != 0
    Poly original;
    Poly translated;                  // conjugate_translate(original, omitted_point)
};

struct ProbeSample {
    BigRat z;
    BigRat w;
    long k;
    NormExp rho;  // chordal distance of the k-th iterates
};

struct ProbeReport {
    std::vector<ProbeSample> samples;
    NormExp max_observed = NormExp::of_zero();
    long violations = 0;
};

// conjugates by w = z - alpha, runs the disk orbit of the translated disk, and
// maps the stopping event to a certificate status
MontelCertificate certify(const Poly& f, const UltraDisk& U, const BigRat& alpha, long budget,
                          const DiskOrbitOptions& opts = {});

// independent re-checker: recomputes the conjugation, every disk image, every
// zero test, and the witness rule; false on any mismatch, never throws
bool verify_certificate(const MontelCertificate& cert, const Poly& f);

// asserts |F^k(z)| = |F^k(a)| exactly for sampled z in the certified disk
// (F, a the translated map and center); rho entries are recorded for each k
// while the difference stays resolvable at working precision
ProbeReport norm_invariance_probe(const Poly& f, const UltraDisk& U, const MontelCertificate& cert,
                                  int samples, long kmax, long precision = 64,
                                  std::uint64_t seed = 0x715ec0ffeeull);

// records rho(f^k(z), f^k(w)) for sampled pairs; with a Certified certificate,
// checks every recorded value against the bound s_k / ||f^k||^2 implied by the
// certificate disks (violations counted in the report)
ProbeReport equicontinuity_probe(const Poly& f, const UltraDisk& U, int samples, long kmax,
                                 const MontelCertificate* cert = nullptr, long precision = 64,
                                 std::uint64_t seed = 0x5eedfaceull);

}  // namespace padicdyn
