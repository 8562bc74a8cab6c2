#include "padicdyn/poly.hpp"

namespace padicdyn {

Poly::Poly(BigInt p, std::vector<BigRat> coeffs) : p_(std::move(p)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("Poly: empty coefficient list");
    if (coeffs_.size() > 1 && coeffs_.back() == 0)
        throw Error("Poly: leading coefficient is zero");
}

void Poly::require_dynamical(const char* op) const {
    if (degree() < 2)
        throw DegreeTooSmall(std::string(op) + ": degree must be >= 2, got " +
                             std::to_string(degree()));
}

PadicScalar eval(const Poly& f, const PadicScalar& z) {
    PadicScalar acc = PadicScalar::zero(f.prime(), z.precision());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc.mul(z).add_rational(*it);
    return acc;
}

BigRat eval(const Poly& f, const BigRat& x) {
    BigRat acc = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::vector<BigRat> taylor_shift(const Poly& f, const BigRat& a) {
    // repeated synthetic division: after the passes, b[i] is the coefficient
    // of w^i in f(a + w)
    std::vector<BigRat> b = f.coeffs();
    long d = f.degree();
    for (long j = 0; j <= d; ++j)
        for (long i = d - 1; i >= j; --i) b[i] += a * b[i + 1];
    return b;
}

std::vector<PadicScalar> taylor_shift(const Poly& f, const PadicScalar& a) {
    long d = f.degree();
    std::vector<PadicScalar> b;
    b.reserve(d + 1);
    for (const BigRat& c : f.coeffs()) b.push_back(PadicScalar::embed(c, f.prime(), a.precision()));
    for (long j = 0; j <= d; ++j)
        for (long i = d - 1; i >= j; --i) b[i] = b[i].add(a.mul(b[i + 1]));
    return b;
}

std::vector<OrbitPoint> iterate(const Poly& f, const PadicScalar& z, long n) {
    f.require_dynamical("iterate");
    std::vector<OrbitPoint> orbit;
    orbit.reserve(n + 1);
    PadicScalar cur = z;
    for (long k = 0; k <= n; ++k) {
        orbit.push_back(OrbitPoint{k, cur, cur.abs()});
        if (k == n) break;
        try {
            cur = eval(f, cur);
        } catch (PrecisionExhausted& e) {
            e.index = static_cast<std::size_t>(k + 1);
            throw;
        }
    }
    return orbit;
}

Poly conjugate_translate(const Poly& f, const BigRat& alpha) {
    std::vector<BigRat> c = taylor_shift(f, alpha);
    c[0] -= alpha;
    return Poly(f.prime(), std::move(c));
}

NormExp escape_radius(const Poly& f) {
    f.require_dynamical("escape_radius");
    long d = f.degree();
    const BigInt& p = f.prime();
    BigRat ed = -BigRat(*vp(f.leading(), p));  // exponent of |a_d|
    BigRat best = 0;                           // the "1" term
    for (long i = 0; i < d; ++i) {
        const BigRat& ai = f.coeffs()[i];
        if (ai == 0) continue;
        BigRat ei = -BigRat(*vp(ai, p));
        BigRat cand = (ei - ed) / BigRat(d - i);
        if (cand > best) best = cand;
    }
    BigRat lead_cand = -ed / BigRat(d - 1);
    if (lead_cand > best) best = lead_cand;
    return NormExp::from_exp(best);
}

NormExp sup_norm_on_ball(const Poly& f, const NormExp& r) {
    if (r.is_zero()) throw Error("sup_norm_on_ball: radius must be positive");
    NormExp best = NormExp::of_zero();
    const BigInt& p = f.prime();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const BigRat& ai = f.coeffs()[i];
        if (ai == 0) continue;
        NormExp term = NormExp::from_exp(-BigRat(*vp(ai, p)) + r.exp * BigRat(i));
        best = norm_max(best, term);
    }
    return best;
}

}  // namespace padicdyn
