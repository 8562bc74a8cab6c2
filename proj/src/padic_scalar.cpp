#include "padicdyn/padic_scalar.hpp"

namespace padicdyn {

namespace {

// smallest of a BigInt and a long, as long (caller guarantees b dominates when huge)
long min_with(const BigInt& a, long b) {
    if (a >= b) return b;
    return static_cast<long>(a);
}

BigInt positive_mod(BigInt x, const BigInt& m) {
    x %= m;
    if (x < 0) x += m;
    return x;
}

}  // namespace

BigInt pow_p(const BigInt& p, long k) {
    if (k < 0) throw Error("pow_p: negative exponent");
    return boost::multiprecision::pow(p, static_cast<unsigned>(k));
}

PadicScalar PadicScalar::zero(BigInt p, long prec) {
    if (prec < 1) throw Error("PadicScalar: precision must be >= 1");
    return PadicScalar(std::move(p), true, 0, 0, prec);
}

PadicScalar PadicScalar::embed(const BigRat& x, const BigInt& p, long prec) {
    if (prec < 1) throw Error("PadicScalar: precision must be >= 1");
    if (x == 0) return zero(p, prec);
    BigInt num = numerator(x);
    BigInt den = denominator(x);
    BigInt vn = num == 0 ? BigInt(0) : int_valuation(num, p);
    BigInt vd = int_valuation(den, p);
    BigInt val = vn - vd;
    // strip p-powers; vn, vd are small by construction of reduced rationals
    num /= pow_p(p, static_cast<long>(vn));
    den /= pow_p(p, static_cast<long>(vd));
    BigInt modulus = pow_p(p, prec);
    BigInt unit = positive_mod(num * mod_inverse(den, modulus), modulus);
    return PadicScalar(p, false, std::move(val), std::move(unit), prec);
}

PadicScalar PadicScalar::make(BigInt p, BigInt valuation, BigInt unit, long prec) {
    if (prec < 1) throw Error("PadicScalar: precision must be >= 1");
    if (unit <= 0 || unit % p == 0 || unit >= pow_p(p, prec))
        throw Error("PadicScalar: unit out of range");
    return PadicScalar(std::move(p), false, std::move(valuation), std::move(unit), prec);
}

const BigInt& PadicScalar::valuation() const {
    if (zero_) throw Error("PadicScalar: valuation of exact zero");
    return val_;
}

const BigInt& PadicScalar::unit() const {
    if (zero_) throw Error("PadicScalar: unit of exact zero");
    return unit_;
}

PadicScalar PadicScalar::add_sub(const PadicScalar& o, bool subtract) const {
    if (p_ != o.p_) throw Error("PadicScalar: mixed primes");
    if (zero_ && o.zero_) return zero(p_, std::min(prec_, o.prec_));
    if (o.zero_) return *this;
    if (zero_) return subtract ? o.neg() : o;

    if (val_ == o.val_) {
        // exact integer combination of the two units
        BigInt t = subtract ? BigInt(unit_ - o.unit_) : BigInt(unit_ + o.unit_);
        if (t == 0) return zero(p_, std::min(prec_, o.prec_));
        BigInt cancel = int_valuation(t, p_);
        long window = std::min(prec_, o.prec_);
        if (cancel >= window)
            throw PrecisionExhausted("add/sub: cancellation consumed all " +
                                     std::to_string(window) + " digits");
        long relp = window - static_cast<long>(cancel);
        BigInt unit = positive_mod(t / pow_p(p_, static_cast<long>(cancel)), pow_p(p_, relp));
        return PadicScalar(p_, false, val_ + cancel, std::move(unit), relp);
    }

    // distinct valuations: the lower one wins, no cancellation possible
    const PadicScalar& lo = val_ < o.val_ ? *this : o;
    const PadicScalar& hi = val_ < o.val_ ? o : *this;
    bool negate_lo = subtract && (&lo == &o);
    bool negate_hi = subtract && (&hi == &o);
    BigInt shift = hi.val_ - lo.val_;  // >= 1, possibly astronomically large
    long relp = min_with(shift + hi.prec_, lo.prec_);
    BigInt modulus = pow_p(p_, relp);
    BigInt acc = negate_lo ? -lo.unit_ : lo.unit_;
    if (shift < relp) {
        BigInt term = hi.unit_ * pow_p(p_, static_cast<long>(shift));
        acc += negate_hi ? -term : term;
    }
    return PadicScalar(p_, false, lo.val_, positive_mod(acc, modulus), relp);
}

PadicScalar PadicScalar::mul(const PadicScalar& o) const {
    if (p_ != o.p_) throw Error("PadicScalar: mixed primes");
    if (zero_ || o.zero_) return zero(p_, std::min(prec_, o.prec_));
    long relp = std::min(prec_, o.prec_);
    BigInt unit = positive_mod(unit_ * o.unit_, pow_p(p_, relp));
    return PadicScalar(p_, false, val_ + o.val_, std::move(unit), relp);
}

PadicScalar PadicScalar::div(const PadicScalar& o) const {
    if (p_ != o.p_) throw Error("PadicScalar: mixed primes");
    if (o.zero_) throw DivisionByZero("PadicScalar: division by zero");
    if (zero_) return zero(p_, std::min(prec_, o.prec_));
    long relp = std::min(prec_, o.prec_);
    BigInt modulus = pow_p(p_, relp);
    BigInt unit = positive_mod(unit_ * mod_inverse(o.unit_, modulus), modulus);
    return PadicScalar(p_, false, val_ - o.val_, std::move(unit), relp);
}

PadicScalar PadicScalar::neg() const {
    if (zero_) return *this;
    return PadicScalar(p_, false, val_, pow_p(p_, prec_) - unit_, prec_);
}

PadicScalar PadicScalar::add_rational(const BigRat& x) const {
    if (x == 0) return *this;
    if (zero_) return embed(x, p_, prec_);
    auto vx_opt = vp(x, p_);
    BigInt vx = *vx_opt;

    if (vx != val_) {
        if (vx > val_) {
            // x sits above our lowest digit; window stays val_ + prec_
            if (vx - val_ >= prec_) return *this;
            long shift = static_cast<long>(vx - val_);
            BigInt modulus = pow_p(p_, prec_);
            // x = p^vx * nu/du with nu, du coprime to p
            BigInt num = numerator(x), den = denominator(x);
            if (vx >= 0)
                num /= pow_p(p_, static_cast<long>(vx));
            else
                den /= pow_p(p_, static_cast<long>(-vx));
            BigInt ux = positive_mod(num * mod_inverse(den, modulus), modulus);
            BigInt unit = positive_mod(unit_ + ux * pow_p(p_, shift), modulus);
            return PadicScalar(p_, false, val_, std::move(unit), prec_);
        }
        // x sits below: result valuation vx, precision window val_ + prec_ kept,
        // capped at prec_ relative digits
        BigInt rel_big = (val_ - vx) + prec_;
        long relp = min_with(rel_big, prec_);
        BigInt modulus = pow_p(p_, relp);
        BigInt num = numerator(x), den = denominator(x);
        if (vx >= 0)
            num /= pow_p(p_, static_cast<long>(vx));
        else
            den /= pow_p(p_, static_cast<long>(-vx));
        BigInt ux = positive_mod(num * mod_inverse(den, modulus), modulus);
        BigInt shift_amt = val_ - vx;  // >= 1
        BigInt acc = ux;
        if (shift_amt < relp) acc += unit_ * pow_p(p_, static_cast<long>(shift_amt));
        return PadicScalar(p_, false, vx, positive_mod(acc, modulus), relp);
    }

    // equal valuations: exact cancellation via integers. x/p^v = nu/du exactly.
    BigInt num = numerator(x), den = denominator(x);
    if (vx >= 0)
        num /= pow_p(p_, static_cast<long>(vx));
    else
        den /= pow_p(p_, static_cast<long>(-vx));
    // this + x = p^v * (unit_ + nu/du) = p^v * (unit_*du + nu)/du
    BigInt t = unit_ * den + num;
    if (t == 0) return zero(p_, prec_);
    BigInt cancel = int_valuation(t, p_);  // du coprime to p
    if (cancel >= prec_)
        throw PrecisionExhausted("add_rational: cancellation consumed all " +
                                 std::to_string(prec_) + " digits");
    long relp = prec_ - static_cast<long>(cancel);
    BigInt modulus = pow_p(p_, relp);
    BigInt unit = positive_mod((t / pow_p(p_, static_cast<long>(cancel))) * mod_inverse(den, modulus), modulus);
    return PadicScalar(p_, false, val_ + cancel, std::move(unit), relp);
}

NormExp PadicScalar::abs() const {
    if (zero_) return NormExp::of_zero();
    return NormExp::from_exp(BigRat(-val_));
}

NormExp PadicScalar::big_norm() const { return big_part(abs()); }

BigRat PadicScalar::denotation() const {
    if (zero_) return BigRat(0);
    if (val_ >= 0) return BigRat(unit_ * pow_p(p_, static_cast<long>(val_)));
    return BigRat(unit_, pow_p(p_, static_cast<long>(-val_)));
}

bool PadicScalar::same_state(const PadicScalar& o) const {
    if (p_ != o.p_) return false;
    if (zero_ != o.zero_) return false;
    if (zero_) return true;
    return val_ == o.val_ && unit_ == o.unit_ && prec_ == o.prec_;
}

NormExp chordal(const PadicScalar& z, const PadicScalar& w) {
    NormExp dist = z.sub(w).abs();
    return dist.div(z.big_norm().mul(w.big_norm()));
}

NormExp chordal(const std::optional<PadicScalar>& z, const std::optional<PadicScalar>& w) {
    if (!z && !w) return NormExp::of_zero();
    if (!z) return NormExp::one().div(w->big_norm());
    if (!w) return NormExp::one().div(z->big_norm());
    return chordal(*z, *w);
}

}  // namespace padicdyn
