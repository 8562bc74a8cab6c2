#pragma once

#include "padicdyn/numbers.hpp"

namespace padicdyn {

// Value of a p-adic absolute value, kept exact as p^exp.
// zero == true denotes the norm 0 (exponent -inf); exp is meaningless then.
struct NormExp {
    bool zero = false;
    BigRat exp = 0;

    static NormExp of_zero() { return NormExp{true, 0}; }
    static NormExp one() { return NormExp{false, 0}; }
    static NormExp from_exp(BigRat e) { return NormExp{false, std::move(e)}; }

    bool is_zero() const { return zero; }

    NormExp mul(const NormExp& o) const {
        if (zero || o.zero) return of_zero();
        return from_exp(exp + o.exp);
    }
    NormExp div(const NormExp& o) const {
        if (o.zero) throw DivisionByZero("NormExp: division by zero norm");
        if (zero) return of_zero();
        return from_exp(exp - o.exp);
    }
    NormExp pow(const BigInt& k) const {
        if (zero) {
            if (k <= 0) throw DivisionByZero("NormExp: 0 to non-positive power");
            return of_zero();
        }
        return from_exp(exp * BigRat(k));
    }
    // k-th root, k > 0
    NormExp root(const BigInt& k) const {
        if (k <= 0) throw Error("NormExp: root order must be positive");
        if (zero) return of_zero();
        return from_exp(exp / BigRat(k));
    }

    // -1 / 0 / +1 comparison; zero compares below every nonzero norm.
    int cmp(const NormExp& o) const {
        if (zero && o.zero) return 0;
        if (zero) return -1;
        if (o.zero) return 1;
        if (exp < o.exp) return -1;
        if (exp > o.exp) return 1;
        return 0;
    }
    bool operator==(const NormExp& o) const { return cmp(o) == 0; }
    bool operator!=(const NormExp& o) const { return cmp(o) != 0; }
    bool operator<(const NormExp& o) const { return cmp(o) < 0; }
    bool operator<=(const NormExp& o) const { return cmp(o) <= 0; }
    bool operator>(const NormExp& o) const { return cmp(o) > 0; }
    bool operator>=(const NormExp& o) const { return cmp(o) >= 0; }
};

inline NormExp norm_max(const NormExp& a, const NormExp& b) {
    return a.cmp(b) >= 0 ? a : b;
}
inline NormExp norm_min(const NormExp& a, const NormExp& b) {
    return a.cmp(b) <= 0 ? a : b;
}

// max(1, |x|) as an exponent: max(0, e).
inline NormExp big_part(const NormExp& a) {
    if (a.zero || a.exp < 0) return NormExp::one();
    return a;
}

// Exact norm of a rational: |x|_p = p^{-vp(x)}.
NormExp rational_norm(const BigRat& x, const BigInt& p);

}  // namespace padicdyn
