#include "padicdyn/norm_exp.hpp"

namespace padicdyn {

NormExp rational_norm(const BigRat& x, const BigInt& p) {
    auto v = vp(x, p);
    if (!v) return NormExp::of_zero();
    return NormExp::from_exp(BigRat(-*v));
}

}  // namespace padicdyn
