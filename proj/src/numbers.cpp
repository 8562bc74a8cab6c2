#include "padicdyn/numbers.hpp"

#include <array>
#include <cctype>

namespace padicdyn {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(const std::string& s, const std::string& context) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && body[0] == '-') {
        neg = true;
        body = body.substr(1);
    }
    if (!all_digits(body))
        throw ParseError("not an integer literal: \"" + s + "\" (" + context + ")");
    BigInt v(body);
    return neg ? -v : v;
}

}  // namespace

BigRat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return BigRat(parse_integer(text, "rational"));
    }
    BigInt num = parse_integer(text.substr(0, slash), "rational numerator");
    std::string den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
        throw ParseError("not a rational literal: \"" + text + "\"");
    BigInt den(den_text);
    if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
    return BigRat(num, den);
}

std::string rational_to_string(const BigRat& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt int_valuation(BigInt n, const BigInt& p) {
    if (n == 0) throw Error("int_valuation of zero");
    BigInt v = 0;
    BigInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, p, q, r);
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

std::optional<BigInt> vp(const BigRat& x, const BigInt& p) {
    if (x == 0) return std::nullopt;
    return int_valuation(numerator(x), p) - int_valuation(denominator(x), p);
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    // extended gcd, iterative
    BigInt old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw DivisionByZero("mod_inverse: not invertible");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    BigInt d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // Deterministic for n < 3.3e24 with these witnesses.
    const std::array<int, 13> witnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int a : witnesses) {
        BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

BigInt ceil_rat(const BigRat& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    BigInt quot = num / den;  // truncates toward zero
    if (quot * den < num) ++quot;
    return quot;
}

BigInt floor_rat_plus_one(const BigRat& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    BigInt quot = num / den;
    if (quot * den > num) --quot;
    return quot + 1;
}

}  // namespace padicdyn
