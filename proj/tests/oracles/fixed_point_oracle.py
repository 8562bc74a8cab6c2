#!/usr/bin/env python3
"""Independent oracle for the hand-derived Green fixed-point values.

Derives G_f for f(z) = p*z^2 at two families of points using nothing but
the valuation recursion v(f(z)) = 1 + 2*v(z) and the two closed forms

    escaping orbit:  G = e_n / d^n - e_0 + L / (d^n * (d - 1))
    bounded orbit:   G = -e_0

where e_k = max(0, -v_k) is the exponent of ||f^k(z)|| = p^{e_k} and
L = -v(leading coefficient).  Everything is exact Fraction arithmetic;
the library under test is never imported.

Run directly: prints one line per case and exits nonzero on mismatch
with the frozen expectations asserted by the acceptance suite.
"""

from fractions import Fraction
import sys

EXPECTED = Fraction(-1)  # coefficient of log p, for both families below


def green_escaping(v0: int, p: int) -> Fraction:
    # f = p*z^2, |z| = p^{-v0} with v0 < 0 chosen beyond the escape
    # radius p (i.e. -v0 > 1).  Valuation recursion: v_{k+1} = 1 + 2 v_k.
    d = 2
    L = 1  # -v(a_d) = -v(p) = ... v(p) = 1, so L = -1?  careful below.
    # a_d = p has valuation 1, so log_p |a_d| = -1.
    L = -1
    # escape is immediate (n = 0) since |z| = p^{-v0} > p
    assert -v0 > 1
    e0 = max(0, -v0)
    n = 0
    en = e0
    return Fraction(en, d**n) - e0 + Fraction(L, d**n * (d - 1))


def green_bounded(p: int) -> Fraction:
    # f = p*z^2 at z = 1/p: v0 = -1 and v_{k+1} = 1 + 2 v_k = -1 forever,
    # a genuine fixed point of the valuation recursion.  Check it stays
    # bounded for a while, then apply the bounded-orbit closed form.
    v = -1
    for _ in range(64):
        v = 1 + 2 * v
        assert v == -1
    e0 = max(0, 1)
    return Fraction(-e0)


def main() -> int:
    failures = 0
    for p in (2, 3, 5):
        esc = green_escaping(v0=-2, p=p)  # |z| = p^2
        bnd = green_bounded(p)
        for name, got in (("escaping |z|=p^2", esc), ("bounded z=1/p", bnd)):
            ok = got == EXPECTED
            print(f"p={p} {name}: G = {got} * log {p}  "
                  f"{'ok' if ok else 'MISMATCH (expected %s)' % EXPECTED}")
            failures += 0 if ok else 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
