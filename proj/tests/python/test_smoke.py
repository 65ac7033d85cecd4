"""Smoke tests for the Python bindings, with mpmath as an independent oracle."""

from fractions import Fraction

import mpmath as mp
import sudler_verify as sv


def cf_value_mpmath(period, steps=300):
    """Value of the purely periodic continued fraction [0; period...]."""
    x = mp.mpf(0)
    digits = [period[i % len(period)] for i in range(steps)]
    for a in reversed(digits):
        x = 1 / (a + x)
    return x


def test_cf_value_matches_mpmath():
    mp.mp.dps = 50
    for period in ([1], [6, 5], [5, 4], [6, 5, 5]):
        lo, hi = sv.cf_value("[0;(%s)]" % ",".join(map(str, period)))
        ref = cf_value_mpmath(period)
        assert lo - 1e-12 <= ref <= hi + 1e-12


def test_sudler_product_matches_mpmath():
    mp.mp.dps = 60
    alpha = (mp.sqrt(5) - 1) / 2
    for N in (1, 2, 10, 50):
        ref = mp.nprod(lambda r: 2 * abs(mp.sin(mp.pi * r * alpha)), [1, N], method="direct")
        lo, hi = sv.sudler_product("[0;(1)]", str(N))
        assert lo - 1e-10 <= ref <= hi + 1e-10
        assert hi - lo < 1e-15 * max(1.0, float(ref))


def test_rational_alpha_exact_zero():
    lo, hi = sv.sudler_product("1/2", "2")
    assert lo == 0.0 and hi == 0.0


def test_ostrowski_round_trip():
    digits = sv.ostrowski("[0;(1)]", "100")
    total = 0
    for i, b in enumerate(digits):
        _, q = sv.convergent("[0;(1)]", i)
        total += b * int(q)
    assert total == 100


def test_F_exact_against_fraction_arithmetic():
    T, x, y = 20, Fraction(3, 100), Fraction(4, 100)

    def g(l):
        s = Fraction(0)
        for n in range(1, l + 1):
            nx, ny = n * x, n * y
            ind = (nx.numerator // nx.denominator) == (ny.numerator // ny.denominator)
            s += Fraction(1, 2) - (nx - (nx.numerator // nx.denominator)) * (1 if ind else 0)
        return s

    ref = sum(g(l) / (l * (l + 1)) for l in range(1, T + 1))
    got = Fraction(sv.F_exact(T, "3/100", "4/100"))
    assert got == ref


def test_G_enclosure_contains_pinned_value():
    # G_0([0;(6,5)], 0) = 1.04209...
    lo, hi = sv.G_enclosure("[0;(6,5)]", 0, "0", 4000)
    assert lo <= 1.04209 <= hi
    assert hi - lo < 0.05


def test_eps_prime_pinned():
    lo, hi = sv.eps_prime("[0;(6,5)]", 0, 0, [1, 1])
    # the enclosure is far tighter than the 9-digit pin, so compare midpoints
    assert abs((lo + hi) / 2 - -0.026255917606) < 1e-9
    assert hi - lo < 1e-12


def test_decompose_identity():
    (flo, fhi), (dlo, dhi), digits = sv.decompose_check("[0;(6,5)]", "1000")
    assert all(b >= 0 for b in digits)
    # the K-factor product and the direct evaluation must overlap
    assert flo <= dhi and dlo <= fhi


def test_precision_roundtrip():
    old = sv.get_precision()
    try:
        sv.set_precision(192)
        assert sv.get_precision() == 192
    finally:
        sv.set_precision(old)
