from fractions import Fraction

import pytest

from primeul.egf import TruncatedEgf, egf_exp, egf_log, egf_mul, egf_sqrt
from primeul.intpoly import IntPoly, ONE, Z, ZM1


def test_exp_of_monomial():
    # exp(x (z-1)) has coefficient (z-1)^n at x^n/n!
    f = TruncatedEgf.x_times(ZM1, 6)
    e = egf_exp(f)
    for n in range(7):
        assert e.coeff_intpoly(n) == ZM1 ** n


def test_exp_log_roundtrip():
    f = TruncatedEgf.from_polys([ONE, Z, IntPoly((1, 1)), IntPoly((2, 0, 3))], 5)
    assert egf_exp(egf_log(f)).coeffs == f.coeffs


def test_sqrt_squares_back():
    f = TruncatedEgf.from_polys(
        [ONE, IntPoly((0, 2)), IntPoly((1, 4, 1)), IntPoly((3,))], 6)
    r = egf_sqrt(f)
    assert (r * r).coeffs == f.coeffs


def test_mul_binomial_weights():
    # (sum x^n/n!) * (sum x^n/n!) = sum 2^n x^n/n!
    ones = TruncatedEgf.from_polys([ONE] * 7, 6)
    sq = egf_mul(ones, ones)
    for n in range(7):
        assert sq.coeff_intpoly(n) == IntPoly((2 ** n,))


def test_scale_x():
    f = TruncatedEgf.from_polys([ONE, Z, Z], 4)
    g = f.scale_x(2)
    assert g.coeff(0) == (Fraction(1),)
    assert g.coeff(1) == (Fraction(0), Fraction(2))
    assert g.coeff(2) == (Fraction(0), Fraction(4))


def test_preconditions():
    f = TruncatedEgf.from_polys([ONE, Z], 3)
    with pytest.raises(ValueError):
        egf_exp(f)  # nonzero constant coefficient
    g = TruncatedEgf.x_times(Z, 3)
    with pytest.raises(ValueError):
        egf_log(g)  # constant coefficient not 1
    with pytest.raises(ValueError):
        egf_sqrt(g)


def test_order_mismatch():
    with pytest.raises(ValueError):
        TruncatedEgf.constant(1, 3) + TruncatedEgf.constant(1, 4)


def test_coeff_intpoly_rejects_fractions():
    f = egf_sqrt(TruncatedEgf.from_polys([ONE, ONE], 2))
    with pytest.raises(ValueError):
        f.coeff_intpoly(1)  # 1/2


def test_div_inverts_mul():
    from primeul.egf import egf_div

    g = TruncatedEgf.from_polys([IntPoly((2,)), Z, IntPoly((1, 1))], 5)
    f = TruncatedEgf.from_polys([ONE, IntPoly((0, 3)), Z], 5)
    q = egf_div(egf_mul(f, g), g)
    assert q.coeffs == f.coeffs
    with pytest.raises(ValueError):
        egf_div(f, TruncatedEgf.from_polys([Z, ONE], 5))  # constant term z
