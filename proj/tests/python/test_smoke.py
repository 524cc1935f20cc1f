import math
from fractions import Fraction

import pytest

import dunkl


def test_context_shape():
    ctx = dunkl.Context("B2", [1, Fraction(1, 2)])
    assert ctx.rank == 2
    assert ctx.group_order == 8
    assert len(ctx.orbits) == 2
    assert ctx.gamma == Fraction(3)
    assert dunkl.Context("A2", ["3/4"]).k == [Fraction(3, 4)]


def test_bad_multiplicity():
    with pytest.raises(ValueError):
        dunkl.Context("B2", [1, 2, 3])


def test_polynomial_roundtrip():
    p = dunkl.Polynomial("1/3*x1^2*x2 - 2*x2", 2)
    assert str(p) == "1/3*x1^2*x2 - 2*x2"
    assert p.terms()[(2, 1)] == Fraction(1, 3)
    assert p([3, 1]) == Fraction(1)
    assert p - p == dunkl.Polynomial("0", 2)


def test_rank_one_dunkl():
    ctx = dunkl.Context("Z2", [1])
    x3 = dunkl.Polynomial.monomial([3])
    assert dunkl.dunkl(ctx, 0, x3) == dunkl.Polynomial("5*x1^2", 1)


def test_second_moment():
    ctx = dunkl.Context("B2", [1, Fraction(1, 2)])
    r2 = dunkl.Polynomial("x1^2 + x2^2", 2)
    t = Fraction(1, 2)
    assert dunkl.gaussian_integrate(ctx, dunkl.Polynomial("1", 2), t) == 1
    assert dunkl.gaussian_integrate(ctx, r2, t) == 2 * t * (2 + 2 * ctx.gamma)


def test_classical_hermite():
    ctx = dunkl.Context("Z2", [0])
    h = dunkl.appell_character(ctx, [3], Fraction(1, 4))
    assert h == dunkl.Polynomial("x1^3 - 3/2*x1", 1)
    assert dunkl.rodriguez_cocharacter(ctx, [3], Fraction(1, 4)) == dunkl.appell_cocharacter(ctx, [3], Fraction(1, 4))


def test_heat_inverts():
    ctx = dunkl.Context("A2", [Fraction(1, 2)])
    p = dunkl.moment(ctx, [2, 1, 0])
    t = Fraction(1, 3)
    assert dunkl.heat(ctx, -t, dunkl.heat(ctx, t, p)) == p


def test_verify_and_fault():
    ctx = dunkl.Context("Z2", [1])
    report = dunkl.verify(ctx, "biorthogonality", max_degree=3)
    assert report["passed"] and report["failures"] == 0
    bad = dunkl.verify(ctx, "biorthogonality", max_degree=3, inject_fault=True)
    assert not bad["passed"] and bad["counterexamples"]


def test_kernel_numeric():
    flat = dunkl.Context("Z2^2", [0])
    v = dunkl.kernel(flat, [0.5, -1.0], [1.0, 0.25])
    assert abs(v["value"] - math.exp(0.25)) <= 1e-12 * math.exp(0.25)
    ctx = dunkl.Context("Z2", [Fraction(3, 2)])
    series = dunkl.kernel(ctx, [1.2], [-0.7])["value"]
    assert abs(series - dunkl.kernel_z2_closed(1.5, 1.2, -0.7)) < 1e-12
    assert dunkl.c_k(ctx, "closed") == pytest.approx(dunkl.c_k(ctx, "quadrature"), rel=1e-10)
    assert dunkl.theta(dunkl.Context("B2", [1, Fraction(1, 2)]), 0.5, [0, 0], [1, 2])["value"] == pytest.approx(1.0)
