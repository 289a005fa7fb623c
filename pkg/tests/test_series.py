"""The three routes to the series coefficients P_j and their structural laws."""

import random
from fractions import Fraction

import pytest

from cantordiv import (
    CurveSpec,
    Poly,
    QQ,
    build_e1,
    catalan,
    compare_tables,
    convolution_lhs,
    convolution_rhs,
    pj_closed_form,
    pj_newton_sqrt,
    pj_rj_recursion,
    pj_table,
    pow_mod,
    random_curve,
)

G1 = CurveSpec.elliptic(-1, 0)
G1B = CurveSpec.elliptic(0, 1)
G2 = CurveSpec(2, (0, 0, 0, -1, 1))


def qpoly(*ints):
    return Poly.from_ints(QQ, ints)


def test_e1_fixture():
    e1 = build_e1(G1)
    assert e1.degree == 2
    assert [str(c) for c in e1.coeffs] == ["-3x^2 + 1", "3x", "-1"]


def test_e1_first_coefficient_is_minus_fprime():
    rng = random.Random(11)
    for g in (1, 2, 3):
        c = random_curve(g, rng)
        e1 = build_e1(c)
        assert e1.degree == 2 * g
        assert e1.coeff(0) == -c.fprime


def test_closed_form_anchors():
    t = pj_closed_form(G1, 4)
    assert t[0] == Poly.constant(QQ, Fraction(1, 2))
    assert t[1] == qpoly(1, 0, -3)
    assert t[2] == qpoly(-1, 0, -6, 0, 3)
    assert t[3] == qpoly(2, 0, -10, 0, -10, 0, 2)
    assert t[4] == qpoly(-5, 0, 20, 0, -70, 0, -28, 0, 3)


def test_p0_and_p1_for_all_genera():
    rng = random.Random(12)
    for g in (1, 2, 3):
        c = random_curve(g, rng)
        t = pj_closed_form(c, 1)
        assert t[0] == Poly.constant(QQ, Fraction((-1) ** (g + 1), 2))
        assert t[1] == c.fprime.scale((-1) ** g)


def test_three_methods_agree():
    for curve, J in ((G1, 8), (G1B, 8), (G2, 6)):
        a = pj_closed_form(curve, J)
        b = pj_newton_sqrt(curve, J)
        c = pj_rj_recursion(curve, J)
        assert a.entries == b.entries == c.entries
        assert compare_tables(a, b) is None


def test_three_methods_agree_random():
    rng = random.Random(13)
    for g, J in ((1, 6), (2, 4)):
        for _ in range(2):
            curve = random_curve(g, rng)
            a = pj_closed_form(curve, J)
            b = pj_newton_sqrt(curve, J)
            c = pj_rj_recursion(curve, J)
            assert a.entries == b.entries == c.entries


def test_newton_sqrt_at_j_zero():
    t = pj_newton_sqrt(G1, 0)
    assert t.entries == (Poly.constant(QQ, Fraction(1, 2)),)


def test_degree_and_integral_leading_coefficient():
    rng = random.Random(14)
    for g in (1, 2, 3):
        curve = random_curve(g, rng)
        t = pj_closed_form(curve, 6)
        for j in range(1, 7):
            assert t[j].degree == 2 * j * g
            assert t[j].lead.denominator == 1


def test_convolution_identity():
    # sum_{a+b=j} P_a P_b = (4F)^(j-1) (-1)^j F^(j)/j!, zero for j >= 2g+2
    for curve, J in ((G1, 10), (G2, 8)):
        t = pj_table(curve, J)
        assert convolution_lhs(t, 0) == Poly.constant(QQ, Fraction(1, 4))
        for j in range(1, J + 1):
            assert convolution_lhs(t, j) == convolution_rhs(curve, j), (curve.genus, j)
            if j >= 2 * curve.genus + 2:
                assert not convolution_rhs(curve, j)


def test_catalan_congruence():
    # P_j = (-1)^g c_{j-1} (f')^j  mod f
    rng = random.Random(15)
    curves = [G1, G2, random_curve(1, rng), random_curve(2, rng)]
    for curve in curves:
        g = curve.genus
        t = pj_table(curve, 8)
        for j in range(1, 9):
            lhs = t[j].rem(curve.f)
            rhs = pow_mod(curve.fprime, j, curve.f).scale(
                Fraction((-1) ** g * catalan(j - 1))
            )
            assert lhs == rhs, (g, j)


def test_table_cache_and_slicing():
    curve = CurveSpec.elliptic(2, 3)
    t8 = pj_table(curve, 8)
    t5 = pj_table(curve, 5)
    assert t5.entries == t8.entries[:6]
    assert pj_table(curve, 8) == pj_table(curve, 8)
    assert pj_table(curve, 8).entries[0] is t8.entries[0]  # shared cached polys


def test_compare_tables_locates_difference():
    a = pj_table(G1, 5)
    entries = list(a.entries)
    entries[3] = entries[3] + Poly.from_ints(QQ, (0, 0, 1))
    from cantordiv import PjTable

    b = PjTable(G1, "closed-form", tuple(entries))
    assert compare_tables(a, b) == (3, 2)


def test_rj_recursion_requires_positive_j():
    with pytest.raises(ValueError):
        pj_rj_recursion(G1, 0)


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        pj_table(G1, 3, "quadrature")
