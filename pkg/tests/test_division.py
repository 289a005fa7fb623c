"""Hankel division polynomials: shape, determinant paths, structure, reduction."""

import random
from fractions import Fraction

import pytest

from cantordiv import (
    BudgetExceededError,
    CurveSpec,
    GF,
    Poly,
    PolyRing,
    QQ,
    default_n_cap,
    hankel_matrix,
    hankel_psi,
    hankel_shape,
    pj_table,
    psi_mod_p,
    random_curve,
    validate_psi,
)
from test_algebra import det_cofactor

G1 = CurveSpec.elliptic(-1, 0)
G2 = CurveSpec(2, (0, 0, 0, -1, 1))


def qpoly(*ints):
    return Poly.from_ints(QQ, ints)


def test_unit_element_cases():
    for curve in (G1, G2):
        g = curve.genus
        for n in (g, g + 1):
            res = hankel_psi(curve, n)
            assert res.psi == Poly.one(QQ)
            assert res.dim == 0
            assert res.b_n == 1
            assert res.d_n == 0
            assert res.c_n == 1


def test_psi_anchors_genus_one():
    r3 = hankel_psi(G1, 3)
    assert r3.psi == qpoly(-1, 0, -6, 0, 3)
    assert r3.b_n == 3 and r3.dim == 1 and r3.d_n == 2 and r3.c_n == 1
    assert r3.parity == "g"
    r4 = hankel_psi(G1, 4)
    assert r4.psi == qpoly(2, 0, -10, 0, -10, 0, 2)
    assert r4.degree == 6 and r4.b_n == 2
    assert r4.parity == "g+1"
    r5 = hankel_psi(G1, 5)
    t = pj_table(G1, 4)
    assert r5.psi == t[2] * t[4] - t[3] * t[3]


def test_psi_anchor_genus_two():
    r4 = hankel_psi(G2, 4)
    assert r4.dim == 1
    assert r4.psi == pj_table(G2, 3)[3]
    assert r4.degree == 12  # g(n^2 - g^2)/2


def test_hankel_matrix_symmetry():
    for curve, n in ((G1, 9), (G1, 8), (G2, 8), (G2, 9)):
        base, dim = hankel_shape(curve.genus, n)
        rows = hankel_matrix(curve, n)
        table = pj_table(curve, base + 2 * (dim - 1))
        for i in range(dim):
            for j in range(dim):
                assert rows[i][j] == rows[j][i] == table[base + i + j]


def test_bareiss_matches_cofactor_small():
    ring = PolyRing(QQ)
    for n in (5, 7, 9):  # dimensions 2, 3, 4
        rows = hankel_matrix(G1, n)
        assert hankel_psi(G1, n).psi == det_cofactor(rows, ring)


def test_interp_path_matches_bareiss():
    for curve, ns in ((G1, (4, 5, 8, 11)), (G2, (6, 7))):
        for n in ns:
            a = hankel_psi(curve, n, method="bareiss").psi
            b = hankel_psi(curve, n, method="interp").psi
            assert a == b, (curve.genus, n)


def test_degree_formula_and_integrality():
    rng = random.Random(21)
    curves = [G1, G2, random_curve(1, rng), random_curve(3, rng)]
    for curve in curves:
        g = curve.genus
        for n in range(g, g + 8):
            res = hankel_psi(curve, n)
            assert res.degree == res.expected_degree, (g, n)
            assert res.b_n.denominator == 1


def test_validate_psi_report():
    report = validate_psi(hankel_psi(G1, 3), [2, 5, 7])
    assert report.passed
    names = [c.name for c in report.checks]
    assert "degree" in names and "b_integral" in names
    # p = 3 divides n = 3, so it is inadmissible and must not be checked
    report3 = validate_psi(hankel_psi(G1, 3), [3])
    assert [c.name for c in report3.checks] == ["degree", "b_integral"]
    assert report3.passed


def test_budget_cap():
    assert default_n_cap(1) == 30
    assert default_n_cap(2) == 20
    assert default_n_cap(3) == 14
    with pytest.raises(BudgetExceededError):
        hankel_psi(G1, 31)
    with pytest.raises(BudgetExceededError):
        hankel_psi(G1, 12, n_cap=11)
    assert hankel_psi(G1, 12, n_cap=12).n == 12


def test_n_below_genus_rejected():
    with pytest.raises(ValueError):
        hankel_psi(G2, 1)


def test_cache_returns_same_object():
    a = hankel_psi(G1, 6)
    b = hankel_psi(G1, 6)
    assert a is b


def test_psi_mod_p_examples():
    r3 = hankel_psi(G1, 3)
    reduced = psi_mod_p(r3, 5)
    assert reduced == Poly.from_ints(GF(5), (4, 0, 4, 0, 3))
    assert psi_mod_p(hankel_psi(G1, 1), 7) == Poly.one(GF(7))
    # b(3) = 3 vanishes mod 3: the reduction drops degree
    dropped = psi_mod_p(r3, 3)
    assert dropped.degree is not None and dropped.degree < 4


def test_psi_mod_p_preconditions():
    with pytest.raises(ValueError):
        psi_mod_p(hankel_psi(G2, 5), 3)  # needs p >= 2g+1 = 5
    fractional = CurveSpec(1, (0, Fraction(1, 5), 1))
    with pytest.raises(ValueError):
        psi_mod_p(hankel_psi(fractional, 3), 5)  # curve not 5-integral
