"""Series coefficients P_j(x) of the square root S(z) = sqrt(F(x-z)), three ways.

Setup.  Let F be monic separable of degree 2g+1 and y a formal variable with
y^2 = F(x).  Write E1(z) = (F(x-z) - F(x)) / z, a polynomial of degree 2g in z
whose z^0 coefficient is -F'(x).  The branch of the square root of F(x-z) that
equals (-1)^(g+1) y at z = 0 expands as

    S(z) = (-1)^(g+1) y sqrt(1 + z E1(z)/y^2) = sum_j P_j(x) (2y)^(1-2j) z^j

with P_j in Q[x].  P_0 = (-1)^(g+1)/2, and for j >= 1 the P_j have degree 2jg
with integer leading coefficient (validated on every build).

Closed form.  Binomial expansion gives

    S(z) = (-1)^(g+1) sum_m  C(1/2, m) z^m E1(z)^m y^(1-2m),

and collecting z^j uses y^(1-2m) = y^(1-2j) * y^(2(j-m)) = y^(1-2j) F^(j-m)
(valid since m <= j in the z^j coefficient), so that

    P_j = (-1)^(g+1) 2^(2j-1) sum_{m=0}^{j} C(1/2, m) F^(j-m) [z^(j-m)] E1(z)^m.

This y-power reduction is what turns the mixed (x, y) expansion into honest
polynomials in x alone.

Newton oracle.  Independently, T(z) = sqrt(1 + z E1(z)/F) can be computed by
the Newton iteration T <- (T + U/T)/2 on truncated power series in z.  The
z^j coefficient of T is a rational function with denominator F^j; the series
is therefore carried here in an F-weighted form (coefficient j stored as the
polynomial F^j [z^j] T), where multiplication, inversion and halving are all
polynomial operations.  Then P_j = (-1)^(g+1) 2^(2j-1) F^j [z^j] T, and
T^2 = U is asserted after the iteration.

Derivative recursion.  Finally, taking z-derivatives of S(z)^2 = F(x-z) gives
(1/j!) d^j S/dz^j = R_j(x,z) / (2 S(z))^(2j-1) with R_1 = -F'(x-z) and

    R_{j+1} = (2/(j+1)) ( 2 (dR_j/dz) F(x-z) + (2j-1) R_j F'(x-z) ),

from which P_j = (-1)^(g+1) R_j(x, 0).  The three routes share no
intermediate state, so exact agreement of their tables is a strong check.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import DomainError, Poly, PolyRing, QQ
from .curves import CurveSpec

_QQX = PolyRing(QQ)  # Q[x] as the coefficient domain of polynomials in z

METHODS = ("closed-form", "newton-sqrt", "rj-recursion")


def _embed_x_poly(p):
    """View an x-polynomial as a constant polynomial in z."""
    return Poly(_QQX, (p,)) if p else Poly(_QQX, ())


def _compose_at_x_minus_z(p):
    """p(x - z) as a polynomial in z with x-polynomial coefficients."""
    x_minus_z = Poly(_QQX, (Poly.x(QQ), Poly.constant(QQ, Fraction(-1))))
    acc = Poly(_QQX, ())
    for c in reversed(p.coeffs):
        acc = acc * x_minus_z + _embed_x_poly(Poly.constant(QQ, c))
    return acc


def build_e1(curve):
    """E1(z) = (F(x-z) - F(x)) / z, a z-polynomial of degree 2g over Q[x].

    The z^0 coefficient is -F'(x) (first-order Taylor term of F(x-z)); this
    is asserted, as is the exact cancellation of the constant z-term.
    """
    fxz = _compose_at_x_minus_z(curve.f)
    if fxz.coeff(0) != curve.f:
        raise AssertionError("z^0 coefficient of F(x-z) must be F(x)")
    e1 = Poly(_QQX, fxz.coeffs[1:])
    if e1.coeff(0) != -curve.fprime:
        raise AssertionError("z coefficient of F(x-z) must be -F'(x)")
    return e1


def _binom_half(m):
    """Generalized binomial coefficient C(1/2, m) as an exact rational."""
    num = Fraction(1)
    for i in range(m):
        num *= Fraction(1, 2) - i
    return num / factorial(m)


@dataclass(frozen=True)
class PjTable:
    """P_0..P_J for one curve, tagged with the algorithm that produced it."""

    curve: CurveSpec
    method: str
    entries: tuple

    @property
    def max_j(self):
        return len(self.entries) - 1

    def __getitem__(self, j):
        return self.entries[j]

    def __len__(self):
        return len(self.entries)


def _check_entries(curve, entries):
    # Structural facts every table must satisfy: P_0 = (-1)^(g+1)/2 and,
    # for j >= 1, degree exactly 2jg with integer leading coefficient.
    g = curve.genus
    p0 = Poly.constant(QQ, Fraction((-1) ** (g + 1), 2))
    if entries[0] != p0:
        raise ArithmeticError(f"P_0 = {entries[0]} but the series starts at {p0}")
    for j, p in enumerate(entries):
        if j == 0:
            continue
        if p.degree != 2 * j * g:
            raise ArithmeticError(
                f"deg P_{j} = {p.degree}, expected {2 * j * g} (genus {g})"
            )
        if p.lead.denominator != 1:
            raise ArithmeticError(f"leading coefficient of P_{j} = {p.lead} is not integral")


def pj_closed_form(curve, J):
    """P_0..P_J by binomial expansion and y-power reduction (see module docs)."""
    if J < 0:
        raise ValueError("need J >= 0")
    g = curve.genus
    e1 = build_e1(curve)
    f_pows = [Poly.one(QQ)]
    for _ in range(J):
        f_pows.append(f_pows[-1] * curve.f)
    e1_pow = Poly(_QQX, (Poly.one(QQ),))
    e1_coeffs = [e1_pow.coeffs]  # e1_coeffs[m][k] = [z^k] E1^m
    for _ in range(J):
        e1_pow = e1_pow * e1
        e1_coeffs.append(e1_pow.coeffs)
    sign = (-1) ** (g + 1)
    entries = []
    for j in range(J + 1):
        total = Poly.zero(QQ)
        for m in range(j + 1):
            k = j - m
            cs = e1_coeffs[m]
            if k >= len(cs) or not cs[k]:
                continue
            term = (f_pows[k] * cs[k]).scale(_binom_half(m))
            total = total + term
        entries.append(total.scale(Fraction(2) ** (2 * j - 1) * sign))
    _check_entries(curve, entries)
    return PjTable(curve, "closed-form", tuple(entries))


# -- Newton square root on F-weighted series -------------------------------
#
# A series sum t_j z^j / F^j is stored as the list [t_0, t_1, ...] of
# x-polynomials; sums, Cauchy products and reciprocals all preserve this
# weighted shape, so the iteration below never leaves Q[x].

def _wseries_mul(a, b, prec):
    out = []
    for j in range(prec):
        acc = Poly.zero(QQ)
        for i in range(max(0, j - len(b) + 1), min(j + 1, len(a))):
            acc = acc + a[i] * b[j - i]
        out.append(acc)
    return out


def _wseries_inv(a, prec):
    if a[0] != Poly.one(QQ):
        raise DomainError("weighted series inverse needs constant term 1")
    out = [Poly.one(QQ)]
    for j in range(1, prec):
        acc = Poly.zero(QQ)
        for i in range(1, min(j, len(a) - 1) + 1):
            acc = acc + a[i] * out[j - i]
        out.append(-acc)
    return out


def pj_newton_sqrt(curve, J):
    """P_0..P_J via Newton's iteration for sqrt(1 + z E1(z)/F) (see module docs)."""
    if J < 0:
        raise ValueError("need J >= 0")
    g = curve.genus
    prec = J + 1
    e1 = build_e1(curve)
    u = [Poly.one(QQ)]
    fpow = Poly.one(QQ)
    for j in range(1, prec):
        u.append(e1.coeff(j - 1) * fpow)
        fpow = fpow * curve.f
    t = [Poly.one(QQ)]
    known = 1
    half = Fraction(1, 2)
    while known < prec:
        known = min(2 * known, prec)
        inv_t = _wseries_inv(t, known)
        quot = _wseries_mul(u[:known], inv_t, known)
        t = t + [Poly.zero(QQ)] * (known - len(t))
        t = [(t[j] + quot[j]).scale(half) for j in range(known)]
    square = _wseries_mul(t, t, prec)
    if square != u[:prec]:
        raise ArithmeticError(
            "Newton square root failed to verify T^2 = 1 + z E1/F; "
            "the weighted-series bookkeeping is broken"
        )
    sign = (-1) ** (g + 1)
    entries = [
        t[j].scale(Fraction(2) ** (2 * j - 1) * sign) for j in range(prec)
    ]
    _check_entries(curve, entries)
    return PjTable(curve, "newton-sqrt", tuple(entries))


def pj_rj_recursion(curve, J):
    """P_0..P_J via the derivative recursion on R_j(x, z) (see module docs)."""
    if J < 1:
        raise ValueError("the derivative recursion needs J >= 1")
    g = curve.genus
    fxz = _compose_at_x_minus_z(curve.f)
    fpxz = _compose_at_x_minus_z(curve.fprime)
    sign = (-1) ** (g + 1)
    entries = [Poly.constant(QQ, Fraction(sign, 2))]

    def scale_bivariate(p, c):
        return Poly(_QQX, tuple(inner.scale(c) for inner in p.coeffs))

    r = -fpxz
    entries.append(r.coeff(0).scale(sign))
    for j in range(1, J):
        r = scale_bivariate(
            scale_bivariate(r.derivative() * fxz, 2) + r.scale(2 * j - 1) * fpxz,
            Fraction(2, j + 1),
        )
        entries.append(r.coeff(0).scale(sign))
    _check_entries(curve, entries)
    return PjTable(curve, "rj-recursion", tuple(entries))


_BUILDERS = {
    "closed-form": pj_closed_form,
    "newton-sqrt": pj_newton_sqrt,
    "rj-recursion": pj_rj_recursion,
}

_TABLE_CACHE = {}
_TABLE_LOCK = threading.Lock()


def pj_table(curve, J, method="closed-form"):
    """P_0..P_J for a curve, cached per (curve, method).

    A cached table longer than J is sliced; a shorter one is recomputed and
    replaced.  Tables are immutable, so concurrent readers are safe.
    """
    if method not in _BUILDERS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    key = (curve, method)
    with _TABLE_LOCK:
        cached = _TABLE_CACHE.get(key)
    if cached is not None and cached.max_j >= J:
        if cached.max_j == J:
            return cached
        return PjTable(curve, method, cached.entries[: J + 1])
    table = _BUILDERS[method](curve, max(J, 1) if method == "rj-recursion" else J)
    if table.max_j > J:
        table = PjTable(curve, method, table.entries[: J + 1])
    with _TABLE_LOCK:
        old = _TABLE_CACHE.get(key)
        if old is None or old.max_j < table.max_j:
            _TABLE_CACHE[key] = table
    return table


def compare_tables(a, b):
    """First disagreement between two tables as (j, exponent), or None.

    Cross-method comparison is a first-class operation here, not a test-only
    convenience; the command line surfaces it directly.
    """
    for j in range(min(len(a), len(b))):
        if a[j] != b[j]:
            pa, pb = a[j], b[j]
            for k in range(max(len(pa.coeffs), len(pb.coeffs))):
                if pa.coeff(k) != pb.coeff(k):
                    return j, k
            return j, 0
    return None


def convolution_lhs(table, j):
    """sum_{a+b=j} P_a P_b from a table (needs max_j >= j)."""
    acc = Poly.zero(QQ)
    for a in range(j + 1):
        acc = acc + table[a] * table[j - a]
    return acc


def convolution_rhs(curve, j):
    """(4F)^(j-1) (-1)^j F^(j)/j!, the z^j coefficient of F(x-z) rescaled.

    For j = 0 this is F/(4F) = 1/4; for j beyond deg F it is zero, which
    forces the long tail of vanishing convolutions.
    """
    deriv = curve.f
    for _ in range(j):
        deriv = deriv.derivative()
    coeff = Fraction((-1) ** j, factorial(j))
    if j == 0:
        return Poly.constant(QQ, Fraction(1, 4))
    return (curve.f.scale(4) ** (j - 1)) * deriv.scale(coeff)
