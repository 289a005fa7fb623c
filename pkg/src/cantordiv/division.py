"""Division polynomials psi_n as Hankel determinants of the series table.

For n >= g the polynomial psi_n is the determinant of the Hankel matrix of
P_j's whose shape depends on the parity of n - g (see catalan.hankel_shape);
dimension zero yields the unit polynomial, covering n = g and n = g + 1.
The determinant is taken over Q[x] by fraction-free Bareiss elimination; an
evaluation/interpolation route through scalar determinants is kept as a
second, independent path for cross-checking.

Structural facts recorded with each result: the degree g(n^2-g^2)/2 or
g(n^2-(g+1)^2)/2 by parity, the integer leading coefficient b(n), the
Hankel dimension, the exponent d(n) and the Catalan determinant c(n).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .algebra import GF, Poly, PolyRing, QQ, det_bareiss, det_gauss, newton_interpolate
from .catalan import admissible, c_of_n, d_of_n, hankel_shape
from .curves import CurveSpec
from .series import pj_table

_QQX = PolyRing(QQ)

DEFAULT_N_CAPS = {1: 30, 2: 20, 3: 14}


def default_n_cap(genus):
    """Desk-scale ceiling on n (minutes of runtime, not correctness)."""
    return DEFAULT_N_CAPS.get(genus, 12)


class BudgetExceededError(RuntimeError):
    """n is above the configured ceiling; raise the cap to compute anyway."""

    def __init__(self, n, cap):
        super().__init__(
            f"n={n} is above the budget cap {cap}; pass a larger n_cap "
            f"(command line: --n-cap) to compute it anyway"
        )
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class PsiResult:
    """psi_n together with its structural data.

    parity is 'g' when n = g mod 2 and 'g+1' otherwise; sign is the
    empirical unit relating psi_n(root) to c(n) f'(root)^d(n), left None
    until measured (see verify.root_identity).
    """

    curve: CurveSpec
    n: int
    parity: str
    psi: Poly
    b_n: Fraction
    dim: int
    d_n: int
    c_n: int
    sign: int | None = None

    @property
    def degree(self):
        return self.psi.degree

    @property
    def expected_degree(self):
        g = self.curve.genus
        if self.parity == "g":
            return g * (self.n * self.n - g * g) // 2
        return g * (self.n * self.n - (g + 1) * (g + 1)) // 2


def hankel_matrix(curve, n, method="closed-form"):
    """The Hankel matrix of P_j's for (curve, n); entry (i, j) is P_(base+i+j)."""
    base, dim = hankel_shape(curve.genus, n)
    if dim == 0:
        return []
    table = pj_table(curve, base + 2 * (dim - 1), method)
    return [[table[base + i + j] for j in range(dim)] for i in range(dim)]


def _psi_det_bareiss(curve, n):
    rows = hankel_matrix(curve, n)
    return det_bareiss(rows, _QQX)


def _psi_det_interp(curve, n):
    # Evaluate every entry at enough integer points, take scalar
    # determinants over Q, and interpolate the results back to Q[x].
    g = curve.genus
    base, dim = hankel_shape(g, n)
    if dim == 0:
        return Poly.one(QQ)
    rows = hankel_matrix(curve, n)
    bound = g * (n * n - g * g) // 2  # parity-max degree bound
    points = []
    k = 0
    while len(points) < bound + 1:
        points.append(Fraction(k))
        if k > 0 and len(points) < bound + 1:
            points.append(Fraction(-k))
        k += 1
    values = []
    for t in points:
        scalar = [[rows[i][j](t) for j in range(dim)] for i in range(dim)]
        values.append(det_gauss(scalar, QQ))
    return newton_interpolate(points, values, QQ)


_PSI_CACHE = {}
_PSI_LOCK = threading.Lock()


def hankel_psi(curve, n, method="bareiss", n_cap=None):
    """Compute psi_n for a curve.

    method 'bareiss' is the fraction-free polynomial determinant (primary);
    'interp' is the evaluation/interpolation route (independent cross-check).
    Results are cached per (curve, n, method).
    """
    g = curve.genus
    if n < g:
        raise ValueError(f"psi_n needs n >= genus, got n={n}, g={g}")
    cap = default_n_cap(g) if n_cap is None else n_cap
    if n > cap:
        raise BudgetExceededError(n, cap)
    if method not in ("bareiss", "interp"):
        raise ValueError(f"unknown determinant method {method!r}")
    key = (curve, n, method)
    with _PSI_LOCK:
        cached = _PSI_CACHE.get(key)
    if cached is not None:
        return cached
    psi = _psi_det_bareiss(curve, n) if method == "bareiss" else _psi_det_interp(curve, n)
    if not psi:
        raise ArithmeticError(f"psi_{n} vanished identically; the table is corrupt")
    base, dim = hankel_shape(g, n)
    result = PsiResult(
        curve=curve,
        n=n,
        parity="g" if (n - g) % 2 == 0 else "g+1",
        psi=psi,
        b_n=psi.lead,
        dim=dim,
        d_n=d_of_n(g, n),
        c_n=c_of_n(g, n),
    )
    with _PSI_LOCK:
        _PSI_CACHE.setdefault(key, result)
    return result


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class PsiValidation:
    n: int
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)


def validate_psi(res, primes):
    """Degree formula, integrality of b(n), and the divisibility implication.

    For each supplied prime p not dividing (n-g+1)...(n+g-1), the leading
    coefficient b(n) must not be divisible by p either.
    """
    checks = []
    expected = res.expected_degree
    checks.append(
        Check(
            "degree",
            res.degree == expected,
            f"deg psi_{res.n} = {res.degree}, formula gives {expected}",
        )
    )
    integral = res.b_n.denominator == 1
    checks.append(Check("b_integral", integral, f"b({res.n}) = {res.b_n}"))
    for p in primes:
        if not admissible(res.curve.genus, res.n, p):
            continue
        ok = integral and res.b_n.numerator % p != 0
        checks.append(
            Check(
                f"b_not_divisible_p={p}",
                ok,
                f"p={p} admissible for n={res.n}; b({res.n}) = {res.b_n}",
            )
        )
    return PsiValidation(res.n, tuple(checks))


def psi_mod_p(res, p):
    """Coefficient-wise reduction of psi_n modulo p (needs p >= 2g+1).

    Every coefficient of psi_n and of the curve must be p-integral; the
    result is nonzero precisely when p does not divide b(n).
    """
    g = res.curve.genus
    if p < 2 * g + 1:
        raise ValueError(f"reduction needs p >= 2g+1 = {2 * g + 1}, got {p}")
    fld = GF(p)

    def reduce_fraction(q):
        if q.denominator % p == 0:
            raise ValueError(f"coefficient {q} is not {p}-integral")
        return (q.numerator * pow(q.denominator, -1, p)) % p

    for a in res.curve.coeffs:
        reduce_fraction(a)
    return res.psi.map_coeffs(reduce_fraction, fld)
