"""Exact coefficient domains and dense univariate polynomial arithmetic.

One polynomial class serves several rings: Q[x] for curve work, F_p[x] for
reduction checks, Z[x] for integer Hankel matrices, and the nested ring
(Q[x])[z] used for bivariate series manipulation (z outside, x inside).
A small domain object supplies the coefficient operations, so polynomial
code never needs to know which ring it lives in.  Everything here is exact;
no floating point enters this module.
"""

from __future__ import annotations

from fractions import Fraction

from .places import is_prime


class DomainError(ArithmeticError):
    """An operation left its coefficient domain (inexact division, bad modulus)."""


class _OperatorDomain:
    # Shared arithmetic for domains whose elements support +, -, * natively.
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return not a

    def eq(self, a, b):
        return a == b


class RationalField(_OperatorDomain):
    """Arbitrary-precision rationals (fractions.Fraction): the universal exact scalar.

    Fraction already guarantees lowest terms and a positive denominator, so
    these invariants hold for every scalar that passes through the library.
    """

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def exact_div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return type(other) is RationalField

    def __hash__(self):
        return hash("cantordiv.QQ")


class IntegerRing(_OperatorDomain):
    """Arbitrary-precision integers; division is checked for exactness."""

    zero = 0
    one = 1

    def from_int(self, k):
        return int(k)

    def exact_div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero in ZZ")
        q, r = divmod(a, b)
        if r:
            raise DomainError(f"inexact integer division {a} / {b}")
        return q

    def __repr__(self):
        return "ZZ"

    def __eq__(self, other):
        return type(other) is IntegerRing

    def __hash__(self):
        return hash("cantordiv.ZZ")


class PrimeField:
    """F_p with elements stored as plain ints in [0, p)."""

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, k):
        return k % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def exact_div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return (a * pow(b, -1, self.p)) % self.p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return type(other) is PrimeField and other.p == self.p

    def __hash__(self):
        return hash(("cantordiv.GF", self.p))


class PolyRing:
    """The ring dom[x] viewed as a coefficient domain (for bivariate work)."""

    def __init__(self, base):
        self.base = base
        self.zero = Poly(base, ())
        self.one = Poly(base, (base.one,))

    def from_int(self, k):
        return Poly(self.base, (self.base.from_int(k),))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return not a

    def eq(self, a, b):
        return a == b

    def exact_div(self, a, b):
        return a.exact_div(b)

    def __repr__(self):
        return f"{self.base!r}[x]"

    def __eq__(self, other):
        return type(other) is PolyRing and other.base == self.base

    def __hash__(self):
        return hash(("cantordiv.PolyRing", self.base))


QQ = RationalField()
ZZ = IntegerRing()

_GF_CACHE = {}


def GF(p):
    """Return the (cached) prime field with p elements."""
    try:
        return _GF_CACHE[p]
    except KeyError:
        fld = PrimeField(p)
        _GF_CACHE[p] = fld
        return fld


def _dpow(dom, c, k):
    # c**k by binary exponentiation using domain multiplication.
    acc = dom.one
    base = c
    while k:
        if k & 1:
            acc = dom.mul(acc, base)
        base = dom.mul(base, base)
        k >>= 1
    return acc


class Poly:
    """Dense univariate polynomial over `dom`, coefficients low degree first.

    Instances are immutable; trailing zero coefficients are stripped, so the
    zero polynomial has an empty coefficient tuple.  Its degree is None -- a
    deliberate sentinel, never an ordinary integer, so degree formulas must
    treat the zero polynomial explicitly.
    """

    __slots__ = ("dom", "coeffs")

    def __init__(self, dom, coeffs=()):
        cs = list(coeffs)
        while cs and dom.is_zero(cs[-1]):
            cs.pop()
        self.dom = dom
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dom):
        return cls(dom, ())

    @classmethod
    def one(cls, dom):
        return cls(dom, (dom.one,))

    @classmethod
    def x(cls, dom):
        return cls(dom, (dom.zero, dom.one))

    @classmethod
    def constant(cls, dom, c):
        return cls(dom, (c,))

    @classmethod
    def from_ints(cls, dom, ints):
        return cls(dom, tuple(dom.from_int(k) for k in ints))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.dom.eq(self.coeffs[-1], self.dom.one)

    def coeff(self, k):
        """Coefficient of x**k (zero beyond the stored length)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.dom.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            type(other) is Poly
            and self.dom == other.dom
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.dom, self.coeffs))

    def _check_same(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if self.dom != other.dom:
            raise DomainError(f"mixed coefficient domains {self.dom!r} and {other.dom!r}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._check_same(other)
        dom = self.dom
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        add = dom.add
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(dom, out)

    def __sub__(self, other):
        self._check_same(other)
        dom = self.dom
        sub, neg = dom.sub, dom.neg
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = []
        for i in range(n):
            if i < len(a):
                out.append(sub(a[i], b[i]) if i < len(b) else a[i])
            else:
                out.append(neg(b[i]))
        return Poly(dom, out)

    def __neg__(self):
        neg = self.dom.neg
        return Poly(self.dom, tuple(neg(c) for c in self.coeffs))

    def __mul__(self, other):
        self._check_same(other)
        dom = self.dom
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(dom, ())
        add, mul, zero = dom.add, dom.mul, dom.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if dom.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(dom, out)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative polynomial power")
        acc = Poly.one(self.dom)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def scale(self, c):
        """Multiply by a scalar from the coefficient domain (ints are coerced)."""
        dom = self.dom
        if isinstance(c, int):
            c = dom.from_int(c)
        if dom.is_zero(c):
            return Poly(dom, ())
        mul = dom.mul
        return Poly(dom, tuple(mul(a, c) for a in self.coeffs))

    def mul_xk(self, k):
        """Multiply by x**k."""
        if not self.coeffs or k == 0:
            return self if self.coeffs or k == 0 else Poly(self.dom, ())
        return Poly(self.dom, (self.dom.zero,) * k + self.coeffs)

    def __call__(self, v):
        """Evaluate at a domain element by Horner's rule."""
        dom = self.dom
        if isinstance(v, int):
            v = dom.from_int(v)
        acc = dom.zero
        for c in reversed(self.coeffs):
            acc = dom.add(dom.mul(acc, v), c)
        return acc

    def derivative(self):
        dom = self.dom
        out = [dom.mul(c, dom.from_int(i)) for i, c in enumerate(self.coeffs) if i > 0]
        return Poly(dom, out)

    def map_coeffs(self, fn, new_dom):
        """Apply fn to every coefficient, landing in new_dom."""
        return Poly(new_dom, tuple(fn(c) for c in self.coeffs))

    # -- division -----------------------------------------------------------

    def divmod_monic(self, f):
        """Exact Euclidean division by a monic polynomial; returns (q, r)."""
        if not f:
            raise ZeroDivisionError("division by the zero polynomial")
        if not f.is_monic:
            raise DomainError("modulus must be monic")
        dom = self.dom
        df = f.degree
        if df == 0:
            return self, Poly(dom, ())
        r = list(self.coeffs)
        if len(r) <= df:
            return Poly(dom, ()), self
        q = [dom.zero] * (len(r) - df)
        sub, mul = dom.sub, dom.mul
        ftail = f.coeffs[:-1]
        for i in range(len(r) - 1, df - 1, -1):
            c = r[i]
            if dom.is_zero(c):
                continue
            q[i - df] = c
            base = i - df
            for k, fc in enumerate(ftail):
                r[base + k] = sub(r[base + k], mul(c, fc))
            r[i] = dom.zero
        return Poly(dom, q), Poly(dom, r[:df])

    def rem(self, f):
        """Remainder mod a monic polynomial (degree < deg f)."""
        return self.divmod_monic(f)[1]

    def _divmod_general(self, other):
        # Long division; leading-coefficient divisions must be exact in dom.
        dom = self.dom
        db = other.degree
        lb = other.lead
        r = list(self.coeffs)
        if len(r) - 1 < db:
            return Poly(dom, ()), self
        q = [dom.zero] * (len(r) - db)
        sub, mul, xdiv = dom.sub, dom.mul, dom.exact_div
        btail = other.coeffs[:-1]
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if dom.is_zero(c):
                continue
            qc = xdiv(c, lb)
            q[i - db] = qc
            base = i - db
            for k, bc in enumerate(btail):
                r[base + k] = sub(r[base + k], mul(qc, bc))
            r[i] = dom.zero
        return Poly(dom, q), Poly(dom, r[:db])

    def exact_div(self, other):
        """Exact polynomial division; raises DomainError when inexact."""
        self._check_same(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return self
        dom = self.dom
        if other.degree == 0:
            c = other.coeffs[0]
            return Poly(dom, tuple(dom.exact_div(a, c) for a in self.coeffs))
        q, r = self._divmod_general(other)
        if r:
            raise DomainError("inexact polynomial division")
        return q

    # -- display ------------------------------------------------------------

    def __str__(self):
        return self.format()

    def format(self, var="x"):
        """Human form, descending powers: '3x^4 - 6x^2 - 1'."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if self.dom.is_zero(c):
                continue
            s = str(c)
            negative = s.startswith("-")
            if negative:
                s = s[1:]
            if "/" in s or isinstance(c, Poly):
                s = f"({s})"
            if k > 0:
                mono = var if k == 1 else f"{var}^{k}"
                s = mono if s == "1" else f"{s}{mono}"
            if not parts:
                parts.append(f"-{s}" if negative else s)
            else:
                parts.append(f"- {s}" if negative else f"+ {s}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly<{self.dom!r}>({self.format()})"


def poly_mod(a, f):
    """Remainder of exact Euclidean division by a monic polynomial f."""
    return a.rem(f)


def pow_mod(base, e, modulus):
    """base**e mod a monic modulus, by square and multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    acc = Poly.one(base.dom)
    b = base.rem(modulus)
    while e:
        if e & 1:
            acc = (acc * b).rem(modulus)
        b = (b * b).rem(modulus)
        e >>= 1
    return acc


def prem(a, b):
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a  mod  b."""
    a._check_same(b)
    if not b:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    if not a or a.degree < b.degree:
        raise ValueError("pseudo-division needs deg a >= deg b")
    if b.is_monic:
        return a.rem(b)
    dom = a.dom
    l = b.lead
    r = a
    e = a.degree - b.degree + 1
    while r and r.degree >= b.degree:
        d = r.degree - b.degree
        r = r.scale(l) - b.mul_xk(d).scale(r.lead)
        e -= 1
    if e > 0:
        r = r.scale(_dpow(dom, l, e))
    return r


def resultant(a, b):
    """Res(a, b) by the fraction-free subresultant remainder sequence.

    For monic a this is the product of b over the roots of a; the usual
    sign conventions Res(a,b) = (-1)^(deg a * deg b) Res(b,a) and the
    multiplicativity Res(a, bc) = Res(a,b) Res(a,c) hold exactly.
    """
    if not a or not b:
        raise ValueError("resultant of the zero polynomial is undefined")
    a._check_same(b)
    dom = a.dom
    A, B = a, b
    s = 1
    if A.degree < B.degree:
        if (A.degree * B.degree) & 1:
            s = -s
        A, B = B, A
    if B.degree == 0:
        res = _dpow(dom, B.coeffs[0], A.degree)
        return res if s == 1 else dom.neg(res)
    g = dom.one
    h = dom.one
    while True:
        dA, dB = A.degree, B.degree
        delta = dA - dB
        if (dA & 1) and (dB & 1):
            s = -s
        R = prem(A, B)
        if not R:
            return dom.zero
        A = B
        divisor = dom.mul(g, _dpow(dom, h, delta))
        B = Poly(dom, tuple(dom.exact_div(c, divisor) for c in R.coeffs))
        g = A.lead
        if delta == 1:
            h = g
        elif delta > 1:
            h = dom.exact_div(_dpow(dom, g, delta), _dpow(dom, h, delta - 1))
        if B.degree == 0:
            break
    dA = A.degree
    res = dom.exact_div(_dpow(dom, B.coeffs[0], dA), _dpow(dom, h, dA - 1))
    return res if s == 1 else dom.neg(res)


def discriminant(f):
    """Discriminant of a monic polynomial of degree >= 2.

    disc(f) = (-1)^(d(d-1)/2) Res(f, f'); nonzero exactly when f is separable.
    """
    if not f or not f.is_monic:
        raise DomainError("discriminant requires a monic polynomial")
    d = f.degree
    if d < 2:
        raise ValueError("discriminant requires degree >= 2")
    res = resultant(f, f.derivative())
    if (d * (d - 1) // 2) & 1:
        res = f.dom.neg(res)
    return res


def det_bareiss(rows, dom):
    """Determinant by fraction-free Bareiss elimination over an exact domain.

    Works over any domain with exact division (integers, rationals, or a
    polynomial ring); every intermediate entry is a minor of the input, so
    coefficient growth stays under control.
    """
    n = len(rows)
    if n == 0:
        return dom.one
    for row in rows:
        if len(row) != n:
            raise ValueError("determinant needs a square matrix")
    m = [list(row) for row in rows]
    sign = 1
    prev = dom.one
    for k in range(n - 1):
        if dom.is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not dom.is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return dom.zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = dom.sub(dom.mul(pivot, m[i][j]), dom.mul(mik, m[k][j]))
                m[i][j] = dom.exact_div(num, prev)
            m[i][k] = dom.zero
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else dom.neg(det)


def det_gauss(rows, dom):
    """Determinant by Gaussian elimination over a field (a second, independent path)."""
    n = len(rows)
    if n == 0:
        return dom.one
    m = [list(row) for row in rows]
    sign = 1
    det = dom.one
    for k in range(n):
        pivot_row = None
        for i in range(k, n):
            if not dom.is_zero(m[i][k]):
                pivot_row = i
                break
        if pivot_row is None:
            return dom.zero
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        det = dom.mul(det, pivot)
        for i in range(k + 1, n):
            if dom.is_zero(m[i][k]):
                continue
            factor = dom.exact_div(m[i][k], pivot)
            for j in range(k, n):
                m[i][j] = dom.sub(m[i][j], dom.mul(factor, m[k][j]))
    return det if sign == 1 else dom.neg(det)


def newton_interpolate(xs, ys, dom):
    """Interpolating polynomial through (xs[i], ys[i]) over a field domain.

    Uses Newton divided differences, O(n^2) exact field operations.
    """
    if len(xs) != len(ys):
        raise ValueError("point and value lists differ in length")
    n = len(xs)
    if n == 0:
        return Poly(dom, ())
    c = list(ys)
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            num = dom.sub(c[i], c[i - 1])
            den = dom.sub(xs[i], xs[i - k])
            c[i] = dom.exact_div(num, den)
    poly = Poly(dom, ())
    for i in range(n - 1, -1, -1):
        shift = Poly(dom, (dom.neg(xs[i]), dom.one))
        poly = poly * shift + Poly.constant(dom, c[i])
    return poly
