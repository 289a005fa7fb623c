"""Catalan numbers, their Hankel determinants, and the attached exponents.

The m-th Catalan number is c_m = binomial(2m+1, m) / (2m+1).  The scalar
Hankel determinant of shifted Catalan numbers has the closed product form
of Desainte-Catherine and Viennot,

    det (c_{l+i+j})_{0<=i,j<m}  =  prod_{1<=i<=j<=l-1} (i + j + 2m) / (i + j),

which this module uses as an independent oracle for the determinants c(n)
entering the division-polynomial value at a branch point.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .algebra import ZZ, det_bareiss
from .places import is_prime


class CatalanCache:
    """Write-once growing list of Catalan numbers; safe for concurrent reads."""

    def __init__(self):
        self._values = [1]
        self._lock = threading.Lock()

    def __getitem__(self, m):
        if m < 0:
            raise ValueError("Catalan numbers are indexed by m >= 0")
        if m >= len(self._values):
            with self._lock:
                while len(self._values) <= m:
                    k = len(self._values)
                    self._values.append(comb(2 * k + 1, k) // (2 * k + 1))
        return self._values[m]


_CATALAN = CatalanCache()


def catalan(m):
    """The m-th Catalan number, exactly."""
    return _CATALAN[m]


def dcv_product(l, m):
    """The Desainte-Catherine--Viennot product for an m x m Catalan Hankel matrix
    with entries starting at c_l.  Always a positive integer (asserted)."""
    if l < 1 or m < 1:
        raise ValueError("dcv_product needs l, m >= 1")
    value = Fraction(1)
    for i in range(1, l):
        for j in range(i, l):
            value *= Fraction(i + j + 2 * m, i + j)
    if value.denominator != 1 or value <= 0:
        raise ArithmeticError(f"product formula gave a non-integer {value}")
    return value.numerator


def catalan_hankel_det(l, m):
    """det (c_{l+i+j})_{0<=i,j<m} by exact integer Bareiss elimination."""
    if m == 0:
        return 1
    rows = [[catalan(l + i + j) for j in range(m)] for i in range(m)]
    return det_bareiss(rows, ZZ)


def hankel_shape(g, n):
    """(starting index, dimension) of the Hankel matrix attached to (g, n).

    Same parity as g: entries start at index g+1 with dimension (n-g)/2;
    opposite parity: start at g+2 with dimension (n-g-1)/2.  Used both for
    the polynomial matrix of P_j's and, shifted down by one, for the scalar
    Catalan matrix.
    """
    if n < g:
        raise ValueError(f"need n >= g, got n={n}, g={g}")
    if (n - g) % 2 == 0:
        return g + 1, (n - g) // 2
    return g + 2, (n - g - 1) // 2


def c_of_n(g, n):
    """Scalar Hankel determinant of Catalan numbers attached to (g, n).

    Normalized positive (the orientation fixed by the product formula);
    dimension zero gives 1.
    """
    base, dim = hankel_shape(g, n)
    det = catalan_hankel_det(base - 1, dim)
    if det <= 0:
        raise ArithmeticError(f"Catalan Hankel determinant not positive at g={g}, n={n}")
    return det


def d_of_n(g, n):
    """The exponent (n^2 - g^2)/4 or (n^2 - (g+1)^2)/4 by parity; a nonnegative integer."""
    if n < g:
        raise ValueError(f"need n >= g, got n={n}, g={g}")
    if (n - g) % 2 == 0:
        num = n * n - g * g
    else:
        num = n * n - (g + 1) * (g + 1)
    if num % 4:
        raise ArithmeticError(f"exponent not integral at g={g}, n={n}")
    return num // 4


def admissible(g, n, p):
    """True when p = 0 or p divides none of n-g+1, ..., n+g-1."""
    if n < g:
        raise ValueError(f"need n >= g, got n={n}, g={g}")
    if p == 0:
        return True
    if not is_prime(p):
        raise ValueError(f"{p} is neither 0 nor prime")
    return all((n + k) % p != 0 for k in range(-g + 1, g))
