"""Odd-degree hyperelliptic curve data: y^2 = f(x), f monic separable of degree 2g+1."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .algebra import Poly, QQ, discriminant


@dataclass(frozen=True)
class CurveSpec:
    """Genus g plus the coefficients a_1..a_{2g+1} of f = x^(2g+1) + a_1 x^(2g) + ... + a_{2g+1}.

    Separability (nonzero discriminant) is enforced at construction, so every
    CurveSpec in circulation describes a smooth affine model.
    """

    genus: int
    coeffs: tuple

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be >= 1")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != 2 * self.genus + 1:
            raise ValueError(
                f"genus {self.genus} needs {2 * self.genus + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)
        if not self.disc:
            raise ValueError("f is not separable (zero discriminant)")

    @cached_property
    def f(self):
        """The defining polynomial, monic of degree 2g+1 over Q."""
        cs = [Fraction(0)] * (2 * self.genus + 2)
        cs[-1] = Fraction(1)
        for i, a in enumerate(self.coeffs):
            # a_1 multiplies x^(2g), ..., a_{2g+1} is the constant term
            cs[2 * self.genus - i] = a
        return Poly(QQ, cs)

    @cached_property
    def fprime(self):
        return self.f.derivative()

    @cached_property
    def disc(self):
        return discriminant(self.f)

    @classmethod
    def elliptic(cls, A, B):
        """Genus-1 curve y^2 = x^3 + A x + B."""
        return cls(1, (Fraction(0), Fraction(A), Fraction(B)))

    def __str__(self):
        return f"genus {self.genus}: y^2 = {self.f}"


def random_curve(genus, rng, lo=-5, hi=5):
    """Random monic separable curve with integer coefficients in [lo, hi]."""
    while True:
        coeffs = tuple(rng.randint(lo, hi) for _ in range(2 * genus + 1))
        try:
            return CurveSpec(genus, coeffs)
        except ValueError:
            continue
