"""Bernoulli polynomials, the real gamma function, and principal-branch
complex powers.

The Bernoulli table is built once from exact rationals (Akiyama-Tanigawa
recurrence for the numbers, binomial expansion for the polynomial
coefficients) and then rounded to binary64, so every stored coefficient is
correct to 1/2 ulp.  Degree 32 is enough for the kernel series used
elsewhere, which needs B_n up to n = 30 for 1e-15 truncation at |x| <= 1/2.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import DegreeOverflowError, DomainError, PoleError

__all__ = [
    "BernoulliTable",
    "bernoulli_numbers",
    "bernoulli_number",
    "bernoulli_poly",
    "default_table",
    "gamma_real",
    "principal_log",
    "complex_pow",
]

MAX_DEGREE = 32


def bernoulli_numbers(n: int) -> list[Fraction]:
    """Bernoulli numbers B_0..B_n as exact Fractions (B_1 = -1/2 convention,
    the one matching the Bernoulli polynomials B_n(0) = B_n)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    A = [Fraction(0)] * (n + 1)
    out: list[Fraction] = []
    for m in range(n + 1):
        A[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            A[j - 1] = j * (A[j - 1] - A[j])
        out.append(A[0])  # Akiyama-Tanigawa gives B_m with B_1 = +1/2
    if n >= 1:
        out[1] = Fraction(-1, 2)
    return out


@dataclass(frozen=True)
class BernoulliTable:
    """Coefficients of B_0(x)..B_max_degree(x), ascending powers, binary64.

    Invariants (exercised by the test suite):
      * B_0(x) = 1, B_1(x) = x - 1/2, B_2(x) = x^2 - x + 1/6
      * B_n(0) = B_n(1) for n >= 2
      * d/dx B_n(x) = n B_{n-1}(x)
      * B_n(1-x) = (-1)^n B_n(x)
    """

    max_degree: int
    coefficients: tuple[tuple[float, ...], ...]

    @classmethod
    def build(cls, max_degree: int = MAX_DEGREE) -> "BernoulliTable":
        if max_degree < 2:
            raise DomainError("max_degree must be >= 2")
        numbers = bernoulli_numbers(max_degree)
        coeffs = []
        for n in range(max_degree + 1):
            # B_n(x) = sum_k C(n,k) B_{n-k} x^k, exact in Fraction arithmetic
            row = tuple(float(comb(n, k) * numbers[n - k]) for k in range(n + 1))
            coeffs.append(row)
        return cls(max_degree=max_degree, coefficients=tuple(coeffs))

    def poly(self, n: int, x: float) -> float:
        if n < 0:
            raise DomainError("polynomial degree must be >= 0")
        if n > self.max_degree:
            raise DegreeOverflowError(
                f"B_{n} exceeds table degree {self.max_degree}")
        c = self.coefficients[n]
        v = 0.0
        for k in range(n, -1, -1):
            v = v * x + c[k]
        return v

    def number(self, n: int) -> float:
        """B_n = B_n(0)."""
        if n > self.max_degree:
            raise DegreeOverflowError(
                f"B_{n} exceeds table degree {self.max_degree}")
        return self.coefficients[n][0] if n > 0 else 1.0


_TABLE = BernoulliTable.build(MAX_DEGREE)


def default_table() -> BernoulliTable:
    return _TABLE


def bernoulli_poly(n: int, x: float, table: BernoulliTable | None = None) -> float:
    """Evaluate the n-th Bernoulli polynomial B_n(x) by Horner's rule.

    Relative error <= 1e-13 for |x| <= 2 and n <= 32.  Raises
    DegreeOverflowError for n beyond the table.
    """
    return (table or _TABLE).poly(n, float(x))


def bernoulli_number(n: int, table: BernoulliTable | None = None) -> float:
    return (table or _TABLE).number(n)


def gamma_real(sigma: float) -> float:
    """Gamma(sigma) for real sigma in (-1,0) u (0,inf).

    On (-1,0) the value is computed through the recurrence
    Gamma(sigma) = Gamma(sigma+1)/sigma, which keeps full accuracy next to
    the pole at 0 and makes the negativity of Gamma on (-1,0) explicit.
    """
    sigma = float(sigma)
    if sigma <= -1.0 or sigma == 0.0:
        raise PoleError(f"gamma_real requires sigma in (-1,0) u (0,inf), got {sigma}")
    if sigma < 0.0:
        return math.gamma(sigma + 1.0) / sigma
    return math.gamma(sigma)


def principal_log(z: complex) -> complex:
    """Complex logarithm with argument in (-pi, pi].

    A signed imaginary zero is normalised to +0.0 first, so negative real
    inputs land on the +pi side of the branch cut.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("log of zero")
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    return cmath.log(z)


def complex_pow(base: complex, exponent: float) -> complex:
    """base**exponent via exp(exponent * principal_log(base)).

    The principal branch makes (-1)**0.5 == 1j and keeps x**s real for
    real x > 0.
    """
    if base == 0:
        raise DomainError("complex_pow requires a nonzero base")
    if exponent == 0:
        return complex(1.0, 0.0)
    return cmath.exp(exponent * principal_log(base))
