"""Exact arithmetic for integer combinations of roots of unity.

A correlation value is stored as a :class:`CycSum`: an integer vector ``c``
of length ``M`` where ``c[k]`` counts (with sign and multiplicity) the
occurrences of ``exp(2*pi*1j*k/M)``.  Whether the represented complex number
equals a rational integer ``n`` is decided exactly, never in floating point:
``sum_k c[k] x^k - n`` is divisible by the M-th cyclotomic polynomial over
the integers iff the value equals ``n``.  Floating-point evaluation exists
only for export (correlation surfaces, plots).

Coefficients are plain Python ints, so there is no overflow to worry about;
the counts that arise from desk-scale arrays stay tiny anyway.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial; coeffs lowest degree first, trailing coeff nonzero."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Euclidean division by a monic integer polynomial."""
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return [0], rem
    quo = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            quo[k - dd] = c
            for j in range(dd + 1):
                rem[k - dd + j] -= c * den[j]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quo, rem


@lru_cache(maxsize=None)
def cyclotomic_poly(M: int) -> IntPoly:
    """The M-th cyclotomic polynomial.

    Computed by exact integer division of ``x^M - 1`` by the product of the
    cyclotomic polynomials of the proper divisors of M.
    """
    if M < 1:
        raise ValueError(f"modulus must be >= 1, got {M}")
    num = [-1] + [0] * (M - 1) + [1]
    den = [1]
    for d in divisors(M)[:-1]:
        den = _poly_mul(den, list(cyclotomic_poly(d).coeffs))
    quo, rem = _poly_divmod(num, den)
    if any(rem):
        raise AssertionError(f"cyclotomic division for M={M} left a remainder")
    return IntPoly(tuple(quo))


@lru_cache(maxsize=None)
def _roots_of_unity(M: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * cmath.pi * k / M) for k in range(M))


class CycSum:
    """Integer multiset of M-th roots of unity.

    Represents ``sum_k coeffs[k] * exp(2*pi*1j*k/M)``.  Exponents are
    canonicalized mod M on accumulation, so structural equality of the
    coefficient vector is meaningful.
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs=None):
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        self.modulus = modulus
        if coeffs is None:
            self.coeffs = [0] * modulus
        else:
            self.coeffs = list(coeffs)
            if len(self.coeffs) != modulus:
                raise ValueError("coeffs length must equal modulus")

    def copy(self) -> "CycSum":
        return CycSum(self.modulus, self.coeffs)

    def accumulate(self, exponent: int, weight: int = 1) -> "CycSum":
        """Add ``weight * zeta^exponent``; exponent is reduced mod M."""
        self.coeffs[exponent % self.modulus] += weight
        return self

    def __add__(self, other: "CycSum") -> "CycSum":
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} != {other.modulus}")
        return CycSum(self.modulus,
                      [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __iadd__(self, other: "CycSum") -> "CycSum":
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} != {other.modulus}")
        for k, b in enumerate(other.coeffs):
            self.coeffs[k] += b
        return self

    def __eq__(self, other) -> bool:
        return (isinstance(other, CycSum)
                and self.modulus == other.modulus
                and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return f"CycSum(modulus={self.modulus}, coeffs={self.coeffs})"

    def is_integer(self, n: int = 0) -> bool:
        """Exact test: does the represented value equal the integer n?

        Subtracts n from the constant term and tests divisibility of the
        resulting polynomial by the M-th cyclotomic polynomial over Z.
        """
        poly = list(self.coeffs)
        poly[0] -= n
        return _reduces_to_zero(poly, cyclotomic_poly(self.modulus).coeffs)

    def is_zero(self) -> bool:
        return self.is_integer(0)

    def value(self) -> complex:
        """Floating-point evaluation (export only; never used for decisions)."""
        roots = _roots_of_unity(self.modulus)
        return sum((c * roots[k] for k, c in enumerate(self.coeffs) if c),
                   complex(0))

    def integer_value(self) -> int | None:
        """The exact integer this sum equals, or None if it is not an integer.

        The candidate comes from the floating evaluation but the verdict is
        the exact divisibility test.
        """
        n = round(self.value().real)
        return n if self.is_integer(n) else None


def _reduces_to_zero(poly: list[int], phi: tuple[int, ...]) -> bool:
    """True iff poly is divisible by the monic polynomial phi over Z."""
    dd = len(phi) - 1
    if dd == 0:
        raise ValueError("cannot reduce modulo a constant")
    for k in range(len(poly) - 1, dd - 1, -1):
        c = poly[k]
        if c:
            for j in range(dd):
                poly[k - dd + j] -= c * phi[j]
            poly[k] = 0
    return not any(poly[:dd])
