"""Exact arithmetic in Q[t]/(t^2 - D) and the Binet evaluator built on it.

An element ``x + y*sqrt(D)`` is stored with ``Fraction`` coordinates.  When D
is a perfect square the ring has zero divisors, but ``sqrt(D)`` itself stays
invertible for any D != 0, and that is the only division Binet needs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Union

from .core import HoradamParams
from .errors import DegenerateDiscriminant, DomainError, InternalNonInteger, MismatchedDiscriminant

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class QuadElem:
    x: Fraction
    y: Fraction
    d: int

    def __init__(self, x: Rational, y: Rational, d: int) -> None:
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))
        object.__setattr__(self, "d", d)

    @classmethod
    def one(cls, d: int) -> QuadElem:
        return cls(1, 0, d)

    def conjugate(self) -> QuadElem:
        return QuadElem(self.x, -self.y, self.d)

    def is_rational(self) -> bool:
        return self.y == 0

    def _coerce(self, other: object) -> QuadElem:
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise MismatchedDiscriminant(f"D={self.d} vs D={other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(other, 0, self.d)
        return NotImplemented

    def __add__(self, other: object) -> QuadElem:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _from_scaled(_add_scaled(_scaled(self), _scaled(other)), self.d)

    __radd__ = __add__

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.x, -self.y, self.d)

    def __sub__(self, other: object) -> QuadElem:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadElem(self.x - other.x, self.y - other.y, self.d)

    def __rsub__(self, other: object) -> QuadElem:
        return -self + other

    def __mul__(self, other: object) -> QuadElem:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _from_scaled(_mul_scaled(_scaled(self), _scaled(other), self.d), self.d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadElem:
        return quad_pow(self, k)

    def __str__(self) -> str:
        return f"{self.x} + {self.y}*sqrt({self.d})"


# Integer form (X, Y, den) of x + y*sqrt(D) = (X + Y*sqrt(D)) / den.  Arithmetic
# runs on these and normalises once per result; Fraction per coordinate
# operation is several times slower.
Scaled = tuple[int, int, int]


def _scaled(e: QuadElem) -> Scaled:
    xd, yd = e.x.denominator, e.y.denominator
    den = xd * yd // gcd(xd, yd)
    return e.x.numerator * (den // xd), e.y.numerator * (den // yd), den


def _from_scaled(s: Scaled, d: int) -> QuadElem:
    return QuadElem(Fraction(s[0], s[2]), Fraction(s[1], s[2]), d)


def _add_scaled(s1: Scaled, s2: Scaled) -> Scaled:
    return s1[0] * s2[2] + s2[0] * s1[2], s1[1] * s2[2] + s2[1] * s1[2], s1[2] * s2[2]


def _mul_scaled(s1: Scaled, s2: Scaled, d: int) -> Scaled:
    x1, y1, d1 = s1
    x2, y2, d2 = s2
    return x1 * x2 + y1 * y2 * d, x1 * y2 + x2 * y1, d1 * d2


def quad_add(e1: QuadElem, e2: QuadElem) -> QuadElem:
    return e1 + e2


def quad_mul(e1: QuadElem, e2: QuadElem) -> QuadElem:
    return e1 * e2


def quad_pow(e: QuadElem, k: int) -> QuadElem:
    """e**k by squaring on the integer form; quad_pow(e, 0) is 1."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    bx, by, den = _scaled(e)
    d = e.d
    rx, ry = 1, 0
    j = k
    while j:
        if j & 1:
            rx, ry = rx * bx + ry * by * d, rx * by + ry * bx
        j >>= 1
        if j:
            bx, by = bx * bx + by * by * d, 2 * bx * by
    scale = den**k
    return QuadElem(Fraction(rx, scale), Fraction(ry, scale), d)


def quad_inv_sqrt_d(d: int) -> QuadElem:
    """The inverse of sqrt(D) in the ring, (1/D)*sqrt(D)."""
    if d == 0:
        raise DegenerateDiscriminant("sqrt(0) has no inverse")
    return QuadElem(0, Fraction(1, d), d)


def roots(params: HoradamParams) -> tuple[QuadElem, QuadElem]:
    """alpha = (p + sqrt(D))/2 and beta = (p - sqrt(D))/2."""
    d = params.discriminant
    half = Fraction(1, 2)
    return QuadElem(params.p * half, half, d), QuadElem(params.p * half, -half, d)


@dataclass(frozen=True)
class BinetCoeffs:
    A: QuadElem
    B: QuadElem
    alpha: QuadElem
    beta: QuadElem


@lru_cache(maxsize=4096)
def binet_coeffs(params: HoradamParams) -> BinetCoeffs:
    """A = (b - a*beta)/(alpha - beta), B = (a*alpha - b)/(alpha - beta).

    alpha - beta is exactly sqrt(D), so dividing means multiplying by
    quad_inv_sqrt_d.
    """
    inv = quad_inv_sqrt_d(params.discriminant)
    alpha, beta = roots(params)
    a, b = params.a, params.b
    return BinetCoeffs((b - a * beta) * inv, (a * alpha - b) * inv, alpha, beta)


def binet_value(params: HoradamParams, n: int) -> QuadElem:
    """A*alpha**n + B*beta**n as a ring element, before the integer check."""
    if n < 0:
        raise DomainError(f"index must be non-negative, got {n}")
    c = binet_coeffs(params)
    d = c.A.d
    left = _mul_scaled(_scaled(c.A), _scaled(quad_pow(c.alpha, n)), d)
    right = _mul_scaled(_scaled(c.B), _scaled(quad_pow(c.beta, n)), d)
    return _from_scaled(_add_scaled(left, right), d)


def binet_eval(params: HoradamParams, n: int) -> int:
    value = binet_value(params, n)
    if value.y != 0 or value.x.denominator != 1:
        raise InternalNonInteger(f"{params} n={n} gave {value}")
    return value.x.numerator
