"""Horadam parameters and the two baseline evaluators.

``W_n(a, b; p, q)`` satisfies ``W_n = p*W_{n-1} + q*W_{n-2}`` with ``W_0 = a``
and ``W_1 = b``.  Everything here works on plain Python ints, so terms are
exact at any size.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class HoradamParams:
    a: int
    b: int
    p: int
    q: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "p", "q"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")

    @property
    def discriminant(self) -> int:
        return self.p * self.p + 4 * self.q

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.p, self.q)

    def __str__(self) -> str:
        return f"W({self.a},{self.b};{self.p},{self.q})"


@dataclass
class OpCount:
    """Arithmetic tally for one evaluation call.

    ``mul`` and ``add`` count big-int multiplications and additions (a
    subtraction is an addition).  ``matmul`` counts 2x2 matrix-matrix and
    matrix-vector products on the companion-matrix path.
    """

    mul: int = 0
    add: int = 0
    matmul: int = 0

    @property
    def bigint_ops(self) -> int:
        return self.mul + self.add


def _check_index(n: int) -> None:
    if n < 0:
        raise DomainError(f"index must be non-negative, got {n}")


def recurrence_eval_counted(params: HoradamParams, n: int) -> tuple[int, OpCount]:
    _check_index(n)
    if n == 0:
        return params.a, OpCount()
    p, q = params.p, params.q
    prev, cur = params.a, params.b
    steps = n - 1
    # unit coefficients skip the multiplication; this is what makes n = 10**6 practical
    if p == 1 and q == 1:
        for _ in range(steps):
            prev, cur = cur, cur + prev
    elif p == 1:
        for _ in range(steps):
            prev, cur = cur, cur + q * prev
    elif q == 1:
        for _ in range(steps):
            prev, cur = cur, p * cur + prev
    else:
        for _ in range(steps):
            prev, cur = cur, p * cur + q * prev
    return cur, OpCount(mul=steps * ((p != 1) + (q != 1)), add=steps)


def recurrence_eval(params: HoradamParams, n: int) -> int:
    """W_n by straight iteration of the recurrence, O(n) big-int steps."""
    return recurrence_eval_counted(params, n)[0]


def recurrence_terms(params: HoradamParams, n: int) -> list[int]:
    """[W_0, ..., W_n] from a single pass."""
    _check_index(n)
    terms = [params.a, params.b][: n + 1]
    p, q = params.p, params.q
    for _ in range(n - 1):
        terms.append(p * terms[-1] + q * terms[-2])
    return terms


def u_eval(p: int, q: int, n: int) -> int:
    """Generalized Fibonacci number U_n(p, q)."""
    return recurrence_eval(HoradamParams(0, 1, p, q), n)


def v_eval(p: int, q: int, n: int) -> int:
    """Generalized Lucas number V_n(p, q)."""
    return recurrence_eval(HoradamParams(2, p, p, q), n)


Matrix = tuple[int, int, int, int]  # row-major 2x2


def _matmul(x: Matrix, y: Matrix, ops: OpCount) -> Matrix:
    ops.matmul += 1
    ops.mul += 8
    ops.add += 4
    x00, x01, x10, x11 = x
    y00, y01, y10, y11 = y
    return (
        x00 * y00 + x01 * y10,
        x00 * y01 + x01 * y11,
        x10 * y00 + x11 * y10,
        x10 * y01 + x11 * y11,
    )


def matrix_power_eval_counted(params: HoradamParams, n: int) -> tuple[int, OpCount]:
    """W_n from the companion matrix [[p, q], [1, 0]] raised to n-1.

    (W_n, W_{n-1}) = M**(n-1) (b, a).  Left-to-right square-and-multiply
    starting from M itself, so the leading bit costs nothing: at most
    2*(bit_length(n-1) - 1) products plus one matrix-vector product.
    """
    _check_index(n)
    ops = OpCount()
    if n == 0:
        return params.a, ops
    if n == 1:
        return params.b, ops
    e = n - 1
    m: Matrix = (params.p, params.q, 1, 0)
    acc = m
    for bit in bin(e)[3:]:
        acc = _matmul(acc, acc, ops)
        if bit == "1":
            acc = _matmul(acc, m, ops)
    ops.matmul += 1
    ops.mul += 2
    ops.add += 1
    return acc[0] * params.b + acc[1] * params.a, ops


def matrix_power_eval(params: HoradamParams, n: int) -> int:
    return matrix_power_eval_counted(params, n)[0]
