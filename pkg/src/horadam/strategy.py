"""Strategy tags and the single ``evaluate`` entry point over all five."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    HoradamParams,
    OpCount,
    matrix_power_eval,
    matrix_power_eval_counted,
    recurrence_eval_counted,
)
from .errors import DomainError, IndexNotOnStride
from .identities import _theorem4_sum, stride_eval_counted
from .quadratic import binet_eval

KINDS = ("recurrence", "matrix", "binet", "stride", "binomial")
STRIDED = ("stride", "binomial")


@dataclass(frozen=True)
class EvalStrategy:
    kind: str
    i: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown strategy {self.kind!r}")
        if self.kind in STRIDED:
            if self.i is None or self.i < 1:
                raise ValueError(f"{self.kind} strategy needs a stride i >= 1")
        elif self.i is not None:
            raise ValueError(f"{self.kind} strategy takes no stride")

    @classmethod
    def parse(cls, text: str) -> EvalStrategy:
        """'recurrence', 'matrix', 'binet', 'stride:I' or 'binomial:I'."""
        kind, sep, stride = text.strip().lower().partition(":")
        if kind in STRIDED:
            if not sep:
                raise ValueError(f"{kind} strategy needs ':I', e.g. {kind}:3")
            try:
                i = int(stride)
            except ValueError:
                raise ValueError(f"bad stride in {text!r}") from None
            return cls(kind, i)
        if sep:
            raise ValueError(f"{kind} strategy takes no stride")
        return cls(kind)

    def __str__(self) -> str:
        return self.kind if self.i is None else f"{self.kind}:{self.i}"


RECURRENCE = EvalStrategy("recurrence")
MATRIX = EvalStrategy("matrix")
BINET = EvalStrategy("binet")


def stride_multiple(n: int, i: int) -> int:
    """m with n == m*i and m >= 2, or IndexNotOnStride."""
    if n < 2 * i or n % i:
        raise IndexNotOnStride(f"index {n} is not m*{i} with m >= 2")
    return n // i


def evaluate_counted(params: HoradamParams, n: int, strategy: EvalStrategy) -> tuple[int, Optional[OpCount]]:
    """W_n plus an operation tally where the strategy keeps one."""
    if n < 0:
        raise DomainError(f"index must be non-negative, got {n}")
    kind = strategy.kind
    if kind == "recurrence":
        return recurrence_eval_counted(params, n)
    if kind == "matrix":
        return matrix_power_eval_counted(params, n)
    if kind == "binet":
        return binet_eval(params, n), None
    m = stride_multiple(n, strategy.i)
    if kind == "stride":
        return stride_eval_counted(params, strategy.i, m)
    # W_{mi} is the binomial sum at index m-1, seeded from the matrix path
    i = strategy.i
    vi = matrix_power_eval(HoradamParams(2, params.p, params.p, params.q), i)
    wi = matrix_power_eval(params, i)
    return _theorem4_sum(params, i, m - 1, vi=vi, wi=wi), None


def evaluate(params: HoradamParams, n: int, strategy: EvalStrategy = RECURRENCE) -> int:
    return evaluate_counted(params, n, strategy)[0]
