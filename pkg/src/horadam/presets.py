"""Named sequences and regression vectors for their stride-sum instantiations.

Vectors are generated, not stored.  ``expected`` always comes from the
general telescoping or binomial formula.  For the binomial family the
published closed forms are transcribed literally in ``printed_binomial_form``
so that a vector can be flagged when the two disagree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import HoradamParams
from .errors import DomainError, UnknownPreset
from .identities import _theorem2_sum, _theorem4_sum, binomial

_FIXED = {
    "fibonacci": ((0, 1, 1, 1), "lucas"),
    "lucas": ((2, 1, 1, 1), "lucas"),
    "pell": ((0, 1, 2, 1), "pell-lucas"),
    "pell-lucas": ((2, 2, 2, 1), "pell-lucas"),
    "jacobsthal": ((0, 1, 1, 2), "jacobsthal-lucas"),
    "jacobsthal-lucas": ((2, 1, 1, 2), "jacobsthal-lucas"),
}
_GENERALIZED = {
    "generalized-fibonacci": "generalized-lucas",
    "generalized-lucas": "generalized-lucas",
}
PRESET_NAMES = tuple(_FIXED) + tuple(_GENERALIZED)
NAMED = tuple(_FIXED)


@dataclass(frozen=True)
class SequencePreset:
    name: str
    params: HoradamParams
    companion_name: str


def _normalize(name: str) -> str:
    return name.strip().lower().replace("_", "-").replace(" ", "-")


def preset(name: str, p: Optional[int] = None, q: Optional[int] = None) -> SequencePreset:
    key = _normalize(name)
    if key in _FIXED:
        if p is not None or q is not None:
            raise DomainError(f"preset {key!r} has fixed p and q")
        values, companion = _FIXED[key]
        return SequencePreset(key, HoradamParams(*values), companion)
    if key in _GENERALIZED:
        if p is None or q is None:
            raise DomainError(f"preset {key!r} needs p and q")
        params = HoradamParams(0, 1, p, q) if key == "generalized-fibonacci" else HoradamParams(2, p, p, q)
        return SequencePreset(key, params, _GENERALIZED[key])
    raise UnknownPreset(name)


def all_presets(p: int = 1, q: int = 1) -> list[SequencePreset]:
    """The eight catalog rows, generalized ones instantiated at (p, q)."""
    return [preset(n) for n in _FIXED] + [preset(n, p, q) for n in _GENERALIZED]


def _diag(n: int, weight) -> int:
    return sum(binomial(n - j, j) * weight(j) for j in range(n // 2 + 1))


def printed_binomial_form(name: str, i: int, n: int) -> Optional[int]:
    """The published closed form for W_{ni+i}, or None where none is printed.

    Transcribed term for term, including the Jacobsthal i=2 line, which does
    not agree with the general binomial formula.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if i == 1:
        if name == "fibonacci":
            return _diag(n, lambda j: 1)
        if name == "lucas":
            return _diag(n, lambda j: 1) + 2 * _diag(n - 1, lambda j: 1)
        if name == "pell":
            return _diag(n, lambda j: 2 ** (n - 2 * j))
        if name == "jacobsthal":
            return _diag(n, lambda j: 2**j)
    elif i == 2:
        if name == "fibonacci":
            return _diag(n, lambda j: (-1) ** j * 3 ** (n - 2 * j))
        if name == "lucas":
            return _diag(n, lambda j: (-1) ** j * 3 ** (n + 1 - 2 * j)) - 2 * _diag(
                n - 1, lambda j: (-1) ** j * 3 ** (n - 1 - 2 * j)
            )
        if name == "pell":
            return 2 * _diag(n, lambda j: (-1) ** j * 6 ** (n - 2 * j))
        if name == "jacobsthal":
            return _diag(n, lambda j: (-1) ** j * 2**j)
    return None


def jacobsthal_stride2_form(n: int) -> int:
    """J_{2n+2} = sum C(n-j, j) (-1)^j 5^(n-2j) 4^j, the corrected i=2 line."""
    return _diag(n, lambda j: (-1) ** j * 5 ** (n - 2 * j) * 4**j)


CONFIRMED = "confirmed"
PAPER_DISCREPANCY = "paper_discrepancy"
COROLLARIES = ("C3", "C5")


@dataclass(frozen=True)
class CorollaryVector:
    corollary: str
    preset: str
    i: int
    n: int
    expected: int
    status: str
    printed: Optional[int] = None

    @property
    def index(self) -> int:
        return self.n * self.i + self.i


def corollary_vectors(corollary: str, i_max: int, n_max: int) -> list[CorollaryVector]:
    """Vectors for every fixed preset, 1 <= i <= i_max, 1 <= n <= n_max.

    C3 uses the telescoping sum, C5 the binomial sum.  Order is (preset, i, n).
    """
    corollary = corollary.upper()
    if corollary not in COROLLARIES:
        raise DomainError(f"corollary must be one of {COROLLARIES}, got {corollary!r}")
    if i_max < 1 or n_max < 1:
        raise DomainError("i_max and n_max must be >= 1")
    out = []
    for name in NAMED:
        params = preset(name).params
        for i in range(1, i_max + 1):
            for n in range(1, n_max + 1):
                if corollary == "C3":
                    expected, printed = _theorem2_sum(params, i, n), None
                else:
                    expected, printed = _theorem4_sum(params, i, n), printed_binomial_form(name, i, n)
                status = PAPER_DISCREPANCY if printed is not None and printed != expected else CONFIRMED
                out.append(CorollaryVector(corollary, name, i, n, expected, status, printed))
    return out
