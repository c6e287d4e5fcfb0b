"""Stride identities for Horadam numbers and an exact verifier for them.

Three identities relate W at indices spaced ``i`` apart to the generalized
Lucas number V_i:

* ``lemma1``:   W_{ni+i} = V_i W_{ni} - (-q)^i W_{ni-i},                n >= 1
* ``theorem2``: W_{ni+i} = V_i^{n-1} W_{2i} - (-q)^i sum_{j=1}^{n-1} V_i^{n-1-j} W_{ij},   n >= 2
* ``theorem4``: W_{ni+i} as a diagonal binomial sum in V_i, q^i, W_i and a,   n >= 2

For fixed (i, n) both sides are polynomials in (a, b, p, q), so agreement at
random integer points is strong evidence of the identity and any mismatch is
a concrete counterexample.  ``fuzz_verify`` relies on that.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .core import HoradamParams, OpCount, matrix_power_eval_counted, recurrence_eval, recurrence_terms, v_eval
from .errors import DomainError


class IdentityId(str, enum.Enum):
    LEMMA1 = "lemma1"
    THEOREM2 = "theorem2"
    THEOREM4 = "theorem4"

    @property
    def min_n(self) -> int:
        return 1 if self is IdentityId.LEMMA1 else 2


def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative formula; every partial quotient is exact."""
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for j in range(1, k + 1):
        result = result * (n - k + j) // j
    return result


def _check(i: int, n: int, min_n: int) -> None:
    if i < 1:
        raise DomainError(f"stride i must be >= 1, got {i}")
    if n < min_n:
        raise DomainError(f"n must be >= {min_n}, got {n}")


def lemma1_rhs(params: HoradamParams, i: int, n: int) -> int:
    _check(i, n, 1)
    vi = v_eval(params.p, params.q, i)
    return vi * recurrence_eval(params, n * i) - (-params.q) ** i * recurrence_eval(params, n * i - i)


def _theorem2_sum(params: HoradamParams, i: int, n: int) -> int:
    # also valid at n = 1, where the sum is empty and the value is W_{2i}
    vi = v_eval(params.p, params.q, i)
    w = recurrence_terms(params, max(2, n - 1) * i)
    acc = 0
    for j in range(1, n):
        acc = acc * vi + w[i * j]
    return vi ** (n - 1) * w[2 * i] - (-params.q) ** i * acc


def theorem2_rhs(params: HoradamParams, i: int, n: int) -> int:
    _check(i, n, 2)
    return _theorem2_sum(params, i, n)


def binomial_diagonal(n: int, x: int, y: int) -> int:
    """sum_{j=0}^{floor(n/2)} C(n-j, j) x^(n-2j) y^j."""
    return sum(binomial(n - j, j) * x ** (n - 2 * j) * y**j for j in range(n // 2 + 1))


def _theorem4_sum(params: HoradamParams, i: int, n: int, vi: int | None = None, wi: int | None = None) -> int:
    # valid for every n >= 0; the public builder enforces the stated n >= 2
    if vi is None:
        vi = v_eval(params.p, params.q, i)
    if wi is None:
        wi = recurrence_eval(params, i)
    qi = params.q**i
    # odd i: weights q^{ij}; even i: (-1)^j q^{ij} and the a-term changes sign
    step = qi if i % 2 else -qi
    sign = 1 if i % 2 else -1
    head = binomial_diagonal(n, vi, step) * wi
    return head + sign * qi * params.a * binomial_diagonal(n - 1, vi, step)


def theorem4_rhs(params: HoradamParams, i: int, n: int) -> int:
    _check(i, n, 2)
    return _theorem4_sum(params, i, n)


def stride_eval_counted(params: HoradamParams, i: int, m: int) -> tuple[int, OpCount]:
    """W_{mi} by running lemma1 as a recurrence along the stride.

    X_{k+1} = V_i X_k - (-q)^i X_{k-1}, X_0 = a, X_1 = W_i.  The seeds W_i and
    V_i come from the companion-matrix path, so the cost is O(log i) for the
    seeds plus O(m) steps instead of O(m*i).
    """
    if i < 1:
        raise DomainError(f"stride i must be >= 1, got {i}")
    if m < 0:
        raise DomainError(f"stride multiple must be >= 0, got {m}")
    ops = OpCount()
    if m == 0:
        return params.a, ops
    wi, seed_ops = matrix_power_eval_counted(params, i)
    vi, lucas_ops = matrix_power_eval_counted(HoradamParams(2, params.p, params.p, params.q), i)
    for o in (seed_ops, lucas_ops):
        ops.mul += o.mul
        ops.add += o.add
        ops.matmul += o.matmul
    c = -((-params.q) ** i)
    ops.mul += i.bit_length()
    prev, cur = params.a, wi
    for _ in range(m - 1):
        prev, cur = cur, vi * cur + c * prev
        ops.mul += 2
        ops.add += 1
    return cur, ops


def stride_eval(params: HoradamParams, i: int, m: int) -> int:
    return stride_eval_counted(params, i, m)[0]


_RHS = {
    IdentityId.LEMMA1: lemma1_rhs,
    IdentityId.THEOREM2: theorem2_rhs,
    IdentityId.THEOREM4: theorem4_rhs,
}


@dataclass(frozen=True)
class IdentityInstance:
    id: IdentityId
    params: HoradamParams
    i: int
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "id", IdentityId(self.id))


@dataclass(frozen=True)
class IdentityReport:
    instance: IdentityInstance
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def verify(instance: IdentityInstance) -> IdentityReport:
    """Evaluate both sides.  A false identity is a report, not an exception."""
    _check(instance.i, instance.n, instance.id.min_n)
    rhs = _RHS[instance.id](instance.params, instance.i, instance.n)
    lhs = recurrence_eval(instance.params, instance.n * instance.i + instance.i)
    return IdentityReport(instance, lhs, rhs)


@dataclass(frozen=True)
class FuzzBounds:
    param_bound: int = 9
    i_max: int = 6
    n_max: int = 12


@dataclass
class FuzzSummary:
    id: IdentityId
    trials: int
    seed: int
    bounds: FuzzBounds
    failures: list[tuple[int, IdentityReport]] = field(default_factory=list)


def _draw_coefficient(rng: random.Random, bound: int) -> int:
    # one draw in eight pins the coefficient to zero to hit the degenerate cases
    if rng.randrange(8) == 0:
        return 0
    return rng.randint(-bound, bound)


def sample_instance(rng: random.Random, identity: IdentityId, bounds: FuzzBounds) -> IdentityInstance:
    lo = bounds.param_bound
    a = rng.randint(-lo, lo)
    b = rng.randint(-lo, lo)
    p = _draw_coefficient(rng, lo)
    q = _draw_coefficient(rng, lo)
    i = rng.randint(1, bounds.i_max)
    n = rng.randint(identity.min_n, max(identity.min_n, bounds.n_max))
    return IdentityInstance(identity, HoradamParams(a, b, p, q), i, n)


def fuzz_verify(identity: IdentityId | str, trials: int, bounds: FuzzBounds = FuzzBounds(), seed: int = 0) -> FuzzSummary:
    """Check ``trials`` random instances; failures are listed by trial index."""
    identity = IdentityId(identity)
    if trials < 1:
        raise DomainError("trials must be >= 1")
    if min(bounds.param_bound, bounds.i_max, bounds.n_max) < 1:
        raise DomainError("fuzz bounds must be positive")
    rng = random.Random(seed)
    summary = FuzzSummary(identity, trials, seed, bounds)
    for k in range(trials):
        report = verify(sample_instance(rng, identity, bounds))
        if not report.holds:
            summary.failures.append((k, report))
    return summary
