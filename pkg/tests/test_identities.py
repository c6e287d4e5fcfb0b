import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from horadam import (
    DomainError,
    FuzzBounds,
    HoradamParams,
    IdentityId,
    IdentityInstance,
    binomial,
    fuzz_verify,
    lemma1_rhs,
    recurrence_eval,
    stride_eval,
    theorem2_rhs,
    theorem4_rhs,
    v_eval,
    verify,
)
from oracles import naive, pascal

small = st.integers(-9, 9)
params_st = st.builds(HoradamParams, small, small, small, small)
strides = st.integers(1, 6)

FIB = HoradamParams(0, 1, 1, 1)
LUCAS = HoradamParams(2, 1, 1, 1)
PELL = HoradamParams(0, 1, 2, 1)
PELL_LUCAS = HoradamParams(2, 2, 2, 1)
JACOBSTHAL = HoradamParams(0, 1, 1, 2)


def test_binomial_against_pascal():
    tri = pascal(60)
    for n, row in enumerate(tri):
        assert [binomial(n, k) for k in range(n + 1)] == row
    assert binomial(5, 7) == 0 and binomial(5, -1) == 0
    assert binomial(400, 170) == math.comb(400, 170)


@pytest.mark.parametrize(
    "params, i, n, expected",
    [(FIB, 2, 2, 8), (JACOBSTHAL, 1, 3, 5)],
)
def test_lemma1_examples(params, i, n, expected):
    assert lemma1_rhs(params, i, n) == expected


@given(params_st)
def test_lemma1_base_case_is_the_recurrence(params):
    assert lemma1_rhs(params, 1, 1) == params.p * params.b + params.q * params.a


@pytest.mark.parametrize(
    "params, i, n, expected",
    [(FIB, 2, 3, 21), (FIB, 1, 2, 2), (PELL_LUCAS, 1, 2, 14)],
)
def test_theorem2_examples(params, i, n, expected):
    assert theorem2_rhs(params, i, n) == expected


@pytest.mark.parametrize(
    "params, i, n, expected",
    [(FIB, 1, 4, 5), (FIB, 2, 2, 8), (LUCAS, 1, 3, 7), (JACOBSTHAL, 2, 3, 85)],
)
def test_theorem4_examples(params, i, n, expected):
    assert theorem4_rhs(params, i, n) == expected


@pytest.mark.parametrize("rhs, min_n", [(lemma1_rhs, 1), (theorem2_rhs, 2), (theorem4_rhs, 2)])
def test_domain_errors(rhs, min_n):
    with pytest.raises(DomainError):
        rhs(FIB, 0, 3)
    with pytest.raises(DomainError):
        rhs(FIB, 2, min_n - 1)


@pytest.mark.parametrize("params, i, m, expected", [(FIB, 3, 3, 34), (PELL, 2, 2, 12), (FIB, 5, 0, 0)])
def test_stride_examples(params, i, m, expected):
    assert stride_eval(params, i, m) == expected


@given(params_st, st.integers(0, 30))
def test_stride_one_is_plain_recurrence(params, m):
    assert stride_eval(params, 1, m) == naive(*params.as_tuple(), m)


@given(params_st, strides, st.integers(0, 12))
def test_stride_consistency(params, i, m):
    assert stride_eval(params, i, m) == recurrence_eval(params, m * i)


@given(params_st, strides, st.integers(1, 12))
def test_lemma1_holds(params, i, n):
    assert lemma1_rhs(params, i, n) == naive(*params.as_tuple(), n * i + i)


@given(params_st, strides, st.integers(2, 12))
def test_theorem2_holds(params, i, n):
    assert theorem2_rhs(params, i, n) == naive(*params.as_tuple(), n * i + i)


@given(params_st, strides, st.integers(2, 12))
def test_theorem4_holds(params, i, n):
    assert theorem4_rhs(params, i, n) == naive(*params.as_tuple(), n * i + i)


@given(params_st, strides, st.integers(2, 12))
def test_cross_theorem_consistency(params, i, n):
    assert theorem2_rhs(params, i, n) == theorem4_rhs(params, i, n) == lemma1_rhs(params, i, n)


@given(params_st, strides, st.integers(2, 11))
def test_induction_step(params, i, m):
    vi = v_eval(params.p, params.q, i)
    step = vi * theorem2_rhs(params, i, m) - (-params.q) ** i * recurrence_eval(params, m * i)
    assert theorem2_rhs(params, i, m + 1) == step


def test_verify_examples():
    report = verify(IdentityInstance(IdentityId.THEOREM2, FIB, 2, 3))
    assert report.holds and report.lhs == report.rhs == 21
    report = verify(IdentityInstance("lemma1", HoradamParams(3, 4, 1, 1), 1, 1))
    assert report.holds
    report = verify(IdentityInstance(IdentityId.THEOREM4, JACOBSTHAL, 2, 2))
    assert report.holds and report.lhs == 21


def test_verify_domain():
    with pytest.raises(DomainError):
        verify(IdentityInstance(IdentityId.THEOREM4, FIB, 1, 1))
    with pytest.raises(ValueError):
        IdentityInstance("theorem9", FIB, 1, 2)


def test_verify_reports_falsified_instance(monkeypatch):
    import horadam.identities as ident

    monkeypatch.setitem(ident._RHS, IdentityId.LEMMA1, lambda params, i, n: 12345)
    report = verify(IdentityInstance(IdentityId.LEMMA1, FIB, 1, 1))
    assert not report.holds and report.rhs == 12345 and report.lhs == 1


def test_fuzz_lemma1_clean():
    summary = fuzz_verify(IdentityId.LEMMA1, 1000, FuzzBounds(9, 6, 12), seed=42)
    assert summary.trials == 1000 and summary.failures == []


def test_fuzz_bookkeeping():
    assert fuzz_verify("theorem2", 1, seed=123).trials == 1
    with pytest.raises(DomainError):
        fuzz_verify("theorem2", 0)


def test_fuzz_deterministic_and_ordered(monkeypatch):
    import horadam.identities as ident

    # plant a fault so the failure list is non-trivial
    real = ident._RHS[IdentityId.THEOREM4]
    monkeypatch.setitem(ident._RHS, IdentityId.THEOREM4, lambda p, i, n: real(p, i, n) + (p.a == 0))
    first = fuzz_verify(IdentityId.THEOREM4, 1000, FuzzBounds(9, 6, 12), seed=7)
    second = fuzz_verify(IdentityId.THEOREM4, 1000, FuzzBounds(9, 6, 12), seed=7)
    assert first.failures and first.failures == second.failures
    indices = [k for k, _ in first.failures]
    assert indices == sorted(indices)


@settings(max_examples=20)
@given(st.integers(0, 2**63 - 1))
def test_fuzz_samples_within_bounds(seed):
    import random

    from horadam.identities import sample_instance

    rng = random.Random(seed)
    bounds = FuzzBounds(4, 3, 5)
    for _ in range(50):
        inst = sample_instance(rng, IdentityId.THEOREM2, bounds)
        assert all(abs(v) <= 4 for v in inst.params.as_tuple())
        assert 1 <= inst.i <= 3 and 2 <= inst.n <= 5


def test_fuzz_hits_degenerate_coefficients():
    import random

    from horadam.identities import sample_instance

    rng = random.Random(0)
    drawn = [sample_instance(rng, IdentityId.LEMMA1, FuzzBounds()) for _ in range(500)]
    assert any(x.params.p == 0 for x in drawn)
    assert any(x.params.q == 0 for x in drawn)
