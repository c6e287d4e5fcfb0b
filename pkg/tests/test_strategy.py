import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from horadam import DegenerateDiscriminant, EvalStrategy, HoradamParams, IndexNotOnStride, evaluate
from horadam.strategy import evaluate_counted
from oracles import naive

small = st.integers(-9, 9)
params_st = st.builds(HoradamParams, small, small, small, small)
FIB = HoradamParams(0, 1, 1, 1)


@pytest.mark.parametrize("text", ["recurrence", "matrix", "binet", "stride:3", "binomial:2", "MATRIX"])
def test_parse_roundtrip(text):
    assert str(EvalStrategy.parse(text)) == text.lower()


@pytest.mark.parametrize("text", ["stride", "stride:0", "stride:x", "matrix:2", "newton", "binomial:-1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        EvalStrategy.parse(text)


@pytest.mark.parametrize("strategy", ["recurrence", "matrix", "binet", "stride:5", "binomial:5", "stride:2"])
def test_fibonacci_10(strategy):
    assert evaluate(FIB, 10, EvalStrategy.parse(strategy)) == 55


def test_binet_degenerate():
    with pytest.raises(DegenerateDiscriminant):
        evaluate(HoradamParams(1, 2, 2, -1), 5, EvalStrategy.parse("binet"))


@pytest.mark.parametrize("n", [0, 3, 5, 7])
@pytest.mark.parametrize("kind", ["stride", "binomial"])
def test_off_stride(kind, n):
    with pytest.raises(IndexNotOnStride):
        evaluate(FIB, n, EvalStrategy(kind, 3))


@given(params_st, st.integers(1, 6), st.integers(2, 12))
def test_all_strategies_agree(params, i, m):
    n = m * i
    expected = naive(*params.as_tuple(), n)
    kinds = [EvalStrategy("recurrence"), EvalStrategy("matrix"), EvalStrategy("stride", i), EvalStrategy("binomial", i)]
    if params.discriminant != 0:
        kinds.append(EvalStrategy("binet"))
    assert {evaluate(params, n, s) for s in kinds} == {expected}


@given(params_st, st.integers(2, 40))
def test_closure_per_strategy(params, n):
    assume(params.discriminant != 0)
    for kind in ("recurrence", "matrix", "binet"):
        s = EvalStrategy(kind)
        assert evaluate(params, n, s) == params.p * evaluate(params, n - 1, s) + params.q * evaluate(params, n - 2, s)


def test_counts_reported():
    _, ops = evaluate_counted(FIB, 1024, EvalStrategy("matrix"))
    assert ops.matmul <= 2 * 10 + 2
    _, ops = evaluate_counted(FIB, 1024, EvalStrategy("binet"))
    assert ops is None
