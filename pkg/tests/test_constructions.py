from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from symtrace.constructions import (
    adjust_squares, construct_L, construct_T, density_point, four_square, path_matrix,
    trace2_targets,
)
from symtrace.errors import OrderTooSmall, ResidualTooSmall, TargetOutOfRange, TraceTooSmall
from symtrace.matrices import Verdict, classify
from symtrace.measures import trace_k

from oracles import brute_four_squares, leading_minors


@pytest.mark.parametrize("m, b", [(0, (0, 0, 0, 0)), (1, (0, 0, 0, 1)), (7, (1, 1, 1, 2)),
                                  (30, (0, 1, 2, 5)), (32, (0, 0, 4, 4))])
def test_four_square_examples(m, b):
    assert four_square(m).b == b


@pytest.mark.parametrize("m", range(0, 200))
def test_four_square_is_least(m):
    assert four_square(m).b == min(brute_four_squares(m))


@settings(deadline=None)
@given(st.integers(0, 10**7))
def test_four_square_total(m):
    b = four_square(m).b
    assert list(b) == sorted(b)
    assert sum(x * x for x in b) == m


def test_path_matrix_shape():
    assert path_matrix(3).rows == ((1, -1, 0), (-1, 2, -1), (0, -1, 2))
    assert leading_minors(path_matrix(6).rows) == [1] * 6


def test_construct_T():
    A = construct_T(4, 9)
    assert A.diagonal() == (3, 2, 2, 2)
    assert leading_minors(A.rows) == [3, 5, 7, 9]
    assert sum(A.diagonal()) == 9
    with pytest.raises(TraceTooSmall):
        construct_T(4, 6)


def test_construct_L_example():
    A, info = construct_L(5, 8, 10)
    assert (info.S2, info.residual, info.b, info.w, info.kappa) == (44, 32, (0, 0, 4, 4), (1, 2, 4, 4), 5)
    assert trace_k(A, 2) == info.S2 + info.kappa == 49
    assert leading_minors(A.rows) == [1, 1, 3, 11, 19]


def test_construct_L_errors():
    with pytest.raises(OrderTooSmall):
        construct_L(4, 20, 1)
    with pytest.raises(ResidualTooSmall):
        construct_L(5, 5, 0)


@pytest.mark.parametrize("m", [19, 20, 32, 36, 100])
def test_adjust_squares(m):
    # residuals above 18 always have a largest square of at least 3
    b = four_square(m).b
    w = adjust_squares(b)
    assert w[0] >= 1 and min(w[1:]) >= 2
    assert all(x >= y for x, y in zip(w, b))


@settings(max_examples=200, deadline=None)
@given(st.integers(19, 10**4))
def test_kappa_range(residual):
    w = adjust_squares(four_square(residual).b)
    assert 0 <= sum(x * x for x in w) - residual <= 9


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 30), st.integers(19, 400))
def test_construct_L_in_class(N, residual):
    S2 = residual + 2 * (N - 1) + 4 * (N - 4)
    aN = S2  # aN^2 - 2 aN1 = S2 with aN1 = (aN^2 - S2) / 2
    if (aN * aN - S2) % 2:
        aN += 1
    A, info = construct_L(N, aN, (aN * aN - S2) // 2)
    assert info.S2 == S2
    assert 0 <= info.kappa <= 9
    assert trace_k(A, 2) == S2 + info.kappa
    assert classify(A).in_S_n is Verdict.YES


@pytest.mark.parametrize("r, N", [(Fraction(15, 2), 10), (Fraction(15, 2), 7), (Fraction(61, 9), 13)])
def test_trace2_targets(r, N):
    aN, aN1 = trace2_targets(r, N)
    assert aN * aN - 2 * aN1 == (r * N + Fraction(1, 2)).__floor__()


@pytest.mark.parametrize("N, measure, gap, kappa", [
    (10, Fraction(79, 10), Fraction(2, 5), 4),
    (100, Fraction(751, 100), Fraction(1, 100), 1),
    (1000, Fraction(938, 125), Fraction(1, 250), 4),
])
def test_trace2_density_points(N, measure, gap, kappa):
    pt = density_point(Fraction(15, 2), "trace2", N)
    assert (pt.measure, pt.gap, pt.kappa) == (measure, gap, kappa)
    assert pt.gap <= Fraction(10, N)


@given(st.fractions(min_value=2, max_value=50, max_denominator=20), st.integers(1, 60))
def test_trace_density_gap(r, N):
    pt = density_point(r, "trace", N)
    assert pt.gap < Fraction(1, N) or pt.gap == 0
    assert pt.measure >= r


def test_density_out_of_range():
    with pytest.raises(TargetOutOfRange):
        density_point(Fraction(3, 2), "trace", 10)
    with pytest.raises(TargetOutOfRange):
        density_point(6, "trace2", 10)
    with pytest.raises(ValueError):
        density_point(3, "trace3", 10)
