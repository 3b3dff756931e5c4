from fractions import Fraction

import pytest
from hypothesis import given, settings

from symtrace.errors import RationalCycleConditionViolated, ShapeMismatch
from symtrace.harness import symmetrizable_corpus
from symtrace.matrices import IntMatrix, RadicalMatrix
from symtrace.numerics import RadicalScalar
from symtrace.spectra import char_poly, char_poly_radical
from symtrace.symmetry import rationalize, symmetrize, verify_similarity

from oracles import char_poly_by_interpolation
from test_matrices import sign_symmetric_matrices


def test_symmetrize_example(example3):
    T = symmetrize(example3)
    assert [[str(x) for x in r] for r in T.rows] == [
        ["2", "4", "6"], ["4", "6", "8"], ["6", "8", "10"]]


def test_example_char_poly_both_paths(example3):
    expected = char_poly_by_interpolation(example3.rows)
    assert expected == (0, -24, -18, 1)
    assert char_poly(example3).coeffs == expected
    assert char_poly_radical(symmetrize(example3)).coeffs == expected


def test_symmetrize_keeps_radicals():
    T = symmetrize(IntMatrix(((1, 2), (3, 1))))
    assert T[0, 1] == RadicalScalar(1, 6)
    assert str(T[0, 1]) == "1*sqrt(6)"


@pytest.mark.parametrize("A", symmetrizable_corpus(40, seed=3))
def test_corpus_spectrum_preserved(A):
    assert verify_similarity(A, symmetrize(A))


@settings(max_examples=150, deadline=None)
@given(sign_symmetric_matrices(max_n=4, bound=3))
def test_symmetrize_preserves_spectrum_when_symmetrizable(A):
    from symtrace.matrices import satisfies_cycle_condition
    if satisfies_cycle_condition(A):
        assert char_poly_radical(symmetrize(A)).coeffs == char_poly_by_interpolation(A.rows)


def test_rationalize_similar():
    r = RadicalScalar
    T = RadicalMatrix(((r(1, 4), r(-1, 2)), (r(-1, 2), r(1, 9))))
    B, cert = rationalize(T)
    assert B[0][0] == 2 and B[1][1] == 3
    assert B[0][1] * B[1][0] == 2
    assert all(isinstance(x, Fraction) for row in B for x in row)
    assert char_poly(B).coeffs == char_poly_radical(T).coeffs
    assert cert.tree_edges


def test_rationalize_rejects_irrational_cycle():
    r = RadicalScalar
    T = RadicalMatrix(((r(1, 4), r(1, 2), r(1, 3)),
                       (r(1, 2), r(1, 4), r(1, 5)),
                       (r(1, 3), r(1, 5), r(1, 4))))
    with pytest.raises(RationalCycleConditionViolated):
        rationalize(T)


def test_rationalize_rejects_irrational_diagonal():
    r = RadicalScalar
    with pytest.raises(RationalCycleConditionViolated):
        rationalize(RadicalMatrix(((r(1, 2),),)))


def test_verify_similarity_shape():
    with pytest.raises(ShapeMismatch):
        verify_similarity(IntMatrix(((1,),)), symmetrize(IntMatrix(((1, 1), (1, 1)))))
