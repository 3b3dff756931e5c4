"""The symmetrization map and a constructive rational inverse up to similarity."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSignSymmetric, RationalCycleConditionViolated, ShapeMismatch
from .matrices import (IntMatrix, RadicalMatrix, _bfs_forest, is_sign_symmetric,
                       satisfies_rational_cycle_condition, tree_scales)
from .numerics import RadicalScalar, rational_sqrt, sign


@dataclass(frozen=True)
class ScalingCertificate:
    """Squared diagonal scales ``d_i**2`` such that ``B = D^-1 T D``.

    ``tree_edges`` are the 1-based (parent, child) pairs of the BFS forest.
    """

    tree_edges: tuple
    ratios: tuple

    def is_identity(self) -> bool:
        return all(r == 1 for r in self.ratios)


def symmetrize(A: IntMatrix) -> RadicalMatrix:
    """Entrywise ``a_ij -> sgn(a_ij) * sqrt(a_ij * a_ji)``."""
    ss = is_sign_symmetric(A)
    if not ss:
        raise NotSignSymmetric(f"matrix is not sign-symmetric at {ss.witness}")
    n = A.n
    return RadicalMatrix(tuple(
        tuple(RadicalScalar(sign(A[i, j]), A[i, j] * A[j, i]) for j in range(n))
        for i in range(n)))


def rationalize(T: RadicalMatrix):
    """Rational matrix ``B`` similar to ``T`` plus the scaling that produced it.

    Along each BFS tree edge with a non-square radicand ``m`` the child scale is
    divided by ``m`` so the edge becomes ``(sign, sign*m)``; square radicands
    keep the scale. Every other entry is then ``sign * sqrt(m_ij rho_j / rho_i)``,
    rational exactly when the rational cycle condition holds.
    """
    check = satisfies_rational_cycle_condition(T)
    if not check:
        raise RationalCycleConditionViolated(
            f"cycle {check.witness} has an irrational entry product")
    n = T.n
    for i in range(n):
        if T[i, i].rational_value() is None:
            raise RationalCycleConditionViolated(
                f"diagonal entry ({i + 1},{i + 1}) = {T[i, i]} is irrational")
    order, parent, _, _ = _bfs_forest(T)
    rho = tree_scales(T, order, parent)
    B = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            t = T[i, j]
            if t.sign == 0:
                continue
            root = rational_sqrt(t.radicand * rho[j] / rho[i])
            # guarded by the cycle check above
            assert root is not None
            B[i][j] = t.sign * root
    edges = tuple((parent[v] + 1, v + 1) for v in order if parent[v] is not None)
    return B, ScalingCertificate(edges, tuple(rho))


def verify_similarity(A: IntMatrix, T: RadicalMatrix) -> bool:
    from .spectra import char_poly, char_poly_radical

    if A.n != T.n:
        raise ShapeMismatch(f"orders differ: {A.n} vs {T.n}")
    return char_poly(A) == char_poly_radical(T)
