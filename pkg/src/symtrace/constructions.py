"""Explicit matrix families: the extremal path matrix and the two density families."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import OrderTooSmall, ResidualTooSmall, TargetOutOfRange, TraceTooSmall
from .matrices import IntMatrix, classify
from .measures import trace_k


def tridiagonal_path(diagonal) -> IntMatrix:
    """Symmetric tridiagonal matrix with the given diagonal and -1 off the diagonal."""
    n = len(diagonal)
    rows = [[0] * n for _ in range(n)]
    for i, d in enumerate(diagonal):
        rows[i][i] = d
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = -1
    return IntMatrix(rows)


def path_matrix(n: int) -> IntMatrix:
    """Diagonal ``(1, 2, ..., 2)``; attains ``Tr_2 = 6n - 5``."""
    if n < 1:
        raise ValueError("n must be positive")
    return tridiagonal_path([1] + [2] * (n - 1))


def construct_T(N: int, aN: int) -> IntMatrix:
    """Path matrix with trace ``aN``: corner ``aN - 2(N-1)``, then twos."""
    if N < 1:
        raise ValueError("N must be positive")
    if aN < 2 * N - 1:
        raise TraceTooSmall(f"trace {aN} < 2N-1 = {2 * N - 1}")
    return tridiagonal_path([aN - 2 * (N - 1)] + [2] * (N - 1))


@dataclass(frozen=True)
class FourSquare:
    b: tuple
    m: int

    def __iter__(self):
        return iter(self.b)


def four_square(m: int) -> FourSquare:
    """Lexicographically least ``b1 <= b2 <= b3 <= b4`` with ``sum(b_i^2) == m``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    b1 = 0
    while 4 * b1 * b1 <= m:
        r1 = m - b1 * b1
        b2 = b1
        while 3 * b2 * b2 <= r1:
            r2 = r1 - b2 * b2
            b3 = b2
            while 2 * b3 * b3 <= r2:
                r3 = r2 - b3 * b3
                b4 = math.isqrt(r3)
                if b4 * b4 == r3:
                    return FourSquare((b1, b2, b3, b4), m)
                b3 += 1
            b2 += 1
        b1 += 1
    raise AssertionError(f"no four-square decomposition for {m}")  # Lagrange: unreachable


@dataclass(frozen=True)
class LConstruction:
    N: int
    aN: int
    aN1: int
    S2: int
    residual: int
    b: tuple
    w: tuple
    kappa: int


def adjust_squares(b: tuple) -> tuple:
    """Raise ``b`` to a diagonal prefix usable in a positive definite path."""
    b1, b2, b3, b4 = b
    return (b1 if b1 >= 1 else 1, b2 if b2 >= 2 else 2, b3 if b3 >= 2 else 2, b4)


def construct_L(N: int, aN: int, aN1: int):
    """Path matrix with diagonal ``(w1..w4, 2, ..., 2)`` and ``Tr_2 = S2 + kappa``.

    ``S2 = aN^2 - 2 aN1``; the four-square target is
    ``S2 - 2(N-1) - 4(N-4)`` and must exceed 18.
    """
    if N < 5:
        raise OrderTooSmall(f"L construction needs N >= 5, got {N}")
    S2 = aN * aN - 2 * aN1
    residual = S2 - 2 * (N - 1) - 4 * (N - 4)
    if residual <= 18:
        raise ResidualTooSmall(f"residual {residual} must exceed 18")
    fs = four_square(residual)
    w = adjust_squares(fs.b)
    kappa = sum(x * x for x in w) - residual
    A = tridiagonal_path(list(w) + [2] * (N - 4))
    if not classify(A).in_S_n:
        raise AssertionError(f"L construction left the class for w={w}")
    return A, LConstruction(N, aN, aN1, S2, residual, fs.b, w, kappa)


@dataclass(frozen=True)
class DensityPoint:
    N: int
    matrix: IntMatrix
    measure: Fraction
    gap: Fraction
    kappa: Optional[int] = None

    def to_row(self) -> dict:
        return {"N": self.N,
                "abs_measure_numerator": self.measure.numerator,
                "abs_measure_denominator": self.measure.denominator,
                "gap_numerator": self.gap.numerator,
                "gap_denominator": self.gap.denominator,
                "kappa": "" if self.kappa is None else self.kappa}


def _round_half_up(q: Fraction) -> int:
    return math.floor(q + Fraction(1, 2))


def trace2_targets(r: Fraction, N: int) -> tuple:
    """Integer pair ``(aN, aN1)`` with ``aN^2 - 2 aN1 == round(r N)``.

    ``aN`` starts at ``ceil(r N)`` and is bumped once if needed to match the
    parity of the target.
    """
    target = _round_half_up(r * N)
    aN = math.ceil(r * N)
    if (aN * aN - target) % 2:
        aN += 1
    return aN, (aN * aN - target) // 2


def density_point(r, kind: str, N: int) -> DensityPoint:
    r = Fraction(r)
    if kind == "trace":
        if r < 2:
            raise TargetOutOfRange(f"trace targets need r >= 2, got {r}")
        aN = math.ceil(r * N)
        A = construct_T(N, aN)
        measure = Fraction(aN, N)
        return DensityPoint(N, A, measure, abs(measure - r))
    if kind == "trace2":
        if r <= 6:
            raise TargetOutOfRange(f"trace-2 targets need r > 6, got {r}")
        if N < 5:
            raise OrderTooSmall(f"trace-2 density needs N >= 5, got {N}")
        aN, aN1 = trace2_targets(r, N)
        A, info = construct_L(N, aN, aN1)
        measure = Fraction(trace_k(A, 2), N)
        return DensityPoint(N, A, measure, abs(measure - r), info.kappa)
    raise ValueError(f"unknown kind {kind!r}")


def density_sequence(r, kind: str, N_list: Iterable[int]) -> list:
    return [density_point(r, kind, N) for N in N_list]
