"""Trace-k measures and the power-of-two trace lower bounds."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import NotSymmetric
from .matrices import IntMatrix, RadicalMatrix, classify
from .numerics import Number
from .spectra import char_poly, char_poly_radical, power_sums_from_coeffs

AnyMatrix = Union[IntMatrix, RadicalMatrix]


def _sparse(A) -> list:
    return [{j: x for j, x in enumerate(r) if x} for r in A]


def _sparse_matmul(A: list, B: list) -> list:
    out = []
    for row in A:
        acc = {}
        for t, a in row.items():
            for j, b in B[t].items():
                acc[j] = acc.get(j, 0) + a * b
        out.append({j: v for j, v in acc.items() if v})
    return out


def matrix_power(A, k: int) -> list:
    """Dense ``A^k`` computed with sparse rows by repeated squaring."""
    n = len(A)
    result = [{i: 1} for i in range(n)]
    base = _sparse(A)
    while k:
        if k & 1:
            result = _sparse_matmul(result, base)
        k >>= 1
        if k:
            base = _sparse_matmul(base, base)
    return [[row.get(j, 0) for j in range(n)] for row in result]


def trace_k_power(A: IntMatrix, k: int) -> int:
    """``Tr(A^k)``; the last product only needs its diagonal."""
    if k == 1:
        return sum(A.diagonal())
    half = _sparse(matrix_power(A.rows, k // 2))
    other = _sparse(matrix_power(A.rows, k - k // 2)) if k % 2 else half
    return sum(v * other[j].get(i, 0) for i, row in enumerate(half) for j, v in row.items())


def trace_k_newton(A: AnyMatrix, k: int) -> Number:
    """``sum(lambda**k)`` from Newton power sums of the characteristic polynomial."""
    p = char_poly_radical(A) if isinstance(A, RadicalMatrix) else char_poly(A)
    return power_sums_from_coeffs(p, k)[-1]


def trace_k(A: AnyMatrix, k: int) -> Number:
    if k < 1:
        raise ValueError("k must be positive")
    if isinstance(A, IntMatrix):
        return trace_k_power(A, k)
    return trace_k_newton(A, k)


def abs_trace_k(A: AnyMatrix, k: int) -> Fraction:
    return Fraction(trace_k(A, k), A.n)


def lower_bound_B(n: int, k: int) -> int:
    """``2^r + (n-2) 6^r + 5^r`` with ``r = 2^(k-1)``: the bound on ``Tr_{2^k}``."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    r = 2 ** (k - 1)
    return 2 ** r + (n - 2) * 6 ** r + 5 ** r


def trace_lower_bound(n: int) -> int:
    return 2 * n - 1


def rss_bound(A: AnyMatrix, k: int) -> int:
    """``sum_i (sum_j a_ij^2)^(2^(k-1))`` for a symmetric matrix."""
    if k < 1:
        raise ValueError("k must be positive")
    if isinstance(A, IntMatrix):
        if not A.is_symmetric():
            raise NotSymmetric("rss_bound needs a symmetric matrix")
        row_sums = [sum(x * x for x in r) for r in A.rows]
    else:
        row_sums = [sum(x.radicand for x in r) for r in A.rows]
    r = 2 ** (k - 1)
    return sum(s ** r for s in row_sums)


@dataclass(frozen=True)
class BoundRecord:
    """``k = 0`` is the plain trace against ``2n - 1``; otherwise exponent ``2^k``."""

    n: int
    k: int
    exponent: int
    trace: Number
    bound: int
    margin: Number

    def to_row(self) -> dict:
        return {"n": self.n, "k": self.k, "exponent": self.exponent,
                "trace": str(self.trace), "bound": str(self.bound), "margin": str(self.margin)}


@dataclass
class BoundReport:
    n: int
    applicable: bool
    records: list = field(default_factory=list)
    falsifications: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"n": self.n, "applicable": self.applicable,
                "records": [r.to_row() for r in self.records],
                "falsifications": [r.to_row() for r in self.falsifications]}


def check_bounds(A: AnyMatrix, k_max: int = 1) -> BoundReport:
    """Margins of every trace measure against its bound.

    ``applicable`` is true when the matrix is verified in S_n or T_n; a negative
    margin on an applicable matrix is recorded as a falsification.
    """
    rep = classify(A)
    applicable = bool(rep.in_S_n) or bool(rep.in_T_n)
    n = A.n
    if isinstance(A, IntMatrix):
        def measure(e):
            return trace_k_power(A, e)
    else:
        sums = power_sums_from_coeffs(char_poly_radical(A), 2 ** k_max)

        def measure(e):
            return sums[e - 1]
    report = BoundReport(n, applicable)
    tr = measure(1)
    report.records.append(BoundRecord(n, 0, 1, tr, trace_lower_bound(n), tr - trace_lower_bound(n)))
    for k in range(1, k_max + 1):
        t = measure(2 ** k)
        b = lower_bound_B(n, k)
        report.records.append(BoundRecord(n, k, 2 ** k, t, b, t - b))
    if applicable:
        report.falsifications = [r for r in report.records if r.margin < 0]
    return report
