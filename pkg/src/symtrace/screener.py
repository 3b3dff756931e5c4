"""Polynomial screens derived from the trace bounds.

``screen_char_poly`` rules out characteristic polynomials of S_n / T_n
matrices; ``min_poly_obstruction`` rules out minimal polynomials of integer
symmetric matrices whose components are all singular positive semidefinite.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import NonMonic
from .measures import lower_bound_B, trace_lower_bound
from .spectra import CharPoly, is_totally_positive, power_sums_from_coeffs

SECOND_COEFF_NOTE = (
    "coefficient form: with x^n - a1 x^(n-1) + a2 x^(n-2) - ..., Tr_2 = a1^2 - 2 a2, "
    "so at a1 = 2n-1 the exclusion s2 < 6n-5 reads a2 > 2n^2-5n+3; the threshold "
    "4n^2-10n+6 corresponds to dropping the factor 2 and is reported separately"
)

MINPOLY_NOTE = (
    "conditional verdict: factors are assumed irreducible, and exclusion applies only to "
    "integer symmetric matrices every connected component of which is positive "
    "semidefinite and none positive definite"
)


@dataclass
class ScreenVerdict:
    excluded: bool
    violated_k: Optional[int]
    s_values: dict
    bounds: dict
    coefficient_form: list = field(default_factory=list)
    note: str = ""

    @property
    def verdict(self) -> str:
        return "excluded" if self.excluded else "not-excluded"

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "violated_k": self.violated_k,
                "s_values": {str(e): str(v) for e, v in self.s_values.items()},
                "bounds": {str(e): str(v) for e, v in self.bounds.items()},
                "coefficient_form": self.coefficient_form, "note": self.note}


def _check_integer_monic(p: CharPoly):
    if not p.is_integral():
        raise NonMonic("screening needs a monic integer polynomial")


def screen_char_poly(p: CharPoly, k_max: int = 1) -> ScreenVerdict:
    """Exclude ``p`` when ``s_1 < 2n - 1`` or ``s_{2^k} < B(n, k)`` for some ``k <= k_max``.

    ``violated_k`` is 0 for the trace test. The coefficient form records, for
    each k, ``r_k`` with exclusion iff ``e_{2^k} > r_k / 2^k``.
    """
    _check_integer_monic(p)
    n = p.degree
    if n < 1:
        raise ValueError("degree must be at least 1")
    sums = power_sums_from_coeffs(p, 2 ** k_max)
    s_values = {1: sums[0]}
    bounds = {1: trace_lower_bound(n)}
    violated = 0 if sums[0] < trace_lower_bound(n) else None
    coefficient_form = []
    for k in range(1, k_max + 1):
        m = 2 ** k
        s_values[m] = sums[m - 1]
        bounds[m] = lower_bound_B(n, k)
        if violated is None and sums[m - 1] < bounds[m]:
            violated = k
        # s_m = f - m e_m for even m, where f collects the lower-order Newton terms
        f = sum((-1) ** (i - 1) * p.elementary(i) * sums[m - i - 1] for i in range(1, m))
        r_k = f - bounds[m]
        coefficient_form.append({"k": k, "e": str(p.elementary(m)), "r_k": str(r_k),
                                 "threshold": str(Fraction(r_k, m)),
                                 "excluded": p.elementary(m) > Fraction(r_k, m)})
    note = ""
    if p.e1 == 2 * n - 1:
        uncorrected = 4 * n * n - 10 * n + 6
        exact_threshold = 2 * n * n - 5 * n + 3
        note = (f"{SECOND_COEFF_NOTE}; here a2 = {p.e2}, exact threshold {exact_threshold}, "
                f"uncorrected threshold {uncorrected} "
                f"({'met' if p.e2 > uncorrected else 'not met'})")
    return ScreenVerdict(violated is not None, violated, s_values, bounds, coefficient_form, note)


@dataclass(frozen=True)
class FactorRecord:
    degree: int
    trace: int
    deficit: int
    totally_positive: bool

    def to_dict(self) -> dict:
        return {"degree": self.degree, "trace": self.trace, "deficit": self.deficit,
                "totally_positive": self.totally_positive}


@dataclass
class ObstructionVerdict:
    excluded: bool
    factors: list
    note: str = MINPOLY_NOTE

    @property
    def verdict(self) -> str:
        return "excluded" if self.excluded else "inconclusive"

    @property
    def totally_positive_checks(self) -> list:
        return [f.totally_positive for f in self.factors]

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "factors": [f.to_dict() for f in self.factors],
                "note": self.note}


def min_poly_obstruction(factors: Sequence[CharPoly]) -> ObstructionVerdict:
    """Decide whether ``x * prod(factors)`` is ruled out as a minimal polynomial.

    Excluded iff every factor is totally positive with ``trace < 2 * degree``.
    """
    if not factors:
        raise ValueError("need at least one factor")
    records = []
    for p in factors:
        _check_integer_monic(p)
        d = p.degree
        t = p.e1
        records.append(FactorRecord(d, t, 2 * d - t, is_totally_positive(p)))
    excluded = all(r.totally_positive and r.deficit > 0 for r in records)
    return ObstructionVerdict(excluded, records)
