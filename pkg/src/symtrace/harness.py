"""Exhaustive enumeration of small connected positive definite symmetric integer
matrices, bound-verification campaigns and spectrum / density reports."""
from __future__ import annotations

import csv
import io
import json
import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator, Optional

from .constructions import density_sequence
from .errors import BudgetExceeded
from .matrices import IntMatrix, is_connected
from .measures import lower_bound_B, trace_k_power, trace_lower_bound
from .spectra import is_positive_definite

DEFAULT_BUDGET = 20_000_000
MAX_CANONICAL_ORDER = 6


@dataclass(frozen=True)
class EnumSpec:
    n: int
    diag_max: int
    off_max: int
    dedupe: str = "none"
    require_connected: bool = True
    require_pd: bool = True
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.n < 1 or self.diag_max < 1 or self.off_max < 0:
            raise ValueError("need n >= 1, diag_max >= 1, off_max >= 0")
        if self.dedupe not in ("none", "canonical"):
            raise ValueError(f"dedupe must be 'none' or 'canonical', got {self.dedupe!r}")
        if self.dedupe == "canonical" and self.n > MAX_CANONICAL_ORDER:
            raise ValueError(f"canonical dedupe is limited to n <= {MAX_CANONICAL_ORDER}")

    @property
    def search_space(self) -> int:
        pairs = self.n * (self.n - 1) // 2
        return self.diag_max ** self.n * (2 * self.off_max + 1) ** pairs

    def check_budget(self):
        if self.search_space > self.budget:
            raise BudgetExceeded(
                f"search space {self.search_space} exceeds budget {self.budget}")


def canonical_form(A: IntMatrix) -> tuple:
    """Least row-major entry tuple over all simultaneous row/column permutations."""
    n = A.n
    rows = A.rows
    return min(tuple(rows[p[i]][p[j]] for i in range(n) for j in range(n))
               for p in permutations(range(n)))


def _diagonals(spec: EnumSpec) -> list:
    return list(product(range(1, spec.diag_max + 1), repeat=spec.n))


def _enumerate_for_diagonal(spec: EnumSpec, d: tuple, prune: bool) -> Iterator[IntMatrix]:
    n = spec.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    values = range(-spec.off_max, spec.off_max + 1)
    if prune and spec.require_pd:
        # a positive definite matrix has positive definite 2x2 principal minors
        choices = [[v for v in values if v * v < d[i] * d[j]] for i, j in pairs]
    else:
        choices = [list(values)] * len(pairs)
    for off in product(*choices):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = d[i]
        for (i, j), v in zip(pairs, off):
            rows[i][j] = rows[j][i] = v
        A = IntMatrix(rows)
        if spec.require_connected and not is_connected(A):
            continue
        if spec.require_pd and not is_positive_definite(A):
            continue
        if spec.dedupe == "canonical" and canonical_form(A) != A.flat():
            continue
        yield A


def enumerate_class(spec: EnumSpec, prune: bool = True, diagonals=None) -> Iterator[IntMatrix]:
    """Symmetric matrices in the box described by ``spec`` passing its filters.

    Output order is deterministic: diagonal tuples lexicographically, then
    off-diagonal tuples in row-major pair order.
    """
    spec.check_budget()
    for d in (_diagonals(spec) if diagonals is None else diagonals):
        yield from _enumerate_for_diagonal(spec, d, prune)


# --- campaigns -------------------------------------------------------------------

@dataclass
class CampaignReport:
    spec: EnumSpec
    k_max: int
    count: int = 0
    min_trace: Optional[int] = None
    argmin_trace: Optional[tuple] = None
    min_trace2: Optional[int] = None
    argmin_trace2: Optional[tuple] = None
    min_margins: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    spectrum: Counter = field(default_factory=Counter)

    def to_dict(self) -> dict:
        n = self.spec.n
        return {
            "spec": asdict(self.spec),
            "k_max": self.k_max,
            "count": self.count,
            "min_trace": self.min_trace,
            "argmin_trace": _rows(self.argmin_trace, n),
            "min_trace2": self.min_trace2,
            "argmin_trace2": _rows(self.argmin_trace2, n),
            "bounds": {"trace": trace_lower_bound(n),
                       **{f"trace_{2 ** k}": lower_bound_B(n, k)
                          for k in range(1, self.k_max + 1)}},
            "min_margins": {str(k): v for k, v in sorted(self.min_margins.items())},
            "violations": self.violations,
            "spectrum": [{"abs_trace": str(a), "abs_trace2": str(b), "count": c}
                         for (a, b), c in sorted(self.spectrum.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"


def _rows(flat, n):
    if flat is None:
        return None
    return [list(flat[i * n:(i + 1) * n]) for i in range(n)]


def _better(value, flat, best_value, best_flat) -> bool:
    return best_value is None or (value, flat) < (best_value, best_flat)


def _campaign_part(args) -> CampaignReport:
    spec, k_max, diagonals = args
    n = spec.n
    rep = CampaignReport(spec, k_max)
    for A in enumerate_class(spec, diagonals=diagonals):
        flat = A.flat()
        rep.count += 1
        tr = sum(A.diagonal())
        tr2 = sum(x * x for x in flat)  # Tr(A^2) for symmetric A
        if _better(tr, flat, rep.min_trace, rep.argmin_trace):
            rep.min_trace, rep.argmin_trace = tr, flat
        if _better(tr2, flat, rep.min_trace2, rep.argmin_trace2):
            rep.min_trace2, rep.argmin_trace2 = tr2, flat
        rep.spectrum[(Fraction(tr, n), Fraction(tr2, n))] += 1
        margins = {0: tr - trace_lower_bound(n), 1: tr2 - lower_bound_B(n, 1)}
        for k in range(2, k_max + 1):
            margins[k] = trace_k_power(A, 2 ** k) - lower_bound_B(n, k)
        for k, m in margins.items():
            if k not in rep.min_margins or m < rep.min_margins[k]:
                rep.min_margins[k] = m
            if m < 0:
                rep.violations.append({"matrix": _rows(flat, n), "k": k, "margin": m})
    return rep


def _merge(parts: list, spec: EnumSpec, k_max: int) -> CampaignReport:
    out = CampaignReport(spec, k_max)
    for p in parts:
        out.count += p.count
        if p.min_trace is not None and _better(p.min_trace, p.argmin_trace,
                                               out.min_trace, out.argmin_trace):
            out.min_trace, out.argmin_trace = p.min_trace, p.argmin_trace
        if p.min_trace2 is not None and _better(p.min_trace2, p.argmin_trace2,
                                                out.min_trace2, out.argmin_trace2):
            out.min_trace2, out.argmin_trace2 = p.min_trace2, p.argmin_trace2
        for k, m in p.min_margins.items():
            if k not in out.min_margins or m < out.min_margins[k]:
                out.min_margins[k] = m
        out.violations.extend(p.violations)
        out.spectrum.update(p.spectrum)
    out.violations.sort(key=lambda v: (v["k"], v["matrix"]))
    return out


def verify_campaign(spec: EnumSpec, k_max: int = 1, workers: int = 1) -> CampaignReport:
    """Enumerate ``spec`` and check every trace bound up to ``Tr_{2^k_max}``.

    Diagonal tuples are dealt round-robin to ``workers`` processes; the merge
    is a deterministic min-reduction and multiset union.
    """
    if k_max < 1:
        raise ValueError("k_max must be positive")
    spec.check_budget()
    diagonals = _diagonals(spec)
    workers = max(1, workers)
    chunks = [(spec, k_max, diagonals[w::workers]) for w in range(workers)]
    if workers == 1:
        parts = [_campaign_part(chunks[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_campaign_part, chunks))
    return _merge(parts, spec, k_max)


def spectrum_scan(spec: EnumSpec, k: int) -> list:
    """Sorted ``(abs_trace_k, multiplicity)`` pairs over the enumerated class."""
    if k not in (1, 2):
        raise ValueError("spectrum_scan supports k in {1, 2}")
    counts = Counter()
    for A in enumerate_class(spec):
        t = sum(A.diagonal()) if k == 1 else sum(x * x for x in A.flat())
        counts[Fraction(t, A.n)] += 1
    return sorted(counts.items())


def spectrum_csv(points: list, human: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["value", "count"] + (["approx_value"] if human else []))
    for v, c in points:
        w.writerow([f"{v.numerator}/{v.denominator}", c] + ([f"{float(v):.6f}"] if human else []))
    return buf.getvalue()


def density_report(r, kind: str, N_list, human: bool = False) -> str:
    """CSV with one row per order N; measures and gaps as exact num/den columns."""
    buf = io.StringIO()
    fields = ["N", "abs_measure_numerator", "abs_measure_denominator",
              "gap_numerator", "gap_denominator", "kappa"]
    if human:
        fields += ["approx_measure", "approx_gap"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for point in density_sequence(r, kind, N_list):
        row = point.to_row()
        if human:
            row["approx_measure"] = f"{float(point.measure):.6f}"
            row["approx_gap"] = f"{float(point.gap):.6f}"
        w.writerow(row)
    return buf.getvalue()


# --- symmetrizable corpus ----------------------------------------------------------

EXAMPLE_3X3 = IntMatrix(((2, 16, 12), (1, 6, 4), (3, 16, 10)))


def symmetrizable_corpus(count: int = 120, seed: int = 0, n_max: int = 5) -> list:
    """Integer symmetrizable matrices ``D^-1 S D`` for random symmetric ``S``.

    Off-diagonal ``s_ij`` is a multiple of ``lcm(d_i, d_j) / gcd(d_i, d_j)`` so
    both ``s_ij d_j / d_i`` and ``s_ij d_i / d_j`` are integers. The first
    entry is the fixed 3x3 example with scales (1, 4, 2).
    """
    rng = random.Random(seed)
    out = [EXAMPLE_3X3]
    while len(out) < count:
        n = rng.randint(2, n_max)
        d = [rng.randint(1, 4) for _ in range(n)]
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = rng.randint(-2, 6)
            for j in range(i + 1, n):
                g = math.gcd(d[i], d[j])
                step = d[i] * d[j] // (g * g)
                s = rng.choice([-2, -1, 0, 1, 1, 2]) * step
                rows[i][j] = s * d[j] // d[i]
                rows[j][i] = s * d[i] // d[j]
        out.append(IntMatrix(rows))
    return out
