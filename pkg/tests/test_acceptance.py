"""Acceptance suite: one test per criterion, each reporting a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the summary lines appear at the
end of the session) or directly with ``python tests/test_acceptance.py``.
"""
import random
import time
from fractions import Fraction

import pytest

from symtrace.cli import run
from symtrace.constructions import density_point, four_square, path_matrix
from symtrace.harness import (
    EXAMPLE_3X3, EnumSpec, enumerate_class, symmetrizable_corpus, verify_campaign,
)
from symtrace.matrices import IntMatrix, Verdict, classify, graph_of
from symtrace.measures import lower_bound_B, rss_bound, trace_k
from symtrace.screener import screen_char_poly
from symtrace.spectra import (
    CharPoly, char_poly, char_poly_radical, coeffs_from_power_sums, parse_poly,
    power_sums_from_coeffs,
)
from symtrace.symmetry import symmetrize

RESULTS = {}

SECONDS = 60
MINUTES = 600


def report(number, title, ok, detail, elapsed):
    line = f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {title}: {detail} ({elapsed:.2f}s)"
    RESULTS[number] = line
    print(line)
    assert ok, line


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def is_path_type(A: IntMatrix) -> bool:
    """Support graph is a path with unit off-diagonals and the extremal spectrum."""
    n = A.n
    degrees = [len(nb) for nb in graph_of(A).neighbours()]
    unit = all(abs(A[i, j]) == 1 for i in range(n) for j in range(n) if i != j and A[i, j])
    path_graph = n == 1 or (sorted(degrees) == [1, 1] + [2] * (n - 2) and sum(degrees) == 2 * (n - 1))
    return unit and path_graph and char_poly(A) == char_poly(path_matrix(n))


CAMPAIGN_SPECS = [EnumSpec(2, 4, 2), EnumSpec(3, 4, 2), EnumSpec(4, 3, 1)]


def test_criterion_01_extremal_equality():
    with Timer() as t:
        bad = [n for n in range(1, 51) if trace_k(path_matrix(n), 2) != 6 * n - 5]
        values = [Fraction(6 * n - 5, n) for n in range(1, 51)]
        increasing = all(a < b < 6 for a, b in zip(values, values[1:]))
        identity = all(v == 6 - Fraction(5, n) for n, v in enumerate(values, 1))
    ok = not bad and increasing and identity and t.elapsed < 1
    report(1, "extremal equality Tr2(M_n) = 6n-5, n <= 50", ok,
           f"mismatches={bad}, strictly increasing below 6={increasing}, "
           f"equals 6-5/n={identity}", t.elapsed)


def test_criterion_02_exhaustive_bounds():
    details, ok = [], True
    with Timer() as t:
        for spec in CAMPAIGN_SPECS:
            rep = verify_campaign(spec, k_max=1)
            n = spec.n
            A1 = IntMatrix(rep.to_dict()["argmin_trace"])
            A2 = IntMatrix(rep.to_dict()["argmin_trace2"])
            good = (not rep.violations and rep.min_trace == 2 * n - 1
                    and rep.min_trace2 == 6 * n - 5 and is_path_type(A2)
                    and sum(A1.diagonal()) == 2 * n - 1)
            ok &= good
            details.append(f"n={n}: {rep.count} matrices, min Tr={rep.min_trace}, "
                           f"min Tr2={rep.min_trace2}, violations={len(rep.violations)}")
    report(2, "exhaustive Tr >= 2n-1 and Tr2 >= 6n-5 with equality", ok and t.elapsed < MINUTES,
           "; ".join(details), t.elapsed)


def test_criterion_03_higher_bounds():
    with Timer() as t:
        bad = [(n, k) for n in range(1, 13) for k in range(1, 5)
               if trace_k(path_matrix(n), 2 ** k) < lower_bound_B(n, k)]
        spots = (lower_bound_B(2, 2), trace_k(path_matrix(2), 4),
                 lower_bound_B(3, 2), trace_k(path_matrix(3), 4))
    ok = not bad and spots == (29, 47, 65, 117) and t.elapsed < 1
    report(3, "Tr_{2^k}(M_n) >= B(n,k), n <= 12, k <= 4", ok,
           f"violations={bad}, B(2,2)={spots[0]} Tr4(M2)={spots[1]} "
           f"B(3,2)={spots[2]} Tr4(M3)={spots[3]}", t.elapsed)


def test_criterion_04_row_sum_of_squares():
    rng = random.Random(20240604)
    failures = 0
    with Timer() as t:
        for _ in range(1000):
            n = rng.randint(1, 6)
            rows = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    rows[i][j] = rows[j][i] = rng.randint(-3, 3)
            A = IntMatrix(rows)
            for k in (1, 2, 3):
                tr, bound = trace_k(A, 2 ** k), rss_bound(A, k)
                if tr < bound or (k == 1 and tr != bound):
                    failures += 1
    report(4, "Tr_{2^k} >= row-sum-of-squares bound, equality at k=1",
           failures == 0 and t.elapsed < SECONDS,
           f"1000 matrices x 3 exponents, failures={failures}", t.elapsed)


def test_criterion_05_spectrum_preservation():
    target = CharPoly((-2, 9, -18, 1))
    with Timer() as t:
        corpus = symmetrizable_corpus(120)
        mismatched = sum(char_poly(A) != char_poly_radical(symmetrize(A)) for A in corpus)
        direct = char_poly(EXAMPLE_3X3)
        via_map = char_poly_radical(symmetrize(EXAMPLE_3X3))
    corpus_ok = mismatched == 0 and len(corpus) >= 100
    example_ok = direct == target and via_map == target
    report(5, "symmetrization preserves the characteristic polynomial",
           corpus_ok and example_ok and t.elapsed < SECONDS,
           f"corpus of {len(corpus)}: mismatches={mismatched}; example gives "
           f"'{direct.pretty()}' directly and '{via_map.pretty()}' after the map, "
           f"expected '{target.pretty()}'", t.elapsed)


def test_criterion_06_density():
    rows, ok = [], True
    with Timer() as t:
        for kind, r, limit in (("trace", Fraction(3), 1), ("trace2", Fraction(15, 2), 10)):
            for N in (10, 100, 1000):
                pt = density_point(r, kind, N)
                in_class = classify(pt.matrix).in_S_n is Verdict.YES
                kappa_ok = pt.kappa is None or 0 <= pt.kappa <= 9
                ok &= pt.gap <= Fraction(limit, N) and in_class and kappa_ok
                rows.append(f"{kind} N={N} gap={pt.gap}" + (f" kappa={pt.kappa}" if pt.kappa is not None else ""))
    report(6, "density constructions", ok and t.elapsed < SECONDS, ", ".join(rows), t.elapsed)


def test_criterion_07_four_squares():
    with Timer() as t:
        bad = [m for m in range(10 ** 4 + 1)
               if sum(b * b for b in four_square(m).b) != m
               or list(four_square(m).b) != sorted(four_square(m).b)]
        spots = four_square(30).b, four_square(32).b
    ok = not bad and spots == ((0, 1, 2, 5), (0, 0, 4, 4)) and t.elapsed < SECONDS
    report(7, "four-square decomposition for 0 <= m <= 10^4", ok,
           f"failures={len(bad)}, 30 -> {spots[0]}, 32 -> {spots[1]}", t.elapsed)


def test_criterion_08_screener():
    with Timer() as t:
        ex = screen_char_poly(parse_poly("-1 8 -5 1"))
        path = screen_char_poly(char_poly(path_matrix(3)), k_max=2)
        polys = {char_poly(A) for A in enumerate_class(EnumSpec(3, 4, 2))}
        false_positives = [p for p in polys if screen_char_poly(p, k_max=2).excluded]
    ok = (ex.excluded and ex.s_values[2] == 9 and ex.bounds[2] == 13 and not path.excluded
          and not false_positives and t.elapsed < MINUTES)
    report(8, "screener soundness", ok,
           f"x^3-5x^2+8x-1 excluded={ex.excluded} (s2={ex.s_values[2]} < {ex.bounds[2]}), "
           f"M_3 excluded={path.excluded}, {len(polys)} realized n=3 polynomials, "
           f"false positives={len(false_positives)}", t.elapsed)


def test_criterion_09_newton_roundtrip():
    rng = random.Random(9)
    failures = 0
    with Timer() as t:
        for _ in range(500):
            d = rng.randint(1, 12)
            p = CharPoly(tuple(rng.randint(-50, 50) for _ in range(d)) + (1,))
            if coeffs_from_power_sums(power_sums_from_coeffs(p, d)) != p:
                failures += 1
    report(9, "Newton roundtrip on 500 monic integer polynomials", failures == 0 and t.elapsed < SECONDS,
           f"failures={failures}", t.elapsed)


def test_criterion_10_determinism(tmp_path):
    outputs = []
    with Timer() as t:
        for workers in (1, 2, 8):
            target = tmp_path / f"campaign_{workers}.json"
            code = run(["campaign", "--n", "3", "--diag-max", "4", "--off-max", "2",
                        "--workers", str(workers), "--out", str(target)])
            outputs.append((code, target.read_bytes()))
    ok = all(c == 0 for c, _ in outputs) and len({b for _, b in outputs}) == 1
    report(10, "campaign output byte-identical across 1, 2, 8 workers", ok,
           f"exit codes={[c for c, _ in outputs]}, distinct outputs={len({b for _, b in outputs})}",
           t.elapsed)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
