"""Matrix carriers, structural predicates and S_n / T_n class membership."""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Optional, Sequence, Union

from .errors import NotSignSymmetric, NotSymmetric, ParseError, ShapeMismatch
from .numerics import RadicalScalar, is_perfect_square, rational_sqrt


@dataclass(frozen=True)
class IntMatrix:
    """Dense square integer matrix, stored row-major as nested tuples."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        n = len(rows)
        if n < 1:
            raise ShapeMismatch("matrix order must be at least 1")
        if any(len(r) != n for r in rows):
            raise ShapeMismatch("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(self.n) for j in range(i + 1, self.n))

    def diagonal(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(self.n))

    def flat(self) -> tuple:
        return tuple(x for r in self.rows for x in r)

    def as_radical(self) -> "RadicalMatrix":
        """View a symmetric integer matrix as a radical matrix (``a -> sgn(a)*sqrt(a^2)``)."""
        if not self.is_symmetric():
            raise NotSymmetric("only symmetric integer matrices embed as radical matrices")
        return RadicalMatrix(tuple(tuple(RadicalScalar.from_int(x) for x in r) for r in self.rows))

    def __str__(self) -> str:
        return format_matrix(self)


@dataclass(frozen=True)
class RadicalMatrix:
    """Symmetric matrix whose entries are signed square roots of integers."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(x if isinstance(x, RadicalScalar) else RadicalScalar.from_int(x)
                           for x in r) for r in self.rows)
        n = len(rows)
        if n < 1:
            raise ShapeMismatch("matrix order must be at least 1")
        if any(len(r) != n for r in rows):
            raise ShapeMismatch("matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise NotSymmetric(f"radical matrix not symmetric at ({i + 1},{j + 1})")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def rational_rows(self) -> Optional[list]:
        """Exact rational entries, or ``None`` when some radicand is not a square."""
        out = []
        for r in self.rows:
            vals = [x.rational_value() for x in r]
            if any(v is None for v in vals):
                return None
            out.append(vals)
        return out

    def __str__(self) -> str:
        return format_matrix(self)


AnyMatrix = Union[IntMatrix, RadicalMatrix]


def _nonzero(x) -> bool:
    return x.sign != 0 if isinstance(x, RadicalScalar) else x != 0


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    NA = "not-applicable"

    @classmethod
    def of(cls, flag: bool) -> "Verdict":
        return cls.YES if flag else cls.NO

    def __bool__(self) -> bool:
        return self is Verdict.YES


@dataclass(frozen=True)
class Check:
    """Outcome of a predicate; ``witness`` is 1-based and set only on failure."""

    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class MatrixGraph:
    n: int
    directed_edges: tuple
    undirected_edges: tuple

    def neighbours(self) -> list:
        adj = [[] for _ in range(self.n)]
        for i, j in self.undirected_edges:
            adj[i - 1].append(j - 1)
            adj[j - 1].append(i - 1)
        for a in adj:
            a.sort()
        return adj

    def components(self) -> list:
        adj = self.neighbours()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                v = queue.popleft()
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps


def graph_of(A: AnyMatrix) -> MatrixGraph:
    n = A.n
    directed = tuple((i + 1, j + 1) for i in range(n) for j in range(n)
                     if i != j and _nonzero(A[i, j]))
    undirected = tuple(sorted({(min(i, j), max(i, j)) for i, j in directed}))
    return MatrixGraph(n, directed, undirected)


def is_connected(A: AnyMatrix) -> bool:
    return len(graph_of(A).components()) == 1


def is_sign_symmetric(A: IntMatrix) -> Check:
    n = A.n
    for i in range(n):
        for j in range(i + 1, n):
            a, b = A[i, j], A[j, i]
            if (a == 0) != (b == 0) or a * b < 0:
                return Check(False, (i + 1, j + 1))
    return Check(True)


def superdiagonal_nonzero(A: AnyMatrix) -> bool:
    return all(_nonzero(A[i, i + 1]) for i in range(A.n - 1))


def subdiagonal_nonzero(A: AnyMatrix) -> bool:
    return all(_nonzero(A[i + 1, i]) for i in range(A.n - 1))


# --- spanning-forest machinery shared by both cycle conditions ---------------

def _bfs_forest(A: AnyMatrix):
    """BFS spanning forest rooted at each component's least vertex.

    Returns (order, parent, depth, non_tree_edges); vertices are 0-based.
    """
    adj = graph_of(A).neighbours()
    n = A.n
    parent = [None] * n
    depth = [0] * n
    seen = [False] * n
    order = []
    tree = set()
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    tree.add((min(v, w), max(v, w)))
                    queue.append(w)
    non_tree = [(i, j) for i in range(n) for j in adj[i] if i < j and (i, j) not in tree]
    return order, parent, depth, non_tree


def _fundamental_cycle(parent, depth, i: int, j: int) -> tuple:
    """Tree path i..j closed by the edge (j, i), normalised, 1-based."""
    left, right = [i], [j]
    a, b = i, j
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    cycle = left + right[-2::-1]
    return normalise_cycle(tuple(v + 1 for v in cycle))


def normalise_cycle(cycle: tuple) -> tuple:
    """Least rotation over both traversal directions."""
    k = len(cycle)
    candidates = []
    for seq in (cycle, cycle[::-1]):
        for r in range(k):
            candidates.append(seq[r:] + seq[:r])
    return min(candidates)


def satisfies_cycle_condition(A: IntMatrix) -> Check:
    """Forward and backward products agree around every cycle.

    Assigns each vertex the squared diagonal scale ``rho`` forced along a BFS
    tree (``rho_c = rho_p * a_cp / a_pc``); a non-tree edge ``(i, j)`` is
    consistent iff ``a_ij * rho_j == a_ji * rho_i``, which is the cycle
    condition on its fundamental cycle.
    """
    ss = is_sign_symmetric(A)
    if not ss:
        raise NotSignSymmetric(f"matrix is not sign-symmetric at {ss.witness}")
    order, parent, depth, non_tree = _bfs_forest(A)
    rho = [Fraction(1)] * A.n
    for v in order:
        p = parent[v]
        if p is not None:
            rho[v] = rho[p] * Fraction(A[v, p], A[p, v])
    for i, j in non_tree:
        if A[i, j] * rho[j] != A[j, i] * rho[i]:
            return Check(False, _fundamental_cycle(parent, depth, i, j))
    return Check(True)


def satisfies_rational_cycle_condition(T: RadicalMatrix) -> Check:
    """Every cycle of length >= 3 has a rational entry product.

    With ``rho_c = rho_p / m_pc`` along tree edges (``rho_c = rho_p`` when
    ``m_pc`` is already a square), a non-tree edge is fine iff
    ``m_ij * rho_j / rho_i`` is a rational square.
    """
    order, parent, depth, non_tree = _bfs_forest(T)
    rho = tree_scales(T, order, parent)
    for i, j in non_tree:
        if rational_sqrt(T[i, j].radicand * rho[j] / rho[i]) is None:
            return Check(False, _fundamental_cycle(parent, depth, i, j))
    return Check(True)


def tree_scales(T: RadicalMatrix, order, parent) -> list:
    rho = [Fraction(1)] * T.n
    for v in order:
        p = parent[v]
        if p is not None:
            m = T[p, v].radicand
            rho[v] = rho[p] if is_perfect_square(m) is not None else rho[p] / m
    return rho


def simple_cycles(n: int, adjacent) -> Iterable[tuple]:
    """Every simple cycle of length >= 3 once, as a normalised 0-based tuple.

    Brute force; only meant for small orders.
    """
    seen = set()
    for k in range(3, n + 1):
        for perm in permutations(range(n), k):
            if perm[0] != min(perm):
                continue
            if all(adjacent(perm[t], perm[(t + 1) % k]) for t in range(k)):
                c = normalise_cycle(perm)
                if c not in seen:
                    seen.add(c)
                    yield c


# --- classification ----------------------------------------------------------

@dataclass
class ClassificationReport:
    kind: str
    n: int
    sign_symmetric: Verdict
    cycle_condition: Verdict
    rational_cycle_condition: Verdict
    symmetric: Verdict
    connected: Verdict
    superdiagonal_nonzero: Verdict
    subdiagonal_nonzero: Verdict
    positive_definite: Verdict
    in_S_n: Verdict
    in_T_n: Verdict
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("sign_symmetric", "cycle_condition", "rational_cycle_condition", "symmetric",
             "connected", "superdiagonal_nonzero", "subdiagonal_nonzero",
             "positive_definite", "in_S_n", "in_T_n")

    @property
    def witness(self) -> Optional[tuple]:
        for name in self.FLAGS:
            if name in self.witnesses:
                return self.witnesses[name]
        return None

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "n": self.n}
        out.update({name: getattr(self, name).value for name in self.FLAGS})
        out["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        return out


def classify(A: AnyMatrix) -> ClassificationReport:
    from .spectra import is_positive_definite

    witnesses = {}
    connected = Verdict.of(is_connected(A))
    sup = Verdict.of(superdiagonal_nonzero(A))
    sub = Verdict.of(subdiagonal_nonzero(A))

    if isinstance(A, IntMatrix):
        ss_check = is_sign_symmetric(A)
        ss = Verdict.of(ss_check.holds)
        if not ss_check:
            witnesses["sign_symmetric"] = ss_check.witness
            cc = Verdict.NA
        else:
            cc_check = satisfies_cycle_condition(A)
            cc = Verdict.of(cc_check.holds)
            if not cc_check:
                witnesses["cycle_condition"] = cc_check.witness
        sym = Verdict.of(A.is_symmetric())
        # symmetric integer entries are rational, so every cycle product is too
        rcc = Verdict.YES if sym else Verdict.NA
        pd = Verdict.of(is_positive_definite(A))
        in_s = Verdict.of(bool(ss) and bool(cc) and bool(pd) and bool(sup) and bool(sub))
        in_t = Verdict.of(bool(sym) and bool(pd) and bool(sup))
        kind = "int"
    else:
        ss = Verdict.YES
        cc = Verdict.NA
        sym = Verdict.YES
        rcc_check = satisfies_rational_cycle_condition(A)
        rcc = Verdict.of(rcc_check.holds)
        if not rcc_check:
            witnesses["rational_cycle_condition"] = rcc_check.witness
        diag_rational = all(A[i, i].rational_value() is not None for i in range(A.n))
        if rcc and diag_rational:
            pd = Verdict.of(is_positive_definite(A))
        else:
            pd = Verdict.NA
            if not diag_rational:
                witnesses["positive_definite"] = tuple(
                    i + 1 for i in range(A.n) if A[i, i].rational_value() is None)
        in_s = Verdict.NA
        in_t = Verdict.of(bool(rcc) and bool(pd) and bool(sup))
        kind = "radical"
    return ClassificationReport(kind, A.n, ss, cc, rcc, sym, connected, sup, sub, pd,
                                in_s, in_t, witnesses)


# --- text format ---------------------------------------------------------------

def _parse_radical(token: str) -> RadicalScalar:
    t = token.replace(" ", "")
    if "sqrt" not in t:
        return RadicalScalar.from_int(int(t))
    head, _, rest = t.partition("sqrt(")
    if not rest.endswith(")"):
        raise ParseError(f"bad radical entry {token!r}")
    m = int(rest[:-1])
    head = head.rstrip("*")
    s = {"": 1, "+": 1, "-": -1, "1": 1, "+1": 1, "-1": -1}.get(head)
    if s is None:
        raise ParseError(f"radical sign must be -1 or 1 in {token!r}")
    if m < 0:
        raise ParseError(f"negative radicand in {token!r}")
    return RadicalScalar(s if m else 0, m)


def parse_matrix(text: str) -> AnyMatrix:
    """Parse the shared matrix document.

    ::

        n: 3
        kind: int          (optional; int or radical, inferred when absent)
        entries:
        2 16 12
        1 6 4
        3 16 10
    """
    n = None
    kind = None
    rows = []
    in_entries = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if sep and key in ("n", "kind", "entries"):
            if key == "n":
                try:
                    n = int(value)
                except ValueError as exc:
                    raise ParseError(f"bad order {value!r}") from exc
            elif key == "kind":
                kind = value.strip().lower()
            else:
                in_entries = True
                if value.strip():
                    rows.append(value.split())
            continue
        if not in_entries:
            raise ParseError(f"unexpected line before 'entries:': {raw!r}")
        rows.append(line.split())
    if n is None:
        raise ParseError("missing field 'n'")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ParseError(f"expected {n} rows of {n} entries")
    if kind is None:
        kind = "radical" if any("sqrt" in t for r in rows for t in r) else "int"
    try:
        if kind == "int":
            return IntMatrix(tuple(tuple(int(t) for t in r) for r in rows))
        if kind == "radical":
            return RadicalMatrix(tuple(tuple(_parse_radical(t) for t in r) for r in rows))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown matrix kind {kind!r}")


def format_matrix(A: AnyMatrix) -> str:
    kind = "int" if isinstance(A, IntMatrix) else "radical"
    lines = [f"n: {A.n}", f"kind: {kind}", "entries:"]
    lines += [" ".join(str(x) for x in r) for r in A.rows]
    return "\n".join(lines) + "\n"


def format_rational_matrix(rows: Sequence[Sequence]) -> str:
    lines = [f"n: {len(rows)}", "kind: rational", "entries:"]
    lines += [" ".join(str(Fraction(x)) for x in r) for r in rows]
    return "\n".join(lines) + "\n"
