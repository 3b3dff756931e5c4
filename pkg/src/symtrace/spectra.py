"""Exact characteristic polynomials, Newton's identities and Sturm root counting."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import NonMonic, ParseError
from .matrices import IntMatrix, RadicalMatrix, satisfies_cycle_condition, is_sign_symmetric
from .numerics import Number, sign, to_int_if_integral


def _norm(c) -> Number:
    if isinstance(c, Fraction):
        return to_int_if_integral(c)
    return int(c)


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial ``sum(coeffs[k] * x**k)``; coefficients low to high."""

    coeffs: tuple

    def __post_init__(self):
        cs = [_norm(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs or cs[-1] != 1:
            raise NonMonic(f"polynomial is not monic: leading coefficient {cs[-1] if cs else None}")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def elementary(self, j: int) -> Number:
        """j-th elementary symmetric function of the roots (0 beyond the degree)."""
        n = self.degree
        if j < 0 or j > n:
            return 0
        return (-1) ** j * self.coeffs[n - j]

    @property
    def e1(self) -> Number:
        return self.elementary(1)

    @property
    def e2(self) -> Number:
        return self.elementary(2)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __call__(self, x):
        return poly_eval(self.coeffs, x)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs)

    def pretty(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = (str(mag) if mag != 1 or k == 0 else "") + mono
            terms.append(("-" if c < 0 else "+", body))
        s = terms[0][1] if terms[0][0] == "+" else "-" + terms[0][1]
        for sg, body in terms[1:]:
            s += f" {sg} {body}"
        return s


def parse_poly(text: str) -> CharPoly:
    """Coefficients from constant to leading, whitespace separated."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty polynomial")
    try:
        cs = [Fraction(t) for t in tokens]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad polynomial coefficient in {text!r}") from exc
    return CharPoly(tuple(cs))


def poly_from_roots(roots: Sequence[Number]) -> CharPoly:
    cs = [Fraction(1)]
    for r in roots:
        nxt = [Fraction(0)] * (len(cs) + 1)
        for k, c in enumerate(cs):
            nxt[k + 1] += c
            nxt[k] -= r * c
        cs = nxt
    return CharPoly(tuple(cs))


# --- dense polynomial helpers (coefficient lists, low to high) ----------------

def _trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_eval(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_deriv(p: Sequence) -> list:
    return _trim([k * p[k] for k in range(1, len(p))])


def poly_divmod(a: Sequence, b: Sequence):
    a = [Fraction(c) for c in _trim(a)]
    b = [Fraction(c) for c in _trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for k, c in enumerate(b):
            a[k + shift] -= f * c
        a = _trim(a)
    return _trim(q), a


def poly_gcd(a: Sequence, b: Sequence) -> list:
    a, b = _trim([Fraction(c) for c in a]), _trim([Fraction(c) for c in b])
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return []
    return [c / a[-1] for c in a]


def squarefree_part(p: Sequence) -> list:
    g = poly_gcd(p, poly_deriv(p))
    if len(g) <= 1:
        return [Fraction(c) for c in _trim(p)]
    return poly_divmod(p, g)[0]


# --- characteristic polynomials ------------------------------------------------

def _matrix_rows(M) -> list:
    if isinstance(M, IntMatrix):
        return [list(r) for r in M.rows]
    return [list(r) for r in M]


def char_poly(M) -> CharPoly:
    """Faddeev-LeVerrier recurrence in exact arithmetic.

    ``M`` is an :class:`IntMatrix` or any square nested sequence of ints or
    Fractions. Integer input stays on the integer path (divisions are exact).
    """
    A = _matrix_rows(M)
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("char_poly needs a square matrix")
    integral = all(isinstance(x, int) for r in A for x in r)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(A[i][t] * Mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        Mk = prod
        tr = sum(A[i][t] * Mk[t][i] for i in range(n) for t in range(n))
        if integral:
            q, r = divmod(-tr, k)
            assert r == 0, "Faddeev-LeVerrier division must be exact for integer input"
            coeffs[n - k] = q
        else:
            coeffs[n - k] = Fraction(-tr) / k
    return CharPoly(tuple(coeffs))


def char_poly_radical(T: RadicalMatrix) -> CharPoly:
    from .symmetry import rationalize

    B, _ = rationalize(T)
    return char_poly(B)


# --- Newton's identities -------------------------------------------------------

def power_sums_from_coeffs(p: CharPoly, k: int) -> tuple:
    """Power sums ``s_1..s_k`` of the roots of ``p`` with multiplicity."""
    if k < 1:
        raise ValueError("k must be positive")
    e = [p.elementary(j) for j in range(k + 1)]
    s = [0] * (k + 1)
    for m in range(1, k + 1):
        acc = (-1) ** (m - 1) * m * e[m]
        for i in range(1, m):
            acc += (-1) ** (i - 1) * e[i] * s[m - i]
        s[m] = _norm(acc)
    return tuple(s[1:])


def coeffs_from_power_sums(s: Sequence[Number]) -> CharPoly:
    """The monic degree-``len(s)`` polynomial whose roots have power sums ``s``."""
    n = len(s)
    if n < 1:
        raise ValueError("need at least one power sum")
    e = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            acc += (-1) ** (i - 1) * e[m - i] * s[i - 1]
        e[m] = acc / m
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = (-1) ** j * e[j]
    return CharPoly(tuple(coeffs))


# --- Sturm sequences -----------------------------------------------------------

def sturm_chain(p: Sequence) -> list:
    p0 = [Fraction(c) for c in _trim(p)]
    chain = [p0]
    p1 = poly_deriv(p0)
    while p1:
        chain.append(p1)
        p0, p1 = p1, [-c for c in poly_divmod(p0, p1)[1]]
    return chain


def _sign_at(q: list, x) -> int:
    if x == math.inf:
        return sign(q[-1])
    if x == -math.inf:
        return sign(q[-1]) * (-1) ** (len(q) - 1)
    return sign(poly_eval(q, x))


def _variations(chain: list, x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    ``p`` is a CharPoly or coefficient list; endpoints are exact rationals or
    ``±math.inf``.
    """
    coeffs = p.coeffs if isinstance(p, CharPoly) else p
    if not _trim(coeffs):
        raise ValueError("sturm_count of the zero polynomial")
    if not lo < hi:
        return 0
    if lo != -math.inf:
        lo = Fraction(lo)
    if hi != math.inf:
        hi = Fraction(hi)
    chain = sturm_chain(squarefree_part(coeffs))
    return _variations(chain, lo) - _variations(chain, hi)


def is_totally_positive(p: CharPoly) -> bool:
    """All roots (with multiplicity) real and strictly positive."""
    q = squarefree_part(p.coeffs)
    d = len(q) - 1
    if d == 0:
        return True
    return sturm_count(q, 0, math.inf) == d


def alternating_signs(p: CharPoly) -> bool:
    """Coefficients strictly alternate; for a real-rooted ``p`` this means all roots > 0."""
    n = p.degree
    return all(c * (-1) ** (n - k) > 0 for k, c in enumerate(p.coeffs))


def sylvester_pd(A: IntMatrix) -> bool:
    """Exact LDL^T of a symmetric matrix: positive definite iff every pivot > 0.

    Rows are kept sparse, so banded inputs cost O(n * bandwidth^2).
    """
    n = A.n
    rows = [{j: Fraction(x) for j, x in enumerate(r) if x} for r in A.rows]
    for k in range(n):
        pivot = rows[k].get(k, Fraction(0))
        if pivot <= 0:
            return False
        below = [(j, v) for j, v in rows[k].items() if j > k]
        for i, aik in below:
            f = aik / pivot
            ri = rows[i]
            for j, v in below:
                nv = ri.get(j, 0) - f * v
                if nv:
                    ri[j] = nv
                else:
                    ri.pop(j, None)
    return True


# beyond this order the O(n^4) characteristic polynomial is avoided for symmetric input
CHARPOLY_PD_MAX_ORDER = 16


def is_positive_definite(A: Union[IntMatrix, RadicalMatrix], method: str = "auto") -> bool:
    """Every eigenvalue real and positive.

    ``method='auto'`` uses coefficient sign alternation when real-rootedness is
    known (symmetric, or sign-symmetric with the cycle condition), otherwise
    Sturm; large symmetric integer matrices go through exact LDL^T.
    ``'sturm'``, ``'alternation'`` and ``'sylvester'`` force one route.
    """
    if method not in ("auto", "alternation", "sturm", "sylvester"):
        raise ValueError(f"unknown method {method!r}")
    if isinstance(A, IntMatrix) and A.is_symmetric():
        if method == "sylvester" or (method == "auto" and A.n > CHARPOLY_PD_MAX_ORDER):
            return sylvester_pd(A)
    elif method == "sylvester":
        raise ValueError("the sylvester route needs a symmetric integer matrix")
    if isinstance(A, RadicalMatrix):
        p = char_poly_radical(A)
        real_rooted = True
    else:
        p = char_poly(A)
        real_rooted = A.is_symmetric() or (
            bool(is_sign_symmetric(A)) and bool(satisfies_cycle_condition(A)))
    if method == "sturm" or (method == "auto" and not real_rooted):
        return is_totally_positive(p)
    return alternating_signs(p)
