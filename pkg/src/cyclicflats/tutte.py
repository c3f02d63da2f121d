"""Tutte polynomial T(M; x, y) = Σ_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).

Polynomials are dicts ``{(i, j): coeff}`` for the monomial x^i y^j with
nonzero integer coefficients.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from ._bits import full
from .core import Matroid, MatroidError, count_subsets_by_rank

Poly = dict[tuple[int, int], int]

SUBSET_LIMIT = 16


def _add(p: Poly, q: Poly, scale: int = 1) -> Poly:
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, 0) + scale * c
    return {k: c for k, c in out.items() if c}


def _shift(p: Poly, di: int, dj: int) -> Poly:
    return {(i + di, j + dj): c for (i, j), c in p.items()}


def _from_rank_counts(r: int, counts: dict[tuple[int, int], int]) -> Poly:
    # expand (x-1)^a (y-1)^b for each (size, rank) class
    out: dict[tuple[int, int], int] = {}
    for (s, k), cnt in counts.items():
        if not cnt:
            continue
        a, b = r - k, s - k
        for i in range(a + 1):
            ci = comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                key = (i, j)
                out[key] = out.get(key, 0) + cnt * ci * comb(b, j) * (-1) ** (b - j)
    return {k: c for k, c in out.items() if c}


def rank_size_counts_via_flats(m: Matroid) -> dict[tuple[int, int], int]:
    """Histogram of (|A|, r(A)) over all subsets, grouped by closure.

    The number of s-subsets whose closure is exactly the flat F is
    C(|F|, s) minus the same count for every flat strictly inside F.
    """
    flats = [(f, k) for k in range(m.r + 1) for f in m._flats(k)]
    exact: dict[int, list[int]] = {}
    out: dict[tuple[int, int], int] = {}
    for f, k in flats:
        size = f.bit_count()
        g = [comb(size, s) for s in range(size + 1)]
        for h, _ in flats:
            if h != f and h & ~f == 0 and h in exact:
                for s, c in enumerate(exact[h]):
                    g[s] -= c
        exact[f] = g
        for s, c in enumerate(g):
            if c:
                out[(s, k)] = out.get((s, k), 0) + c
    return out


def tutte_polynomial(m: Matroid, method: str = "auto") -> Poly:
    """Subset-sum Tutte polynomial.

    ``method`` is ``"subsets"`` (all 2^n subsets), ``"flats"`` (the same
    sum with subsets grouped by closure) or ``"auto"``.
    """
    if method == "auto":
        method = "subsets" if m.n <= SUBSET_LIMIT else "flats"
    if method == "subsets":
        counts = count_subsets_by_rank(m)
    elif method == "flats":
        counts = rank_size_counts_via_flats(m)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _from_rank_counts(m.r, counts)


def tutte_deletion_contraction(m: Matroid, max_n: int = 12) -> Poly:
    """Independent oracle: recursive deletion/contraction on the rank function."""
    if m.n > max_n:
        raise MatroidError(f"deletion-contraction limited to n <= {max_n}")

    @lru_cache(maxsize=None)
    def rec(ground: int, con: int) -> tuple:
        if not ground:
            return ((0, 0, 1),)
        e = ground & -ground
        rest = ground & ~e
        rc = m._rank(con)

        def rk(a):
            return m._rank(a | con) - rc

        if rk(e) == 0:
            return _pack(_shift(_unpack(rec(rest, con)), 0, 1))
        if rk(rest) < rk(ground):
            return _pack(_shift(_unpack(rec(rest, con | e)), 1, 0))
        return _pack(_add(_unpack(rec(rest, con)), _unpack(rec(rest, con | e))))

    return _unpack(rec(full(m.n), 0))


def _pack(p: Poly) -> tuple:
    return tuple(sorted((i, j, c) for (i, j), c in p.items()))


def _unpack(t: tuple) -> Poly:
    return {(i, j): c for i, j, c in t}


def _mono(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def format_polynomial(p: Poly) -> str:
    """Terms in descending powers of x, then of y: ``x^2 + 2*x + y^2 + 2*y``."""
    if not p:
        return "0"
    out = []
    for (i, j) in sorted(p, key=lambda k: (-k[0], -k[1])):
        c = p[(i, j)]
        mono = _mono(i, j)
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def evaluate(p: Poly, x: int, y: int) -> int:
    return sum(c * x ** i * y ** j for (i, j), c in p.items())
