"""Single-field mutations of ranked families and independent witness checks."""

from __future__ import annotations

import numpy as np

from cyclicflats import Matroid
from cyclicflats.zfl import ValidationReport

from corpus import brute_cyclic_flats, rank_axioms_hold


def mutate(n: int, entries: list[tuple[frozenset, int]], rng: np.random.Generator):
    ents = [(frozenset(s), k) for s, k in entries]
    kind = rng.choice(["rank", "add", "remove", "drop", "insert"])
    i = int(rng.integers(len(ents)))
    s, k = ents[i]
    if kind == "rank":
        ents[i] = (s, k + int(rng.choice([-2, -1, 1, 2])))
    elif kind == "add" and len(s) < n:
        e = int(rng.choice(sorted(set(range(n)) - s)))
        ents[i] = (s | {e}, k)
    elif kind == "remove" and s:
        e = int(rng.choice(sorted(s)))
        ents[i] = (s - {e}, k)
    elif kind == "drop" and len(ents) > 1:
        ents.pop(i)
    else:
        t = frozenset(int(e) for e in np.flatnonzero(rng.integers(0, 2, size=n)))
        ents.append((t, int(rng.integers(0, n + 1))))
    return kind, ents


def _least(fam):
    cands = [s for s in fam if all(s <= t for t in fam)]
    return cands[0] if cands else None


def _join(fam, x, y):
    ups = [s for s in fam if x | y <= s]
    least = [s for s in ups if all(s <= t for t in ups)]
    return least[0] if least else None


def _meet(fam, x, y):
    downs = [s for s in fam if s <= x & y]
    most = [s for s in downs if all(t <= s for t in downs)]
    return most[0] if most else None


def confirm_rejection(n: int, entries, rep: ValidationReport) -> bool:
    """Re-derive the violation from the witness without using the validator."""
    sets = [frozenset(s) for s, _ in entries]
    rank = {}
    for s, k in entries:
        rank.setdefault(frozenset(s), k)
    w = rep.witness
    if rep.axiom == "input":
        s = frozenset(w[0])
        return any(not 0 <= e < n for e in s) or sets.count(s) > 1
    if rep.axiom == "Z0":
        if not sets:
            return True
        x, y = w
        return _join(sets, x, y) is None or _meet(sets, x, y) is None
    if rep.axiom == "Z1":
        least = _least(sets)
        return least == w[0] and rank[least] != 0
    if rep.axiom == "Z2":
        x, y, rx, ry = w
        if not (x < y and rank[x] == rx and rank[y] == ry):
            return False
        return not 0 < ry - rx < len(y - x)
    if rep.axiom == "Z3":
        x, y, j, m, lhs, rhs = w
        if _join(sets, x, y) != j or _meet(sets, x, y) != m:
            return False
        mine = rank[j] + rank[m] + len((x & y) - m)
        return mine == lhs and rank[x] + rank[y] == rhs and lhs > rhs
    return False


def confirm_acceptance(n: int, entries) -> bool:
    """An accepted family must define a matroid whose cyclic flats are exactly the family."""
    m = Matroid(n, entries)
    if not rank_axioms_hold(n, m._rank):
        return False
    got = sorted(brute_cyclic_flats(n, m._rank), key=lambda e: (len(e[0]), sorted(e[0])))
    want = sorted(((frozenset(s), k) for s, k in entries), key=lambda e: (len(e[0]), sorted(e[0])))
    return got == want
