"""Rank sequences, the G-invariant, flags and catenary data, and the chain
machinery relating flags to chains of cyclic flats.

Conventions
-----------
* A rank sequence is a string of ``'0'``/``'1'`` characters.
* A G-invariant is a dict ``rank sequence -> count`` (counts sum to n!).
* A composition is a tuple ``(a_0, a_1, ..., a_k)``.
* Catenary data is a dict ``composition -> number of flags``.
* A chain of cyclic flats is a tuple of frozensets in increasing order.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Iterator, Mapping, Sequence

from ._bits import elements, from_mask, full, set_key, subsets_of_size, to_mask
from .core import Matroid, MatroidError

Composition = tuple
Chain = tuple


# -- rank sequences and G ----------------------------------------------------

def rank_sequence(m: Matroid, perm: Sequence[int]) -> str:
    if sorted(perm) != list(range(m.n)):
        raise MatroidError("rank_sequence needs a permutation of the ground set")
    bits = []
    prefix, prev = 0, 0
    for e in perm:
        prefix |= 1 << e
        cur = m._rank(prefix)
        bits.append("1" if cur > prev else "0")
        prev = cur
    return "".join(bits)


def g_invariant_bruteforce(m: Matroid, max_n: int = 10) -> dict[str, int]:
    """G(M) summed over all n! orderings of E.

    Orderings are grouped by their prefix sets: the number of orderings of a
    set S with a given rank sequence is propagated to S ∪ {e}.  This visits
    every permutation exactly once, in 2^n * (sequences per set) work.
    """
    if m.n > max_n:
        raise MatroidError(f"brute force refused for n={m.n} > {max_n}; use the catenary route")
    n = m.n
    layer: dict[int, Counter] = {0: Counter({"": 1})}
    for _ in range(n):
        nxt: dict[int, Counter] = {}
        for s, seqs in layer.items():
            rs = m._rank(s)
            rest = full(n) & ~s
            while rest:
                low = rest & -rest
                rest ^= low
                t = s | low
                bit = "1" if m._rank(t) > rs else "0"
                acc = nxt.setdefault(t, Counter())
                for seq, c in seqs.items():
                    acc[seq + bit] += c
        layer = nxt
    return dict(sorted(layer[full(n)].items())) if n else {"": 1}


def g_invariant_by_permutations(m: Matroid, max_n: int = 8) -> dict[str, int]:
    """Literal sum over ``itertools.permutations``; a test oracle."""
    if m.n > max_n:
        raise MatroidError(f"literal enumeration refused for n={m.n} > {max_n}")
    out = Counter(rank_sequence(m, p) for p in permutations(range(m.n)))
    return dict(sorted(out.items()))


def dual_transform(g: Mapping[str, int]) -> dict[str, int]:
    """Reverse every rank sequence and swap 0s and 1s."""
    flip = str.maketrans("01", "10")
    return dict(sorted((seq[::-1].translate(flip), c) for seq, c in g.items()))


# -- flags and catenary data -------------------------------------------------

def _iter_flag_masks(m: Matroid, start: int | None = None) -> Iterator[tuple[int, ...]]:
    E = full(m.n)
    bottom = m._closure(0)

    def walk(path):
        f = path[-1]
        if f == E:
            yield tuple(path)
            return
        for g in m._upper_covers(f):
            path.append(g)
            yield from walk(path)
            path.pop()

    if start is None:
        yield from walk([bottom])
    else:
        yield from walk([bottom, start])


def flags(m: Matroid) -> list[tuple[frozenset[int], ...]]:
    """Every flag (X_0, ..., X_k), materialised."""
    return [tuple(from_mask(x) for x in fl) for fl in _iter_flag_masks(m)]


def composition(flag: Sequence[Iterable[int]]) -> Composition:
    sets = [frozenset(x) for x in flag]
    return (len(sets[0]),) + tuple(len(b - a) for a, b in zip(sets, sets[1:]))


def _mask_composition(fl: Sequence[int]) -> Composition:
    return (fl[0].bit_count(),) + tuple((b & ~a).bit_count() for a, b in zip(fl, fl[1:]))


def _tails(m: Matroid, f: int, memo: dict) -> Counter:
    got = memo.get(f)
    if got is not None:
        return got
    if f == full(m.n):
        res = Counter({(): 1})
    else:
        res = Counter()
        sz = f.bit_count()
        for g in m._upper_covers(f):
            step = (g.bit_count() - sz,)
            for t, c in _tails(m, g, memo).items():
                res[step + t] += c
    memo[f] = res
    return res


def _catenary_part(m: Matroid, bottom: int, atoms: Sequence[int]) -> Counter:
    memo: dict = {}
    out = Counter()
    base = bottom.bit_count()
    for a in atoms:
        step = (a.bit_count() - base,)
        for t, c in _tails(m, a, memo).items():
            out[step + t] += c
    return out


def catenary_data(m: Matroid, workers: int = 1) -> dict[Composition, int]:
    """ν(M; a) for every composition a with a flag.

    Depth-first over covers in the lattice of flats, memoising the
    multiset of tail compositions of each flat.  With ``workers > 1`` the
    rank-1 flats are split across processes and the partial counts summed;
    the result does not depend on the split.
    """
    bottom = m._closure(0)
    a0 = bottom.bit_count()
    if bottom == full(m.n):
        return {(a0,): 1}
    atoms = m._upper_covers(bottom)
    if workers <= 1 or len(atoms) < 2:
        tails = _catenary_part(m, bottom, atoms)
    else:
        workers = min(workers, len(atoms))
        chunks = [atoms[i::workers] for i in range(workers)]
        tails = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_catenary_part, [m] * workers, [bottom] * workers, chunks):
                tails.update(part)
    return dict(sorted(((a0,) + t, c) for t, c in tails.items()))


def flag_count(m: Matroid) -> int:
    """Number of flags, counted bottom-up over the rank layers of flats
    (each flat receives the sum over the flats it covers)."""
    count = {m._closure(0): 1}
    for k in range(1, m.r + 1):
        below = m._flats(k - 1)
        for g in m._flats(k):
            count[g] = sum(count[f] for f in below if f & ~g == 0)
    return count[full(m.n)]


def default_workers() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


# -- from catenary data to G -------------------------------------------------

def gamma_weights(n: int, k: int, support: Iterable[Composition]) -> dict[Composition, dict[str, int]]:
    """For each composition a, the number of orderings of E that induce one
    fixed flag of composition a, split by rank sequence.

    Walking an ordering left to right: the i-th rank jump must pick one of
    the a_i new elements of X_i; every other position must pick an unused
    element of the current flat.  Weights depend only on a.
    """
    out = {}
    for a in support:
        a = tuple(a)
        if len(a) != k + 1 or sum(a) != n or a[0] < 0 or any(x <= 0 for x in a[1:]):
            raise MatroidError(f"{a} is not an ({n},{k})-composition")
        cum = [a[0]]
        for x in a[1:]:
            cum.append(cum[-1] + x)
        w = {}
        for ones in combinations(range(n), k):
            weight = 1
            level = 0
            onepos = set(ones)
            for j in range(n):
                if j in onepos:
                    level += 1
                    choices = a[level]
                else:
                    choices = cum[level] - j
                if choices <= 0:
                    weight = 0
                    break
                weight *= choices
            if weight:
                seq = "".join("1" if j in onepos else "0" for j in range(n))
                w[seq] = weight
        out[a] = dict(sorted(w.items()))
    return out


def g_from_catenary(cd: Mapping[Composition, int], n: int, k: int) -> dict[str, int]:
    weights = gamma_weights(n, k, [a for a, c in cd.items() if c])
    g = Counter()
    for a, c in cd.items():
        if not c:
            continue
        for seq, w in weights[tuple(a)].items():
            g[seq] += c * w
    return dict(sorted(g.items()))


def g_invariant(m: Matroid, *, bruteforce: bool | None = None, workers: int = 1) -> dict[str, int]:
    """G(M), by brute force for n <= 10 and via catenary data otherwise."""
    if bruteforce is None:
        bruteforce = m.n <= 10
    if bruteforce:
        return g_invariant_bruteforce(m, max_n=max(10, m.n))
    return g_from_catenary(catenary_data(m, workers=workers), m.n, m.r)


# -- chains of cyclic flats --------------------------------------------------

def _zo_masks(m: Matroid) -> list[int]:
    E = full(m.n)
    return [z for z, _ in m.zmasks if z not in (0, E)]


def _chain_masks(m: Matroid) -> list[tuple[int, ...]]:
    zo = sorted(_zo_masks(m), key=set_key)
    out = []

    def extend(chain, start):
        out.append(chain)
        for j in range(start, len(zo)):
            z = zo[j]
            if chain[-1] & ~z == 0 and chain[-1] != z:
                extend(chain + (z,), j + 1)

    for i, z in enumerate(zo):
        extend((z,), i + 1)
    out.sort(key=lambda c: (len(c), [set_key(x) for x in c]))
    return out


def chains_of_cyclic_flats(m: Matroid) -> list[Chain]:
    """Nonempty chains in the proper nonempty cyclic flats."""
    return [tuple(from_mask(z) for z in c) for c in _chain_masks(m)]


def _to_chain_masks(m: Matroid, chain: Iterable[Iterable[int]]) -> tuple[int, ...]:
    return tuple(sorted((to_mask(x, m.n) for x in chain), key=set_key))


def _reduce_flag(m: Matroid, fl: Sequence[int]) -> tuple[int, ...]:
    E = full(m.n)
    out = []
    for x in fl:
        z = m._coloop_free_part(x)
        if z in (0, E) or (out and out[-1] == z):
            continue
        out.append(z)
    return tuple(out)


def reduced_cyclic_chain(m: Matroid, flag: Sequence[Iterable[int]]) -> Chain:
    """Strip the coloops of M|X_i from each X_i, drop repeats, ∅ and E."""
    if not m.is_loopless_coloopless():
        raise MatroidError("reduced cyclic chains need a matroid without loops and coloops")
    fl = [to_mask(x, m.n) for x in flag]
    if len(fl) != m.r + 1 or any(m._rank(x) != i or m._closure(x) != x for i, x in enumerate(fl)) \
            or any(a & ~b for a, b in zip(fl, fl[1:])):
        raise MatroidError("not a flag of this matroid")
    return tuple(from_mask(z) for z in _reduce_flag(m, fl))


@dataclass
class ChainReport:
    """Compositions of flags grouped by reduced cyclic chain.

    ``per_chain`` has a key for every chain of proper nonempty cyclic flats
    and for the empty chain ``()``; chains no flag reduces to map to an
    empty Counter.
    """

    per_chain: dict[Chain, Counter] = field(default_factory=dict)

    def total(self) -> Counter:
        out = Counter()
        for c in self.per_chain.values():
            out.update(c)
        return out

    def __getitem__(self, chain) -> Counter:
        key = tuple(sorted((frozenset(x) for x in chain), key=lambda s: (len(s), sorted(s))))
        return self.per_chain[key]


def chain_report(m: Matroid) -> ChainReport:
    if not m.is_loopless_coloopless():
        raise MatroidError("chain reports need a matroid without loops and coloops")
    groups: dict[tuple[int, ...], Counter] = {(): Counter()}
    for c in _chain_masks(m):
        groups[c] = Counter()
    for fl in _iter_flag_masks(m):
        groups[_reduce_flag(m, fl)][_mask_composition(fl)] += 1
    return ChainReport({tuple(from_mask(z) for z in c): cnt for c, cnt in groups.items()})


@dataclass(frozen=True)
class PartitionReport:
    ok: bool
    block: int | None = None
    left: Counter | None = None
    right: Counter | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def _check_partition(m: Matroid, blocks, side: str) -> list[list[tuple[int, ...]]]:
    allowed = set(_chain_masks(m)) | {()}
    seen = set()
    out = []
    for block in blocks:
        bm = []
        for chain in block:
            cm = _to_chain_masks(m, chain)
            if cm not in allowed:
                raise MatroidError(f"{side}: {[sorted(x) for x in chain]} is not a chain of proper nonempty cyclic flats")
            if cm in seen:
                raise MatroidError(f"{side}: chain {[sorted(x) for x in chain]} appears in two blocks")
            seen.add(cm)
            bm.append(cm)
        out.append(bm)
    if seen != allowed:
        missing = sorted(allowed - seen, key=len)[0]
        raise MatroidError(f"{side}: chain {[sorted(from_mask(z)) for z in missing]} is not covered")
    return out


def verify_chain_partition(m1: Matroid, m2: Matroid, P, Q) -> PartitionReport:
    """Compare comp(fl(P_i)) with comp(fl(Q_i)) block by block.

    ``P`` and ``Q`` are sequences of blocks of chains (each chain an
    iterable of sets; the empty chain is ``()``) that must partition all
    chains of the respective matroid, empty chain included.
    """
    if len(P) != len(Q):
        raise MatroidError("the two partitions need the same number of blocks")
    pm = _check_partition(m1, P, "left")
    qm = _check_partition(m2, Q, "right")
    r1, r2 = chain_report(m1), chain_report(m2)

    def gather(rep, m, block):
        out = Counter()
        for cm in block:
            out.update(rep.per_chain[tuple(from_mask(z) for z in cm)])
        return out

    for i, (bp, bq) in enumerate(zip(pm, qm)):
        left, right = gather(r1, m1, bp), gather(r2, m2, bq)
        if left != right:
            return PartitionReport(False, i, left, right, f"block {i}: composition multisets differ")
    return PartitionReport(True)


# -- the sets g_M(F) ---------------------------------------------------------

def _g_masks(m: Matroid, f: int, pool: Sequence[int] | None = None) -> set[int]:
    if pool is None:
        pool = list(subsets_of_size(full(m.n), m.r - 1))
    return {x for x in pool if m._closure(x & f) == f}


def g_sets(m: Matroid, F: Iterable[int]) -> set[frozenset[int]]:
    """All (r-1)-subsets X of E with cl(X ∩ F) = F, for F a proper nonempty cyclic flat."""
    f = to_mask(F, m.n)
    if f not in _zo_masks(m):
        raise MatroidError("g_sets is defined on proper nonempty cyclic flats")
    return {from_mask(x) for x in _g_masks(m, f)}


def iota_via_g(m: Matroid) -> int:
    """C(n, r-1) minus the number of (r-1)-sets lying in some g_M(F)."""
    pool = list(subsets_of_size(full(m.n), m.r - 1))
    union = set()
    for f in _zo_masks(m):
        union |= _g_masks(m, f, pool)
    return comb(m.n, m.r - 1) - len(union)


@dataclass(frozen=True)
class InclusionExclusionReport:
    ok: bool
    union: int
    subset_sum: int | None
    chain_sum: int
    iota_direct: int
    iota_from_union: int
    join_property: bool


def inclusion_exclusion_check(m: Matroid, max_subset_terms: int = 1 << 16) -> InclusionExclusionReport:
    """Three ways to count ⋃ g(F) over proper nonempty cyclic flats F:
    directly, by inclusion-exclusion over all nonempty subsets, and over
    nonempty chains only.  Also checks g(F1) ∩ g(F2) ⊆ g(F1 ∨ F2) and
    recovers ι(M) as C(n, r-1) - |⋃ g(F)|.

    The subset sum is skipped (``subset_sum=None``) when there would be
    more than ``max_subset_terms`` terms.
    """
    if not m.is_loopless_coloopless():
        raise MatroidError("needs a matroid without loops and coloops")
    pool = list(subsets_of_size(full(m.n), m.r - 1))
    zo = sorted(_zo_masks(m), key=set_key)
    g = {f: _g_masks(m, f, pool) for f in zo}
    union = set().union(*g.values()) if g else set()

    subset_sum = None
    if (1 << len(zo)) <= max_subset_terms:
        subset_sum = 0
        for size in range(1, len(zo) + 1):
            for S in combinations(zo, size):
                inter = set.intersection(*(g[f] for f in S))
                subset_sum += (-1) ** (size + 1) * len(inter)
    chain_sum = 0
    for c in _chain_masks(m):
        inter = set.intersection(*(g[f] for f in c))
        chain_sum += (-1) ** (len(c) + 1) * len(inter)

    E = full(m.n)
    join_ok = True
    for f1, f2 in combinations(zo, 2):
        both = g[f1] & g[f2]
        if not both:
            continue
        j = m._closure(f1 | f2)
        if j == E or j not in g or not both <= g[j]:
            join_ok = False
            break

    iota_direct = m.independent_hyperplane_count()
    iota_union = comb(m.n, m.r - 1) - len(union)
    ok = (chain_sum == len(union) and (subset_sum is None or subset_sum == len(union))
          and iota_direct == iota_union and join_ok)
    return InclusionExclusionReport(ok, len(union), subset_sum, chain_sum, iota_direct, iota_union, join_ok)


def _spanning_counts(minor: Matroid) -> list[int]:
    """counts[a] = number of a-subsets spanning the minor."""
    counts = [0] * (minor.n + 1)
    for a in range(minor.n + 1):
        counts[a] = sum(1 for x in subsets_of_size(full(minor.n), a) if minor._rank(x) == minor.r)
    return counts


def chain_intersection_via_spanning_sets(m: Matroid, chain: Sequence[Iterable[int]]) -> int:
    """|⋂_{F in chain} g(F)| counted by choosing, for each interval of the
    chain, a spanning set of the interval minor, plus any remaining
    elements above the top of the chain."""
    cm = _to_chain_masks(m, chain)
    if not cm:
        raise MatroidError("needs a nonempty chain")
    zo = set(_zo_masks(m))
    if any(z not in zo for z in cm) or any(a & ~b or a == b for a, b in zip(cm, cm[1:])):
        raise MatroidError("not a chain of proper nonempty cyclic flats")
    bounds = [0] + list(cm)
    minors = [m.minor(from_mask(hi), from_mask(lo)) for lo, hi in zip(bounds, bounds[1:])]
    span = [_spanning_counts(mi) for mi in minors]
    lower = [mi.r for mi in minors]
    free = m.n - cm[-1].bit_count()
    target = m.r - 1
    t = len(cm)
    total = 0

    def rec(i, left, prod):
        nonlocal total
        if i == t:
            total += prod * comb(free, left) if 0 <= left <= free else 0
            return
        for a in range(lower[i], min(left, minors[i].n) + 1):
            c = span[i][a]
            if c:
                rec(i + 1, left - a, prod * c)

    rec(0, target, 1)
    return total


def chain_compositions_via_lists(m: Matroid, chain: Sequence[Iterable[int]]) -> Counter:
    """comp(fl(C)) rebuilt from sizes, ranks and independent-hyperplane
    counts only.

    A flag reducing to C = (F_1 ⊂ ... ⊂ F_t) is a list of the sets F_j
    (in order) and the singletons of an independent hyperplane H_j of
    each interval minor M|F_j/F_{j-1}, each H_j placed before F_j.  Each
    placement pattern is weighted by the hyperplane choices and the
    orderings of each H_j.
    """
    if not m.is_loopless_coloopless():
        raise MatroidError("needs a matroid without loops and coloops")
    cm = _to_chain_masks(m, chain)
    bounds = [0] + list(cm) + [full(m.n)]
    steps = []
    for lo, hi in zip(bounds, bounds[1:]):
        mi = m.minor(from_mask(hi), from_mask(lo))
        steps.append((mi.r, hi.bit_count() - lo.bit_count(), mi.independent_hyperplane_count()))
    weight = 1
    for rk, _, iota in steps:
        weight *= iota * factorial(rk - 1)
    if weight == 0:
        return Counter()

    out = Counter()

    def rec(j, tokens):
        if j == len(steps):
            comp = [0]
            for tok in tokens:
                comp.append(1 if tok is None else tok)
            out[tuple(comp)] += weight
            return
        rk, size, _ = steps[j]
        new = rk - 1
        slots = len(tokens) + new
        for pos in combinations(range(slots), new):
            merged, it = [], iter(tokens)
            pos = set(pos)
            for s in range(slots):
                merged.append(None if s in pos else next(it))
            merged.append(size - new)
            rec(j + 1, merged)

    rec(0, [])
    return out
