"""Matroids presented by their ranked cyclic flats.

A matroid on ``{0, ..., n-1}`` is stored as the family of its cyclic flats
with their ranks.  The rank of an arbitrary set follows from

    r(A) = min(|A|, min over cyclic flats Z of r(Z) + |A - Z|)

and everything else (closure, flats, minors, duals) is derived from that
oracle.  Subsets are exchanged as ``frozenset`` objects; internally they are
int bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from ._bits import elements, from_mask, full, set_key, to_mask


class MatroidError(ValueError):
    """Raised for malformed input (element out of range, bad family, ...)."""


class Matroid:
    """An immutable matroid backed by its ranked cyclic flats.

    Parameters
    ----------
    n : int
        Ground set size; elements are ``0..n-1``.
    zflats : iterable of (subset, rank)
        The cyclic flats.  No axiom checking happens here; use
        :func:`cyclicflats.zfl.matroid_from_cyclic_flats` for validated
        construction.
    name : str, optional
    element_map : sequence of int, optional
        For minors: ``element_map[i]`` is the parent element that ``i``
        stands for.
    """

    __slots__ = ("n", "zmasks", "r", "name", "element_map", "_rank_cache", "_closure_cache", "_flats_by_rank")

    def __init__(self, n: int, zflats: Iterable, *, name: str | None = None,
                 element_map: Sequence[int] | None = None):
        if n < 0:
            raise MatroidError("ground set size must be non-negative")
        entries = []
        seen = set()
        for s, k in zflats:
            mask = s if isinstance(s, int) and not isinstance(s, bool) else to_mask(s, n)
            if mask >> n:
                raise MatroidError(f"cyclic flat {sorted(elements(mask))} leaves the ground set")
            if mask in seen:
                raise MatroidError(f"cyclic flat {sorted(elements(mask))} listed twice")
            if k < 0:
                raise MatroidError("ranks must be non-negative")
            seen.add(mask)
            entries.append((mask, int(k)))
        if not entries:
            raise MatroidError("a matroid has at least one cyclic flat")
        entries.sort(key=lambda e: set_key(e[0]))
        self.n = n
        self.zmasks: tuple[tuple[int, int], ...] = tuple(entries)
        self.name = name
        self.element_map = tuple(element_map) if element_map is not None else None
        self._rank_cache: dict[int, int] = {}
        self._closure_cache: dict[int, int] = {}
        self._flats_by_rank: dict[int, tuple[int, ...]] = {}
        self.r = self._rank(full(n))

    # -- identity -------------------------------------------------------
    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Matroid{label} n={self.n} r={self.r} |Z|={len(self.zmasks)}>"

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.zmasks == other.zmasks

    def __hash__(self):
        return hash((self.n, self.zmasks))

    def __getstate__(self):
        return (self.n, self.zmasks, self.name, self.element_map)

    def __setstate__(self, state):
        n, zmasks, name, element_map = state
        self.__init__(n, zmasks, name=name, element_map=element_map)

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(self.n))

    @property
    def zflats(self) -> list[tuple[frozenset[int], int]]:
        return [(from_mask(m), k) for m, k in self.zmasks]

    @property
    def loops(self) -> frozenset[int]:
        return from_mask(self._closure(0))

    @property
    def coloops(self) -> frozenset[int]:
        E = full(self.n)
        return frozenset(e for e in range(self.n) if self._rank(E & ~(1 << e)) < self.r)

    def is_loopless_coloopless(self) -> bool:
        return (self.zmasks[0] == (0, 0) and self.zmasks[-1][0] == full(self.n))

    # -- mask-level primitives (hot paths) ------------------------------
    def _mask(self, a) -> int:
        try:
            return to_mask(a, self.n)
        except ValueError as exc:
            raise MatroidError(str(exc)) from None

    def _rank(self, a: int) -> int:
        cached = self._rank_cache.get(a)
        if cached is not None:
            return cached
        best = a.bit_count()
        for z, k in self.zmasks:
            v = k + (a & ~z).bit_count()
            if v < best:
                best = v
        self._rank_cache[a] = best
        return best

    def _closure(self, a: int) -> int:
        cached = self._closure_cache.get(a)
        if cached is not None:
            return cached
        ra = self._rank(a)
        # e joins the closure iff some cyclic flat Z containing e attains the rank minimum
        cl = a
        for z, k in self.zmasks:
            if k + (a & ~z).bit_count() == ra:
                cl |= z
        self._closure_cache[a] = cl
        return cl

    def _flats(self, k: int) -> tuple[int, ...]:
        got = self._flats_by_rank.get(k)
        if got is not None:
            return got
        if k == 0:
            out = (self._closure(0),)
        else:
            found = set()
            E = full(self.n)
            for f in self._flats(k - 1):
                rest = E & ~f
                while rest:
                    low = rest & -rest
                    rest ^= low
                    found.add(self._closure(f | low))
            out = tuple(sorted(found, key=set_key))
        self._flats_by_rank[k] = out
        return out

    def _upper_covers(self, f: int) -> list[int]:
        """Flats covering the flat ``f``."""
        found = set()
        rest = full(self.n) & ~f
        while rest:
            low = rest & -rest
            g = self._closure(f | low)
            rest &= ~g
            found.add(g)
        return sorted(found, key=set_key)

    def _is_cyclic(self, a: int) -> bool:
        ra = self._rank(a)
        rest = a
        while rest:
            low = rest & -rest
            rest ^= low
            if self._rank(a ^ low) < ra:
                return False
        return True

    def _coloop_free_part(self, a: int) -> int:
        """Remove the coloops of M|a from a."""
        ra = self._rank(a)
        out = a
        rest = a
        while rest:
            low = rest & -rest
            rest ^= low
            if self._rank(a ^ low) < ra:
                out ^= low
        return out

    # -- public operations -----------------------------------------------
    def rank(self, a: Iterable[int] = ()) -> int:
        return self._rank(self._mask(a))

    def closure(self, a: Iterable[int]) -> frozenset[int]:
        return from_mask(self._closure(self._mask(a)))

    def is_flat(self, a: Iterable[int]) -> bool:
        m = self._mask(a)
        return self._closure(m) == m

    def is_cyclic(self, a: Iterable[int]) -> bool:
        """True iff the restriction to ``a`` has no coloops."""
        return self._is_cyclic(self._mask(a))

    def flats_of_rank(self, k: int) -> list[frozenset[int]]:
        if not 0 <= k <= self.r:
            raise MatroidError(f"rank {k} outside 0..{self.r}")
        return [from_mask(f) for f in self._flats(k)]

    def flats(self) -> list[tuple[frozenset[int], int]]:
        return [(from_mask(f), k) for k in range(self.r + 1) for f in self._flats(k)]

    def cyclic_flats(self) -> list[tuple[frozenset[int], int]]:
        """Recompute the cyclic flats from the rank oracle.

        Enumerates every flat, so it is meant for checking rather than for
        large matroids.
        """
        out = [(f, k) for k in range(self.r + 1) for f in self._flats(k) if self._is_cyclic(f)]
        out.sort(key=lambda e: set_key(e[0]))
        return [(from_mask(f), k) for f, k in out]

    def independent_hyperplane_count(self) -> int:
        if self.r == 0:
            return 0
        return sum(1 for h in self._flats(self.r - 1) if h.bit_count() == self.r - 1)

    def is_zflat(self, a: Iterable[int]) -> bool:
        m = self._mask(a)
        return any(z == m for z, _ in self.zmasks)

    def minor(self, x: Iterable[int], y: Iterable[int] = (), *, validate: bool = True) -> "Matroid":
        """The minor ``M|x/y`` for cyclic flats ``y ⊆ x``.

        Its cyclic flats are ``{F - y : F cyclic flat, y ⊆ F ⊆ x}``.  The
        ground set ``x - y`` is relabelled to ``0..|x-y|-1`` in increasing
        order; ``element_map`` records the original ids.
        """
        xm, ym = self._mask(x), self._mask(y)
        ranks = dict(self.zmasks)
        if xm not in ranks or ym not in ranks:
            raise MatroidError("minor endpoints must be cyclic flats")
        if ym & ~xm:
            raise MatroidError("minor needs y ⊆ x")
        keep = elements(xm & ~ym)
        index = {e: i for i, e in enumerate(keep)}
        ry = ranks[ym]
        fam = []
        for z, k in self.zmasks:
            if z & ym == ym and z & ~xm == 0:
                fam.append((frozenset(index[e] for e in elements(z & ~ym)), k - ry))
        if validate:
            from .zfl import matroid_from_cyclic_flats
            return matroid_from_cyclic_flats(len(keep), fam, element_map=keep)
        return Matroid(len(keep), fam, element_map=keep)

    def restriction(self, x: Iterable[int], *, validate: bool = True) -> "Matroid":
        return self.minor(x, (), validate=validate)

    def contraction(self, y: Iterable[int], *, validate: bool = True) -> "Matroid":
        return self.minor(range(self.n), y, validate=validate)

    def dual(self, *, validate: bool = True) -> "Matroid":
        E = full(self.n)
        fam = [(from_mask(E & ~z), (E & ~z).bit_count() + k - self.r) for z, k in self.zmasks]
        name = None
        if self.name:
            name = self.name[:-1] if self.name.endswith("*") else self.name + "*"
        if validate:
            from .zfl import matroid_from_cyclic_flats
            return matroid_from_cyclic_flats(self.n, fam, name=name, allow_loops_coloops=True)
        return Matroid(self.n, fam, name=name)

    def relabel(self, perm: Sequence[int]) -> "Matroid":
        """Rename element ``e`` to ``perm[e]``."""
        if sorted(perm) != list(range(self.n)):
            raise MatroidError("relabelling must be a permutation of the ground set")
        fam = [(frozenset(perm[e] for e in elements(z)), k) for z, k in self.zmasks]
        return Matroid(self.n, fam, name=self.name)


def uniform(k: int, n: int) -> Matroid:
    """U_{k,n}; for 0 < k < n its only cyclic flats are the empty set and E."""
    if not 0 <= k <= n:
        raise MatroidError("need 0 <= k <= n")
    if k == n:
        return Matroid(n, [(0, 0)], name=f"U{k},{n}")
    if k == 0:
        return Matroid(n, [(full(n), 0)], name=f"U{k},{n}")
    return Matroid(n, [(0, 0), (full(n), k)], name=f"U{k},{n}")


@dataclass(frozen=True)
class PavingSpec:
    """A paving matroid given by its rank and dependent hyperplanes."""

    n: int
    r: int
    dependent_hyperplanes: tuple[frozenset[int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "dependent_hyperplanes",
                           tuple(sorted((frozenset(h) for h in self.dependent_hyperplanes),
                                        key=lambda s: (len(s), sorted(s)))))


def check_paving_spec(spec: PavingSpec) -> None:
    if spec.r < 2:
        raise MatroidError("paving constructions need rank >= 2")
    hs = spec.dependent_hyperplanes
    for h in hs:
        if any(not 0 <= e < spec.n for e in h):
            raise MatroidError(f"hyperplane {sorted(h)} leaves the ground set")
        if len(h) < spec.r:
            raise MatroidError(f"dependent hyperplane {sorted(h)} has fewer than r={spec.r} elements")
    if len(set(hs)) != len(hs):
        raise MatroidError("dependent hyperplanes listed twice")
    for h1, h2 in combinations(hs, 2):
        if len(h1 & h2) > spec.r - 2:
            raise MatroidError(
                f"hyperplanes {sorted(h1)} and {sorted(h2)} share more than r-2={spec.r - 2} elements")


def matroid_from_paving(spec: PavingSpec, *, name: str | None = None) -> Matroid:
    """Build the paving matroid: cyclic flats are the empty set, each dependent
    hyperplane (rank r-1) and E (rank r)."""
    from .zfl import matroid_from_cyclic_flats

    check_paving_spec(spec)
    fam = [(frozenset(), 0)]
    fam += [(h, spec.r - 1) for h in spec.dependent_hyperplanes]
    fam.append((frozenset(range(spec.n)), spec.r))
    return matroid_from_cyclic_flats(spec.n, fam, name=name)


def count_subsets_by_rank(m: Matroid) -> dict[tuple[int, int], int]:
    """Brute-force histogram of (|A|, r(A)) over all 2^n subsets."""
    out: dict[tuple[int, int], int] = {}
    for a in range(1 << m.n):
        key = (a.bit_count(), m._rank(a))
        out[key] = out.get(key, 0) + 1
    return out


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
