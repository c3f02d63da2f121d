"""Finite lattices stored as an explicit order relation.

Elements are the indices ``0..size-1``; each lattice also carries a tuple of
hashable ``names`` used for display and for addressing elements from
construction code.  ``leq[i, j]`` is True iff element i is below element j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import numpy as np


class LatticeError(ValueError):
    """The relation is not a lattice, or an element is unknown."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation (Warshall)."""
    c = rel.copy()
    np.fill_diagonal(c, True)
    for k in range(c.shape[0]):
        c |= np.outer(c[:, k], c[k, :])
    return c


def _bound_tables(leq: np.ndarray):
    """Meet and join tables; -1 where the bound does not exist."""
    size = leq.shape[0]
    down = leq.sum(axis=0)  # down[m] = #{x : x <= m}
    up = leq.sum(axis=1)
    meet = np.full((size, size), -1, dtype=np.int64)
    join = np.full((size, size), -1, dtype=np.int64)
    for x in range(size):
        lower = leq[:, x][:, None] & leq  # lower[z, y]: z <= x and z <= y
        cnt = lower.sum(axis=0)
        # the meet is the lower bound whose down-set is the whole set of lower bounds
        hit = lower & (down[:, None] == cnt[None, :])
        has = hit.any(axis=0)
        meet[x, has] = hit.argmax(axis=0)[has]
        upper = leq[x, :][:, None] & leq.T  # upper[z, y]: x <= z and y <= z
        cnt = upper.sum(axis=0)
        hit = upper & (up[:, None] == cnt[None, :])
        has = hit.any(axis=0)
        join[x, has] = hit.argmax(axis=0)[has]
    return meet, join


class FiniteLattice:
    """A finite lattice given by its full order relation.

    The constructor checks partial-order axioms and existence of all meets
    and joins; a failure raises :class:`LatticeError` carrying a witness.
    """

    def __init__(self, names: Sequence[Hashable], leq: np.ndarray, *, check: bool = True):
        leq = np.asarray(leq, dtype=bool)
        names = tuple(names)
        if leq.shape != (len(names), len(names)):
            raise LatticeError("relation shape does not match the element list")
        if len(set(names)) != len(names):
            raise LatticeError("element names must be distinct")
        if len(names) == 0:
            raise LatticeError("a lattice has at least one element")
        self.names = names
        self.leq = leq
        self.leq.setflags(write=False)
        self._index = {nm: i for i, nm in enumerate(names)}
        self._covers = None
        self._heights = None
        if check:
            self._check_order()
        self.meet_table, self.join_table = _bound_tables(leq)
        if check:
            bad = np.argwhere(self.meet_table < 0)
            if len(bad):
                x, y = bad[0]
                raise LatticeError(f"{names[x]!r} and {names[y]!r} have no meet", (names[x], names[y], "meet"))
            bad = np.argwhere(self.join_table < 0)
            if len(bad):
                x, y = bad[0]
                raise LatticeError(f"{names[x]!r} and {names[y]!r} have no join", (names[x], names[y], "join"))
        self.meet_table.setflags(write=False)
        self.join_table.setflags(write=False)
        self.bottom = int(np.argmax(leq.all(axis=1)))
        self.top = int(np.argmax(leq.all(axis=0)))

    def _check_order(self):
        leq = self.leq
        if not leq.diagonal().all():
            raise LatticeError("relation is not reflexive")
        both = leq & leq.T
        np.fill_diagonal(both, False)
        if both.any():
            x, y = np.argwhere(both)[0]
            raise LatticeError(f"{self.names[x]!r} and {self.names[y]!r} violate antisymmetry",
                               (self.names[x], self.names[y]))
        comp = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        if (comp & ~leq).any():
            x, y = np.argwhere(comp & ~leq)[0]
            raise LatticeError(f"relation is not transitive at ({self.names[x]!r}, {self.names[y]!r})",
                               (self.names[x], self.names[y]))

    # -- constructors ----------------------------------------------------
    @classmethod
    def from_relation(cls, names: Sequence[Hashable], pairs: Iterable[tuple[Hashable, Hashable]]):
        """Lattice generated by ``x <= y`` for each pair (transitively closed)."""
        names = tuple(names)
        idx = {nm: i for i, nm in enumerate(names)}
        rel = np.zeros((len(names), len(names)), dtype=bool)
        for x, y in pairs:
            try:
                rel[idx[x], idx[y]] = True
            except KeyError as exc:
                raise LatticeError(f"unknown element {exc.args[0]!r}") from None
        return cls(names, transitive_closure(rel))

    from_covers = from_relation

    @classmethod
    def from_sets(cls, sets: Sequence[frozenset], names: Sequence[Hashable] | None = None):
        """Inclusion order on a family of sets."""
        sets = [frozenset(s) for s in sets]
        leq = np.array([[a <= b for b in sets] for a in sets], dtype=bool)
        return cls(names if names is not None else list(range(len(sets))), leq)

    @classmethod
    def chain(cls, length: int, names: Sequence[Hashable] | None = None):
        names = tuple(names) if names is not None else tuple(range(length))
        leq = np.triu(np.ones((length, length), dtype=bool))
        return cls(names, leq)

    # -- basic queries ---------------------------------------------------
    @property
    def size(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"<FiniteLattice size={self.size}>"

    def index(self, name: Hashable) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise LatticeError(f"unknown element {name!r}") from None

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.leq[x, y])

    def meet(self, x: int, y: int) -> int:
        return int(self.meet_table[x, y])

    def join(self, x: int, y: int) -> int:
        return int(self.join_table[x, y])

    @property
    def upper_covers(self) -> list[list[int]]:
        if self._covers is None:
            strict = self.leq.copy()
            np.fill_diagonal(strict, False)
            si = strict.astype(np.int64)
            cover = strict & ~((si @ si) > 0)
            self._covers = [list(map(int, np.flatnonzero(cover[x]))) for x in range(self.size)]
        return self._covers

    @property
    def lower_covers(self) -> list[list[int]]:
        ups = self.upper_covers
        downs = [[] for _ in range(self.size)]
        for x, ys in enumerate(ups):
            for y in ys:
                downs[y].append(x)
        return downs

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, ys in enumerate(self.upper_covers) for y in ys]

    @property
    def heights(self) -> list[int]:
        """Length of the longest chain from the bottom."""
        if self._heights is None:
            h = [0] * self.size
            for x in self.linear_extension():
                for y in self.upper_covers[x]:
                    h[y] = max(h[y], h[x] + 1)
            self._heights = h
        return self._heights

    def linear_extension(self) -> list[int]:
        down = self.leq.sum(axis=0)
        return sorted(range(self.size), key=lambda i: (int(down[i]), i))

    def interval(self, x: int, y: int) -> list[int]:
        return [int(z) for z in np.flatnonzero(self.leq[x, :] & self.leq[:, y])]

    def sublattice(self, elems: Sequence[int]) -> "FiniteLattice":
        elems = list(elems)
        return FiniteLattice([self.names[i] for i in elems], self.leq[np.ix_(elems, elems)])

    def order_dual(self) -> "FiniteLattice":
        return FiniteLattice(self.names, self.leq.T.copy(), check=False)

    def open_elements(self) -> list[int]:
        return [i for i in range(self.size) if i not in (self.bottom, self.top)]

    # -- chains ----------------------------------------------------------
    def chains(self, open_only: bool = True) -> list[tuple[int, ...]]:
        """All nonempty chains (strictly increasing tuples), canonically ordered."""
        pool = self.open_elements() if open_only else list(range(self.size))
        order = sorted(pool, key=self.linear_extension().index)
        out: list[tuple[int, ...]] = []

        def extend(chain, start):
            out.append(chain)
            last = chain[-1]
            for j in range(start, len(order)):
                y = order[j]
                if self.lt(last, y):
                    extend(chain + (y,), j + 1)

        for i, x in enumerate(order):
            extend((x,), i + 1)
        out.sort(key=lambda c: (len(c), c))
        return out

    def count_chains(self, open_only: bool = True) -> int:
        """Number of nonempty chains by dynamic programming over the order.

        ``ending[x]`` counts chains whose maximum is x:
        one for ``(x,)`` plus every chain ending strictly below x.
        """
        pool = set(self.open_elements() if open_only else range(self.size))
        ending = {}
        for x in self.linear_extension():
            if x not in pool:
                continue
            ending[x] = 1 + sum(c for y, c in ending.items() if self.lt(y, x))
        return sum(ending.values())


@dataclass(frozen=True)
class LabeledLattice:
    """A lattice with a size label and a rank label on each element.

    The configuration of a matroid is one of these.
    """

    lattice: FiniteLattice
    sizes: tuple[int, ...]
    ranks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        if len(self.sizes) != self.lattice.size or len(self.ranks) != self.lattice.size:
            raise LatticeError("one size and one rank label per element")

    def labels(self) -> list[tuple[int, int]]:
        return list(zip(self.sizes, self.ranks))

    def check_monotone(self) -> None:
        leq = self.lattice.leq
        for x in range(self.lattice.size):
            for y in range(self.lattice.size):
                if x != y and leq[x, y]:
                    if not (self.sizes[x] < self.sizes[y] and self.ranks[x] <= self.ranks[y]):
                        raise LatticeError("labels are not order-monotone",
                                           (self.lattice.names[x], self.lattice.names[y]))

    def relabeled(self, perm: Sequence[int]) -> "LabeledLattice":
        """Same labeled lattice with element i moved to position perm[i]."""
        size = self.lattice.size
        inv = [0] * size
        for i, p in enumerate(perm):
            inv[p] = i
        leq = self.lattice.leq[np.ix_(inv, inv)]
        names = [self.lattice.names[inv[p]] for p in range(size)]
        return LabeledLattice(FiniteLattice(names, leq),
                              [self.sizes[inv[p]] for p in range(size)],
                              [self.ranks[inv[p]] for p in range(size)])


# -- isomorphism -------------------------------------------------------------

def _refine(lats, colors):
    """Colour refinement on the cover graphs of several lattices at once.

    Colours are shared integers so histograms can be compared across
    lattices.  Returns the stable colourings, or None as soon as the colour
    histograms disagree.
    """
    while True:
        sigs = []
        for lat, col in zip(lats, colors):
            ups, downs = lat.upper_covers, lat.lower_covers
            sigs.append([(col[x], tuple(sorted(col[y] for y in ups[x])), tuple(sorted(col[y] for y in downs[x])))
                         for x in range(lat.size)])
        palette = {s: i for i, s in enumerate(sorted(set(s for sig in sigs for s in sig)))}
        new = [[palette[s] for s in sig] for sig in sigs]
        hists = [sorted(c) for c in new]
        if any(h != hists[0] for h in hists[1:]):
            return None
        if len(palette) == len(set(c for col in colors for c in col)):
            return new
        colors = new


def find_isomorphism(c1: LabeledLattice | FiniteLattice, c2: LabeledLattice | FiniteLattice):
    """Return a label-preserving lattice isomorphism as a list ``phi`` with
    ``phi[x1] = x2``, or None if there is none.

    Individualise-and-refine backtracking over cover-graph colourings.
    Plain :class:`FiniteLattice` arguments are compared without labels.
    """
    def unpack(c):
        if isinstance(c, LabeledLattice):
            return c.lattice, list(zip(c.sizes, c.ranks))
        return c, [(0, 0)] * c.size

    l1, lab1 = unpack(c1)
    l2, lab2 = unpack(c2)
    if l1.size != l2.size:
        return None
    if sorted(lab1) != sorted(lab2):
        return None
    h1, h2 = l1.heights, l2.heights
    init = sorted(set((lab1[x], h1[x]) for x in range(l1.size)) | set((lab2[x], h2[x]) for x in range(l2.size)))
    code = {v: i for i, v in enumerate(init)}
    start = ([code[(lab1[x], h1[x])] for x in range(l1.size)],
             [code[(lab2[x], h2[x])] for x in range(l2.size)])
    colors = _refine((l1, l2), start)
    if colors is None:
        return None

    def search(col1, col2):
        classes: dict[int, list[int]] = {}
        for x, c in enumerate(col1):
            classes.setdefault(c, []).append(x)
        open_classes = [xs for xs in classes.values() if len(xs) > 1]
        if not open_classes:
            inv = {c: y for y, c in enumerate(col2)}
            phi = [inv[c] for c in col1]
            if np.array_equal(l1.leq, l2.leq[np.ix_(phi, phi)]):
                return phi
            return None
        xs = min(open_classes, key=lambda xs: (len(xs), col1[xs[0]]))
        x = xs[0]
        fresh = max(max(col1), max(col2)) + 1
        for y in (y for y, c in enumerate(col2) if c == col1[x]):
            a = list(col1)
            b = list(col2)
            a[x] = fresh
            b[y] = fresh
            refined = _refine((l1, l2), (a, b))
            if refined is None:
                continue
            phi = search(*refined)
            if phi is not None:
                return phi
        return None

    return search(*colors)


def labeled_isomorphic(c1: LabeledLattice | FiniteLattice, c2: LabeledLattice | FiniteLattice) -> bool:
    return find_isomorphism(c1, c2) is not None


# -- gluing ------------------------------------------------------------------

def glue_transitive_closure(base: FiniteLattice,
                            inserts: Sequence[tuple[FiniteLattice, Hashable, Hashable]]) -> FiniteLattice:
    """Insert each lattice ``L_i`` into ``base`` with its bottom identified
    with a chosen element and its top with another (normally the top of
    ``base``); the result is the transitive closure of the union.

    Interior element names of the inserted lattices must be disjoint from
    each other and from ``base``.  The result is checked to be a lattice.
    """
    names = list(base.names)
    pairs = [(base.names[x], base.names[y]) for x, y in base.cover_pairs()]
    for lat, lo, hi in inserts:
        base.index(lo)
        base.index(hi)
        rename = {}
        for i, nm in enumerate(lat.names):
            if i == lat.bottom:
                rename[i] = lo
            elif i == lat.top:
                rename[i] = hi
            else:
                if nm in names:
                    raise LatticeError(f"inserted element {nm!r} clashes with an existing element")
                names.append(nm)
                rename[i] = nm
        pairs += [(rename[x], rename[y]) for x, y in lat.cover_pairs()]
    try:
        return FiniteLattice.from_relation(names, pairs)
    except LatticeError as exc:
        raise LatticeError(f"glued relation is not a lattice: {exc}", exc.witness) from None
