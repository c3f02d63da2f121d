"""Axioms (Z0)-(Z3) for ranked families of cyclic flats.

A family ``Z`` of subsets of ``E`` with ranks ``r`` is the family of cyclic
flats of a matroid exactly when

* (Z0) ``(Z, ⊆)`` is a lattice,
* (Z1) the least set has rank 0,
* (Z2) ``0 < r(Y) - r(X) < |Y - X|`` whenever ``X ⊊ Y``,
* (Z3) ``r(X ∨ Y) + r(X ∧ Y) + |(X ∩ Y) - (X ∧ Y)| <= r(X) + r(Y)``.

Join and meet are taken inside the family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._bits import from_mask, full, set_key, to_mask
from .core import Matroid, MatroidError
from .lattice import FiniteLattice, LabeledLattice, _bound_tables


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: str | None = None
    witness: tuple = ()
    message: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "pass"
        return f"{self.axiom} violated: {self.message}"


class ZAxiomError(MatroidError):
    def __init__(self, report: ValidationReport):
        super().__init__(str(report))
        self.report = report


@dataclass(frozen=True)
class RankedFamily:
    """Candidate cyclic flats with ranks on the ground set ``0..n-1``."""

    n: int
    entries: tuple[tuple[frozenset[int], int], ...] = field(default=())

    def __post_init__(self):
        ents = tuple((frozenset(s), int(k)) for s, k in self.entries)
        object.__setattr__(self, "entries", ents)

    def validate(self) -> ValidationReport:
        return validate_Z_axioms(self.n, self.entries)

    def to_matroid(self, **kw) -> Matroid:
        return matroid_from_cyclic_flats(self.n, self.entries, **kw)

    def canonical(self) -> "RankedFamily":
        ents = sorted(self.entries, key=lambda e: (len(e[0]), sorted(e[0])))
        return RankedFamily(self.n, tuple(ents))


def _fmt(mask: int) -> str:
    return "{" + ",".join(str(e) for e in sorted(from_mask(mask))) + "}"


def validate_Z_axioms(n: int, entries: Iterable[tuple[Iterable[int], int]]) -> ValidationReport:
    """Check (Z0)-(Z3); the report names the first violated axiom and its witnesses."""
    masks, ranks = [], []
    for s, k in entries:
        try:
            masks.append(to_mask(s, n))
        except ValueError as exc:
            return ValidationReport(False, "input", (tuple(sorted(s)),), str(exc))
        ranks.append(int(k))
    if not masks:
        return ValidationReport(False, "Z0", (), "the empty family is not a lattice")
    if len(set(masks)) != len(masks):
        dup = next(m for m in masks if masks.count(m) > 1)
        return ValidationReport(False, "input", (from_mask(dup),), f"set {_fmt(dup)} listed twice")
    order = sorted(range(len(masks)), key=lambda i: set_key(masks[i]))
    masks = [masks[i] for i in order]
    ranks = [ranks[i] for i in order]
    size = len(masks)

    leq = np.array([[a & ~b == 0 for b in masks] for a in masks], dtype=bool)
    meet, join = _bound_tables(leq)
    # (Z0)
    for x in range(size):
        for y in range(x + 1, size):
            if meet[x, y] < 0 or join[x, y] < 0:
                which = "meet" if meet[x, y] < 0 else "join"
                return ValidationReport(
                    False, "Z0", (from_mask(masks[x]), from_mask(masks[y])),
                    f"{_fmt(masks[x])} and {_fmt(masks[y])} have no {which} in the family")
    # (Z1); after sorting, a lattice's least set comes first
    if ranks[0] != 0:
        return ValidationReport(False, "Z1", (from_mask(masks[0]), ranks[0]),
                                f"least set {_fmt(masks[0])} has rank {ranks[0]}, not 0")
    # (Z2)
    for x in range(size):
        for y in range(size):
            if x != y and leq[x, y]:
                dr = ranks[y] - ranks[x]
                ds = (masks[y] & ~masks[x]).bit_count()
                if not 0 < dr < ds:
                    return ValidationReport(
                        False, "Z2", (from_mask(masks[x]), from_mask(masks[y]), ranks[x], ranks[y]),
                        f"{_fmt(masks[x])} ⊂ {_fmt(masks[y])} needs 0 < {ranks[y]} - {ranks[x]} < {ds}")
    # (Z3)
    for x in range(size):
        for y in range(x + 1, size):
            j, m = join[x, y], meet[x, y]
            extra = (masks[x] & masks[y] & ~masks[m]).bit_count()
            lhs = ranks[j] + ranks[m] + extra
            rhs = ranks[x] + ranks[y]
            if lhs > rhs:
                return ValidationReport(
                    False, "Z3",
                    (from_mask(masks[x]), from_mask(masks[y]), from_mask(masks[j]), from_mask(masks[m]), lhs, rhs),
                    f"{_fmt(masks[x])}, {_fmt(masks[y])}: r(join)+r(meet)+|∩ - meet| = {lhs} > {rhs}")
    return ValidationReport(True)


def matroid_from_cyclic_flats(n: int, entries: Iterable[tuple[Iterable[int], int]], *,
                              name: str | None = None,
                              element_map: Sequence[int] | None = None,
                              allow_loops_coloops: bool = False) -> Matroid:
    """Validated construction: the result's cyclic flats are exactly ``entries``.

    Raises :class:`ZAxiomError` with the report when an axiom fails, and
    :class:`MatroidError` when the family describes loops (least set
    nonempty) or coloops (greatest set not E) unless explicitly allowed.
    """
    entries = [(frozenset(s), int(k)) for s, k in entries]
    report = validate_Z_axioms(n, entries)
    if not report.ok:
        raise ZAxiomError(report)
    m = Matroid(n, entries, name=name, element_map=element_map)
    if not allow_loops_coloops:
        if m.zmasks[0][0] != 0:
            raise MatroidError(f"least cyclic flat {_fmt(m.zmasks[0][0])} is nonempty: the matroid has loops")
        if m.zmasks[-1][0] != full(n):
            raise MatroidError("greatest cyclic flat is not E: the matroid has coloops")
    return m


def configuration_of(m: Matroid) -> LabeledLattice:
    """The abstract lattice of cyclic flats labelled by (size, rank).

    Element names are the cyclic flats themselves (as frozensets), which
    is convenient for inspection; isomorphism tests ignore names.
    """
    if not m.is_loopless_coloopless():
        raise MatroidError("configurations are defined for matroids without loops and coloops")
    sets = [from_mask(z) for z, _ in m.zmasks]
    lat = FiniteLattice.from_sets(sets, names=sets)
    return LabeledLattice(lat, [len(s) for s in sets], [k for _, k in m.zmasks])
