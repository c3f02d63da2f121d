"""Constructions of matroids with equal G-invariants and different configurations.

* :func:`parallel_extension` -- add t parallel copies of every element.
* Lattice extensions -- insert lattices above chosen atoms in two ways
  (``s`` and ``t``) and realise both labelled lattices as matroids.
* Paving pairs -- blow up the lattices of flats of two paving matroids
  whose hyperplanes are matched by partitions and bijections.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Mapping, Sequence

import numpy as np

from ._bits import elements, from_mask, full, set_key
from .core import Matroid, MatroidError, PavingSpec, check_paving_spec, matroid_from_paving
from .lattice import FiniteLattice, LabeledLattice, LatticeError, glue_transitive_closure, labeled_isomorphic
from .zfl import RankedFamily, ZAxiomError, configuration_of, matroid_from_cyclic_flats, validate_Z_axioms


class ConstructionError(MatroidError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def parallel_extension(m: Matroid, t: int) -> Matroid:
    """Add t new elements parallel to each element e.

    The copies of e are ``e + n*j`` for ``j = 1..t``.  Every flat of the
    result is cyclic, so its cyclic flats are the blown-up flats of m.
    """
    if t < 1:
        raise MatroidError("t must be a positive integer")
    if m.loops:
        raise MatroidError("parallel extension needs a loopless matroid")
    n = m.n

    def blow(f):
        return frozenset(e + n * j for e in elements(f) for j in range(t + 1))

    fam = [(blow(f), k) for k in range(m.r + 1) for f in m._flats(k)]
    name = f"{m.name}_{t}" if m.name else None
    return matroid_from_cyclic_flats(n * (t + 1), fam, name=name)


# -- realising labelled lattices ----------------------------------------------

def block_realization(lattice: FiniteLattice, sizes: Mapping[Hashable, int], ranks: Mapping[Hashable, int],
                      *, name: str | None = None) -> tuple[Matroid, dict]:
    """Realise a labelled lattice as a matroid whose cyclic flats carry the labels.

    Elements are processed bottom-up.  Each element's set is the union of
    the sets below it plus a private block of fresh ground-set elements
    making up the requested size.  The resulting family must be an
    order-isomorphic copy of the lattice and pass (Z0)-(Z3).

    Returns the matroid and the map ``lattice name -> frozenset``.
    """
    names = lattice.names
    sets: dict[int, int] = {}
    nxt = 0
    for x in lattice.linear_extension():
        below = 0
        for y in range(lattice.size):
            if y != x and lattice.leq[y, x]:
                below |= sets[y]
        want = sizes[names[x]]
        extra = want - below.bit_count()
        if extra < 0:
            raise ConstructionError(
                f"element {names[x]!r} needs size {want} but already contains {below.bit_count()} elements",
                names[x])
        block = ((1 << extra) - 1) << nxt
        nxt += extra
        sets[x] = below | block
    n = nxt
    if sets[lattice.top] != full(n):
        raise ConstructionError("top element does not receive the whole ground set")
    for x in range(lattice.size):
        for y in range(lattice.size):
            if bool(lattice.leq[x, y]) != (sets[x] & ~sets[y] == 0):
                raise ConstructionError(
                    f"realised sets of {names[x]!r} and {names[y]!r} do not follow the lattice order",
                    (names[x], names[y]))
    fam = [(from_mask(sets[x]), ranks[names[x]]) for x in range(lattice.size)]
    m = matroid_from_cyclic_flats(n, fam, name=name)
    return m, {names[x]: from_mask(sets[x]) for x in range(lattice.size)}


# -- lattice extensions -------------------------------------------------------

@dataclass(frozen=True)
class LatticeExtensionSpec:
    """Data for the two extensions L_s and L_t of a base lattice.

    ``atoms`` are the names of a_1..a_m; ``b`` is their common pairwise
    meet.  ``taus[i]`` (for ``i`` in ``0..m-2``) is a dict giving the
    isomorphism from the interval [0, a_m] onto [0, a_{i+1}] by names.
    ``inserts`` are lattices whose interior names are fresh; ``s`` and
    ``t`` give, for each insert, the index (0-based) of the atom it sits on.
    """

    base: FiniteLattice
    atoms: tuple
    b: Hashable
    taus: tuple = ()
    inserts: tuple = ()
    s: tuple = ()
    t: tuple = ()

    def __post_init__(self):
        for fld in ("atoms", "taus", "inserts", "s", "t"):
            object.__setattr__(self, fld, tuple(getattr(self, fld)))


def validate_extension_spec(spec: LatticeExtensionSpec) -> None:
    L = spec.base
    m = len(spec.atoms)
    if m < 1:
        raise ConstructionError("need at least one atom a_i")
    idx = [L.index(a) for a in spec.atoms]
    if len(set(idx)) != m:
        raise ConstructionError("the elements a_i must be distinct")
    b = L.index(spec.b)
    for i, j in combinations(range(m), 2):
        if L.meet(idx[i], idx[j]) != b:
            raise ConstructionError(
                f"{spec.atoms[i]!r} ∧ {spec.atoms[j]!r} = {L.names[L.meet(idx[i], idx[j])]!r}, not {spec.b!r}",
                (spec.atoms[i], spec.atoms[j]))
    if len(spec.taus) != m - 1:
        raise ConstructionError(f"need {m - 1} isomorphisms τ_(m,i), got {len(spec.taus)}")
    dom = L.interval(L.bottom, idx[-1])
    fixed = set(L.interval(L.bottom, b))
    for i, tau in enumerate(spec.taus):
        cod = L.interval(L.bottom, idx[i])
        try:
            img = {L.index(k): L.index(v) for k, v in tau.items()}
        except LatticeError as exc:
            raise ConstructionError(str(exc)) from None
        if sorted(img) != sorted(dom) or sorted(img.values()) != sorted(cod):
            raise ConstructionError(f"τ_(m,{i + 1}) is not a bijection [0, a_m] -> [0, a_{i + 1}]", i)
        for x in dom:
            for y in dom:
                if L.le(x, y) != L.le(img[x], img[y]):
                    raise ConstructionError(f"τ_(m,{i + 1}) does not preserve order at ({L.names[x]!r}, {L.names[y]!r})",
                                            (L.names[x], L.names[y]))
        for y in fixed:
            if img[y] != y:
                raise ConstructionError(f"τ_(m,{i + 1}) moves {L.names[y]!r} in [0, b]", L.names[y])
    n = len(spec.inserts)
    if len(spec.s) != n or len(spec.t) != n:
        raise ConstructionError("s and t need one value per inserted lattice")
    for v in spec.s + spec.t:
        if not 0 <= v < m:
            raise ConstructionError(f"assignment value {v} outside 0..{m - 1}")


def build_lattice_extension(spec: LatticeExtensionSpec) -> tuple[FiniteLattice, FiniteLattice]:
    """Glue every insert into [a_s(i), top] (resp. [a_t(i), top])."""
    validate_extension_spec(spec)
    top = spec.base.names[spec.base.top]

    def glue(assign):
        return glue_transitive_closure(spec.base, [(L, spec.atoms[a], top) for L, a in zip(spec.inserts, assign)])

    Ls, Lt = glue(spec.s), glue(spec.t)
    # both share the same element names; order L_t like L_s
    order = [Lt.index(nm) for nm in Ls.names]
    Lt = FiniteLattice(Ls.names, Lt.leq[np.ix_(order, order)])
    return Ls, Lt


def check_extension_labels(spec: LatticeExtensionSpec, sizes: Mapping, ranks: Mapping) -> None:
    """Condition (2): labels on [0, a_m] are carried along by every τ."""
    L = spec.base
    am = L.index(spec.atoms[-1])
    for i, tau in enumerate(spec.taus):
        for y in L.interval(L.bottom, am):
            nm = L.names[y]
            img = tau[nm]
            if sizes[nm] != sizes[img] or ranks[nm] != ranks[img]:
                raise ConstructionError(
                    f"labels of {nm!r} and τ_(m,{i + 1})({nm!r}) = {img!r} differ", (nm, img))


def realize_extension_pair(spec: LatticeExtensionSpec, sizes: Mapping, ranks: Mapping) -> tuple[Matroid, Matroid]:
    """Matroids M_s, M_t with configurations (L_s, sizes, ranks) and (L_t, sizes, ranks)."""
    Ls, Lt = build_lattice_extension(spec)
    missing = [nm for nm in Ls.names if nm not in sizes or nm not in ranks]
    if missing:
        raise ConstructionError(f"no size/rank label for {missing[0]!r}", missing[0])
    check_extension_labels(spec, sizes, ranks)
    ms, _ = block_realization(Ls, sizes, ranks, name="M_s")
    mt, _ = block_realization(Lt, sizes, ranks, name="M_t")
    return ms, mt


def fig3_spec() -> tuple[LatticeExtensionSpec, dict, dict]:
    """The five-element lattice with two inserted 3-chains whose
    extensions are the lattices of cyclic flats of the two rank-3 running
    examples, with their size/rank labels."""
    base = FiniteLattice.from_relation(
        ["0", "a1", "a2", "c", "1"], [("0", "a1"), ("0", "a2"), ("a1", "c"), ("a2", "c"), ("c", "1")])
    ins = [FiniteLattice.chain(3, ("x0", "x", "x1")), FiniteLattice.chain(3, ("y0", "y", "y1"))]
    spec = LatticeExtensionSpec(base, ("a1", "a2"), "0", ({"0": "0", "a2": "a1"},), ins, (0, 0), (0, 1))
    sizes = {"0": 0, "a1": 2, "a2": 2, "c": 4, "x": 4, "y": 4, "1": 8}
    ranks = {"0": 0, "a1": 1, "a2": 1, "c": 2, "x": 2, "y": 2, "1": 3}
    return spec, sizes, ranks


def line_extension_spec(m: int, s: Sequence[int], t: Sequence[int]) -> LatticeExtensionSpec:
    """Base lattice = flats of an m-point line; inserts are 3-chains (one per plane).

    Atom names are ``"A1".."Am"``, inserted planes ``"P1".."Pn"``.
    """
    atoms = tuple(f"A{i + 1}" for i in range(m))
    base = FiniteLattice.from_relation(["0", *atoms, "1"], [("0", a) for a in atoms] + [(a, "1") for a in atoms])
    taus = tuple({"0": "0", atoms[-1]: atoms[i]} for i in range(m - 1))
    ins = tuple(FiniteLattice.chain(3, (f"P{j + 1}_0", f"P{j + 1}", f"P{j + 1}_1")) for j in range(len(s)))
    return LatticeExtensionSpec(base, atoms, "0", taus, ins, tuple(s), tuple(t))


def line_extension_labels(m: int, plane_sizes: Sequence[int]) -> tuple[dict, dict]:
    """Three-point lines of rank 2, planes of rank 3 with the given sizes, E of rank 4."""
    sizes = {"0": 0}
    ranks = {"0": 0}
    for i in range(m):
        sizes[f"A{i + 1}"] = 3
        ranks[f"A{i + 1}"] = 2
    for j, sz in enumerate(plane_sizes):
        sizes[f"P{j + 1}"] = sz
        ranks[f"P{j + 1}"] = 3
    sizes["1"] = 3 * m + sum(sz - 3 for sz in plane_sizes)
    ranks["1"] = 4
    return sizes, ranks


def example1_family(m: int, assignment: Sequence[int], plane_sizes: Sequence[int]) -> Matroid:
    """Rank-4 matroid with m three-point lines (pairwise spanning) and one
    cyclic plane per entry of ``plane_sizes``; plane j contains the line
    ``assignment[j]`` (0-based) and nothing else cyclic.
    """
    if len(assignment) != len(plane_sizes):
        raise ConstructionError("one line index per plane")
    if any(sz < 5 for sz in plane_sizes):
        raise ConstructionError("plane sizes must be at least 5")
    if len(set(plane_sizes)) != len(plane_sizes):
        raise ConstructionError("plane sizes must be distinct")
    spec = line_extension_spec(m, assignment, assignment)
    Ls, _ = build_lattice_extension(spec)
    sizes, ranks = line_extension_labels(m, plane_sizes)
    label = ",".join(str(a + 1) for a in assignment)
    mat, _ = block_realization(Ls, sizes, ranks, name=f"example1[m={m};assign={label}]")
    return mat


# -- paving pairs -------------------------------------------------------------

def parse_cycles(text: str, names: Sequence[str]) -> tuple[int, ...]:
    """Permutation of ``range(len(names))`` from cycle notation like ``(e,p)(f,q)``."""
    idx = {nm: i for i, nm in enumerate(names)}
    perm = list(range(len(names)))
    text = text.strip()
    if text in ("", "()", "id"):
        return tuple(perm)
    if not re.fullmatch(r"(\([^()]+\))+", text.replace(" ", "")):
        raise ConstructionError(f"cannot parse cycle notation {text!r}")
    for cyc in re.findall(r"\(([^()]+)\)", text):
        items = [c.strip() for c in cyc.split(",")]
        try:
            ids = [idx[c] for c in items]
        except KeyError as exc:
            raise ConstructionError(f"unknown element {exc.args[0]!r} in cycle notation") from None
        for a, b in zip(ids, ids[1:] + ids[:1]):
            perm[a] = b
    if sorted(perm) != list(range(len(names))):
        raise ConstructionError(f"{text!r} is not a permutation")
    return tuple(perm)


def format_cycles(perm: Sequence[int], names: Sequence[str]) -> str:
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(names[x])
            x = perm[x]
        out.append("(" + ",".join(cyc) + ")")
    return "".join(out) or "()"


@dataclass(frozen=True)
class PavingPairSpec:
    """Two paving matroids on a shared set with matched hyperplane blocks.

    ``A[j]`` and ``B[j]`` are sets of hyperplanes (frozensets of element
    ids); ``alphas[j]`` is a permutation tuple with ``alphas[j][e]`` the
    image of e.  ``block_sizes[e]`` is how many ground-set elements of the
    realisation stand for e.  ``rank_labels1`` / ``rank_labels2`` map flats
    of N1 / N2 to ranks; missing labels default to the rank in N1 (for
    ``rank_labels1``) or are carried over from N1 through common flats and
    the bijections (for ``rank_labels2``).
    """

    N1: PavingSpec
    N2: PavingSpec
    A: tuple = ()
    B: tuple = ()
    alphas: tuple = ()
    block_sizes: tuple = ()
    names: tuple = ()
    rank_labels1: Mapping | None = None
    rank_labels2: Mapping | None = None

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(frozenset(frozenset(h) for h in blk) for blk in self.A))
        object.__setattr__(self, "B", tuple(frozenset(frozenset(h) for h in blk) for blk in self.B))
        object.__setattr__(self, "alphas", tuple(tuple(a) for a in self.alphas))
        n = self.N1.n
        if not self.block_sizes:
            object.__setattr__(self, "block_sizes", (1,) * n)
        else:
            object.__setattr__(self, "block_sizes", tuple(self.block_sizes))
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(n)))
        else:
            object.__setattr__(self, "names", tuple(self.names))

    def with_alpha(self, j: int, perm: Sequence[int]) -> "PavingPairSpec":
        alphas = list(self.alphas)
        alphas[j] = tuple(perm)
        return PavingPairSpec(self.N1, self.N2, self.A, self.B, tuple(alphas), self.block_sizes, self.names,
                              self.rank_labels1, self.rank_labels2)

    def fmt(self, s) -> str:
        return "{" + ",".join(self.names[e] for e in sorted(s)) + "}"


@dataclass
class HypothesisReport:
    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    @property
    def witness(self):
        return self.failures[0][1] if self.failures else None

    def __str__(self):
        if self.ok:
            return "pass"
        return "; ".join(msg for msg, _ in self.failures[:5])


def _apply(perm, s):
    return frozenset(perm[e] for e in s)


def _flats_with_rank(N: Matroid) -> dict[frozenset, int]:
    return {f: k for f, k in N.flats()}


def _labels(spec: PavingPairSpec, L1: dict, L2: dict):
    """Sizes and ranks on the flats of N1 and N2 as required by the realisation."""
    def size(f):
        return sum(spec.block_sizes[e] for e in f)

    r1 = {f: (spec.rank_labels1 or {}).get(f, k) for f, k in L1.items()}
    if spec.rank_labels2 is not None:
        r2 = {f: spec.rank_labels2.get(f, L2[f]) for f in L2}
    else:
        r2 = {}
        for f in L2:
            if f in L1:
                r2[f] = r1[f]
            else:
                for blk_a, blk_b, alpha in zip(spec.A, spec.B, spec.alphas):
                    if f in blk_b:
                        inv = [0] * len(alpha)
                        for e, v in enumerate(alpha):
                            inv[v] = e
                        pre = _apply(inv, f)
                        if pre in r1:
                            r2[f] = r1[pre]
                        break
                r2.setdefault(f, L2[f])
    return size, r1, r2


def verify_paving_hypotheses(spec: PavingPairSpec, *, check_nonisomorphic: bool = True,
                             stop_at_first: bool = False) -> HypothesisReport:
    """Check the partition/bijection data and the size/rank conditions that
    make the two realisations share a G-invariant."""
    fails: list = []

    def fail(msg, wit):
        fails.append((msg, wit))
        return stop_at_first

    N1s, N2s = spec.N1, spec.N2
    try:
        check_paving_spec(N1s)
        check_paving_spec(N2s)
    except MatroidError as exc:
        return HypothesisReport(False, [(str(exc), None)])
    if N1s.n != N2s.n or N1s.r != N2s.r:
        return HypothesisReport(False, [("N1 and N2 need the same ground set and rank", None)])
    r = N1s.r
    N1, N2 = matroid_from_paving(N1s), matroid_from_paving(N2s)
    L1, L2 = _flats_with_rank(N1), _flats_with_rank(N2)
    H1 = {f for f, k in L1.items() if k == r - 1}
    H2 = {f for f, k in L2.items() if k == r - 1}

    if check_nonisomorphic:
        c1 = _flat_lattice(N1)
        c2 = _flat_lattice(N2)
        if labeled_isomorphic(c1, c2):
            if fail("N1 and N2 are isomorphic", None):
                return HypothesisReport(False, fails)

    p = len(spec.alphas)
    if len(spec.A) != p or len(spec.B) != p:
        return HypothesisReport(False, fails + [("need the same number of A blocks, B blocks and bijections", None)])
    for j, alpha in enumerate(spec.alphas):
        if sorted(alpha) != list(range(N1s.n)):
            return HypothesisReport(False, fails + [(f"α_{j + 1} is not a bijection of E", j)])

    for side, blocks, target in (("A", spec.A, H1 - H2), ("B", spec.B, H2 - H1)):
        union = set()
        for j, blk in enumerate(blocks):
            if union & blk:
                x = next(iter(union & blk))
                if fail(f"{side} blocks overlap at {spec.fmt(x)}", x):
                    return HypothesisReport(False, fails)
            union |= blk
        for x in sorted(union - target, key=lambda s: (len(s), sorted(s))):
            if fail(f"{spec.fmt(x)} in an {side} block is not in H{1 if side == 'A' else 2} - H{2 if side == 'A' else 1}", x):
                return HypothesisReport(False, fails)
        for x in sorted(target - union, key=lambda s: (len(s), sorted(s))):
            if fail(f"hyperplane {spec.fmt(x)} is not covered by the {side} blocks", x):
                return HypothesisReport(False, fails)

    for j, (blk_a, blk_b, alpha) in enumerate(zip(spec.A, spec.B, spec.alphas)):
        for X in sorted(blk_a, key=lambda s: (-len(s), sorted(s))):
            if _apply(alpha, X) not in blk_b:
                if fail(f"α_{j + 1}({spec.fmt(X)}) = {spec.fmt(_apply(alpha, X))} is not in B_{j + 1}", X):
                    return HypothesisReport(False, fails)
        image = {_apply(alpha, X) for X in blk_a}
        for Y in sorted(blk_b - image, key=lambda s: (len(s), sorted(s))):
            if fail(f"{spec.fmt(Y)} in B_{j + 1} is not the image of a set in A_{j + 1}", Y):
                return HypothesisReport(False, fails)

    size, r1, r2 = _labels(spec, L1, L2)
    for X in sorted(set(L1) & set(L2), key=lambda s: (len(s), sorted(s))):
        if r1[X] != r2[X]:
            if fail(f"common flat {spec.fmt(X)} has ranks {r1[X]} and {r2[X]}", X):
                return HypothesisReport(False, fails)
    for j, (blk_a, alpha) in enumerate(zip(spec.A, spec.alphas)):
        for Y in sorted(blk_a, key=lambda s: (len(s), sorted(s))):
            aY = _apply(alpha, Y)
            if aY not in L2:
                continue
            if size(Y) != size(aY) or r1[Y] != r2[aY]:
                if fail(f"labels of {spec.fmt(Y)} in M1 and α_{j + 1} image in M2 differ", Y):
                    return HypothesisReport(False, fails)
            for k in range(r - 1):
                for X in combinations(sorted(Y), k):
                    X = frozenset(X)
                    aX = _apply(alpha, X)
                    if size(X) != size(aX) or r1.get(X) != r1.get(aX):
                        if fail(f"labels of {spec.fmt(X)} and α_{j + 1}({spec.fmt(X)}) differ in M1", X):
                            return HypothesisReport(False, fails)
    return HypothesisReport(not fails, fails)


def _flat_lattice(N: Matroid) -> LabeledLattice:
    fl = [f for f, _ in N.flats()]
    lat = FiniteLattice.from_sets(fl)
    return LabeledLattice(lat, [len(f) for f in fl], [N.rank(f) for f in fl])


def paving_families(spec: PavingPairSpec) -> tuple[RankedFamily, RankedFamily]:
    """The two ranked families obtained by blowing every element up to its block."""
    N1, N2 = matroid_from_paving(spec.N1), matroid_from_paving(spec.N2)
    L1, L2 = _flats_with_rank(N1), _flats_with_rank(N2)
    size, r1, r2 = _labels(spec, L1, L2)
    offsets, acc = [], 0
    for b in spec.block_sizes:
        if b < 1:
            raise ConstructionError("block sizes must be positive")
        offsets.append(acc)
        acc += b

    def blow(f):
        return frozenset(offsets[e] + i for e in f for i in range(spec.block_sizes[e]))

    fam1 = RankedFamily(acc, tuple((blow(f), r1[f]) for f in L1))
    fam2 = RankedFamily(acc, tuple((blow(f), r2[f]) for f in L2))
    return fam1.canonical(), fam2.canonical()


def realize_paving_pair(spec: PavingPairSpec, *, verify: bool = True) -> tuple[Matroid, Matroid]:
    if verify:
        rep = verify_paving_hypotheses(spec)
        if not rep:
            raise ConstructionError(f"hypotheses fail: {rep}", rep.witness)
    f1, f2 = paving_families(spec)
    return (matroid_from_cyclic_flats(f1.n, f1.entries, name="M1"),
            matroid_from_cyclic_flats(f2.n, f2.entries, name="M2"))


def example3_spec(m: int = 2, n: int = 2, block: int = 2) -> PavingPairSpec:
    """Rank-3 paving pair on {a, b, x_1..x_m, y_1..y_n}: N1 has dependent
    lines {a, x..} and {b, y..}; N2 has {a, x..} and {a, y..}.  One block
    each side, α = (a, b).  Ranks default to those of N1."""
    if m < 2 or n < 2:
        raise ConstructionError("need m >= 2 and n >= 2")
    names = ("a", "b") + tuple(f"x{i + 1}" for i in range(m)) + tuple(f"y{i + 1}" for i in range(n))
    ix = {nm: i for i, nm in enumerate(names)}
    X = frozenset(ix[f"x{i + 1}"] for i in range(m))
    Y = frozenset(ix[f"y{i + 1}"] for i in range(n))
    a, b = ix["a"], ix["b"]
    N1 = PavingSpec(len(names), 3, (X | {a}, Y | {b}))
    N2 = PavingSpec(len(names), 3, (X | {a}, Y | {a}))
    A1 = [Y | {b}] + [frozenset({a, y}) for y in sorted(Y)]
    B1 = [Y | {a}] + [frozenset({b, y}) for y in sorted(Y)]
    alpha = parse_cycles("(a,b)", names)
    return PavingPairSpec(N1, N2, (A1,), (B1,), (alpha,), (block,) * len(names), names)


EXAMPLE4_NAMES = ("a", "b", "c", "d", "e", "f", "p", "q", "r", "s", "t", "u")


def example4_spec(block: int = 2) -> PavingPairSpec:
    """Rank-4 paving pair on twelve points with three matched blocks."""
    names = EXAMPLE4_NAMES

    def S(text):
        return frozenset(names.index(c) for c in text)

    N1 = PavingSpec(12, 4, (S("abcd"), S("abef"), S("cdef")))
    N2 = PavingSpec(12, 4, (S("abpq"), S("cdrs"), S("eftu")))
    A = ([S(w) for w in ("abef", "abp", "abq", "apq", "bpq")],
         [S(w) for w in ("abcd", "cdr", "cds", "crs", "drs")],
         [S(w) for w in ("cdef", "eft", "efu", "etu", "ftu")])
    B = ([S(w) for w in ("abpq", "abe", "abf", "aef", "bef")],
         [S(w) for w in ("cdrs", "cda", "cdb", "cab", "dab")],
         [S(w) for w in ("eftu", "efc", "efd", "ecd", "fcd")])
    alphas = tuple(parse_cycles(c, names) for c in ("(e,p)(f,q)", "(a,r)(b,s)", "(c,t)(d,u)"))
    return PavingPairSpec(N1, N2, A, B, alphas, (block,) * 12, names)


def example3_printed_spec(m: int = 2, n: int = 2, block: int = 7) -> PavingPairSpec:
    """The large-block realisation: blocks of ``block`` >= 7 elements,
    block ranks in {5, 6} (with A and B equal), line ranks in {8, 9}, E of
    rank 10.  The specific choices alternate deterministically."""
    base = example3_spec(m, n, block)
    names = base.names
    ix = {nm: i for i, nm in enumerate(names)}
    N1 = matroid_from_paving(base.N1)
    labels1 = {}
    for f, k in N1.flats():
        if k == 0:
            labels1[f] = 0
        elif k == 1:
            (e,) = f
            labels1[f] = 5 if names[e] in ("a", "b") else 5 + (e % 2)
        elif k == 2:
            labels1[f] = 8 + (sum(f) % 2)
        else:
            labels1[f] = 10
    return PavingPairSpec(base.N1, base.N2, base.A, base.B, base.alphas, base.block_sizes, names, labels1, None)


def dualize_pair(m1: Matroid, m2: Matroid) -> tuple[Matroid, Matroid]:
    return m1.dual(), m2.dual()


def configurations_differ(m1: Matroid, m2: Matroid) -> bool:
    return not labeled_isomorphic(configuration_of(m1), configuration_of(m2))
