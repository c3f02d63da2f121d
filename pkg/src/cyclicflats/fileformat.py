"""YAML documents for matroids, paving specs and construction data.

Every document starts with ``format: 1`` and has a ``kind`` key.  The
serializers are hand-written so the output is canonical: loading and
dumping a canonical document reproduces it byte for byte.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from importlib import resources
from typing import Any, Sequence

import yaml

from ._bits import set_key, to_mask
from .constructions import LatticeExtensionSpec, PavingPairSpec, format_cycles, parse_cycles
from .core import Matroid, MatroidError, PavingSpec, check_paving_spec
from .lattice import FiniteLattice, LatticeError
from .zfl import RankedFamily, matroid_from_cyclic_flats

FORMAT_VERSION = 1


class FormatError(ValueError):
    pass


def _q(s) -> str:
    return json.dumps(str(s), ensure_ascii=False)


def _ilist(xs) -> str:
    return "[" + ", ".join(str(int(x)) for x in xs) + "]"


def _set_sort(sets):
    return sorted(sets, key=lambda s: set_key(to_mask(s, max(s, default=0) + 1)))


def _header(kind: str) -> list[str]:
    return [f"format: {FORMAT_VERSION}", f"kind: {kind}"]


def _parse(text: str) -> dict:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise FormatError(f"not valid YAML: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("document must be a mapping")
    if doc.get("format") != FORMAT_VERSION:
        raise FormatError(f"unsupported or missing format version {doc.get('format')!r}")
    return doc


def _need(doc: dict, key: str, typ=None):
    if key not in doc:
        raise FormatError(f"missing key {key!r}")
    val = doc[key]
    if typ is not None and not isinstance(val, typ) or isinstance(val, bool) and typ is int:
        raise FormatError(f"key {key!r} has the wrong type")
    return val


class _Elements:
    """Resolve element references given either as ids or as names."""

    def __init__(self, n: int, names: Sequence[str] | None):
        self.n = n
        self.names = tuple(str(x) for x in names) if names else None
        if self.names is not None:
            if len(self.names) != n or len(set(self.names)) != n:
                raise FormatError("names must list n distinct element names")
            self.index = {nm: i for i, nm in enumerate(self.names)}

    def one(self, x) -> int:
        if isinstance(x, bool):
            raise FormatError(f"bad element reference {x!r}")
        if isinstance(x, int):
            if not 0 <= x < self.n:
                raise FormatError(f"element {x} outside 0..{self.n - 1}")
            return x
        if self.names is not None and str(x) in self.index:
            return self.index[str(x)]
        raise FormatError(f"unknown element {x!r}")

    def many(self, xs) -> frozenset[int]:
        if not isinstance(xs, list):
            raise FormatError(f"expected a list of elements, got {xs!r}")
        out = [self.one(x) for x in xs]
        if len(set(out)) != len(out):
            raise FormatError(f"repeated element in {xs!r}")
        return frozenset(out)

    def show(self, s) -> str:
        items = sorted(s)
        if self.names is None:
            return _ilist(items)
        return "[" + ", ".join(_q(self.names[e]) for e in items) + "]"


# -- matroid files ----------------------------------------------------------

@dataclass(frozen=True)
class MatroidFile:
    family: RankedFamily
    name: str | None = None
    labels: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return self.family.n

    def to_matroid(self) -> Matroid:
        return matroid_from_cyclic_flats(self.n, self.family.entries, name=self.name)

    @classmethod
    def from_matroid(cls, m: Matroid, name: str | None = None, labels: Sequence[str] | None = None):
        return cls(RankedFamily(m.n, tuple(m.zflats)), name if name is not None else m.name,
                   tuple(labels) if labels else None)

    def dumps(self) -> str:
        lines = _header("matroid")
        if self.name is not None:
            lines.append(f"name: {_q(self.name)}")
        lines.append(f"n: {self.n}")
        if self.labels:
            lines.append("labels: [" + ", ".join(_q(x) for x in self.labels) + "]")
        lines.append("cyclic_flats:")
        for s, k in self.family.canonical().entries:
            lines.append(f"  - [{_ilist(sorted(s))}, {k}]")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "MatroidFile":
        return _matroid_from_doc(_parse(text))


def _matroid_from_doc(doc: dict) -> MatroidFile:
    if doc.get("kind", "matroid") != "matroid":
        raise FormatError(f"expected a matroid document, got kind {doc.get('kind')!r}")
    n = _need(doc, "n", int)
    if n < 0:
        raise FormatError("n must be nonnegative")
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n:
            raise FormatError("labels must list one name per element")
        labels = tuple(str(x) for x in labels)
    els = _Elements(n, None)
    entries = []
    for item in _need(doc, "cyclic_flats", list):
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[1], int)):
            raise FormatError(f"cyclic flat entries are [elements, rank] pairs, got {item!r}")
        entries.append((els.many(item[0]), item[1]))
    name = doc.get("name")
    return MatroidFile(RankedFamily(n, tuple(entries)), None if name is None else str(name), labels)


# -- paving and paving pairs -------------------------------------------------

@dataclass(frozen=True)
class PavingFile:
    """A single paving spec or a paving pair with its matching data."""

    n: int
    r: int
    names: tuple[str, ...] | None
    hyperplanes1: tuple[frozenset, ...]
    hyperplanes2: tuple[frozenset, ...] | None = None
    blocks: tuple = ()
    block_sizes: tuple[int, ...] | None = None
    rank_labels1: dict | None = None
    rank_labels2: dict | None = None

    @property
    def is_pair(self) -> bool:
        return self.hyperplanes2 is not None

    def spec1(self) -> PavingSpec:
        return PavingSpec(self.n, self.r, self.hyperplanes1)

    def pair_spec(self) -> PavingPairSpec:
        if not self.is_pair:
            raise FormatError("document describes a single paving matroid, not a pair")
        names = self.names or tuple(str(i) for i in range(self.n))
        A = tuple(b[0] for b in self.blocks)
        B = tuple(b[1] for b in self.blocks)
        alphas = tuple(b[2] for b in self.blocks)
        return PavingPairSpec(PavingSpec(self.n, self.r, self.hyperplanes1),
                              PavingSpec(self.n, self.r, self.hyperplanes2),
                              A, B, alphas, self.block_sizes or (), names,
                              self.rank_labels1, self.rank_labels2)

    @classmethod
    def from_pair_spec(cls, spec: PavingPairSpec) -> "PavingFile":
        blocks = tuple((spec.A[j], spec.B[j], spec.alphas[j]) for j in range(len(spec.alphas)))
        return cls(spec.N1.n, spec.N1.r, spec.names, spec.N1.dependent_hyperplanes,
                   spec.N2.dependent_hyperplanes, blocks, spec.block_sizes,
                   dict(spec.rank_labels1) if spec.rank_labels1 else None,
                   dict(spec.rank_labels2) if spec.rank_labels2 else None)

    def dumps(self) -> str:
        els = _Elements(self.n, self.names)
        lines = _header("paving-pair" if self.is_pair else "paving")
        lines += [f"n: {self.n}", f"r: {self.r}"]
        if self.names:
            lines.append("names: [" + ", ".join(_q(x) for x in self.names) + "]")

        def hyps(key, hs):
            lines.append(f"{key}:")
            for h in _set_sort(hs):
                lines.append(f"  - {els.show(h)}")

        if not self.is_pair:
            hyps("hyperplanes", self.hyperplanes1)
            return "\n".join(lines) + "\n"
        hyps("hyperplanes1", self.hyperplanes1)
        hyps("hyperplanes2", self.hyperplanes2)
        if self.blocks:
            lines.append("blocks:")
            for A, B, alpha in self.blocks:
                cyc = format_cycles(alpha, self.names or [str(i) for i in range(self.n)])
                lines.append(f"  - alpha: {_q(cyc)}")
                lines.append("    A:")
                lines += [f"      - {els.show(h)}" for h in _set_sort(A)]
                lines.append("    B:")
                lines += [f"      - {els.show(h)}" for h in _set_sort(B)]
        if self.block_sizes:
            lines.append(f"block_sizes: {_ilist(self.block_sizes)}")
        for key, lab in (("rank_labels1", self.rank_labels1), ("rank_labels2", self.rank_labels2)):
            if lab:
                lines.append(f"{key}:")
                for f in _set_sort(lab):
                    lines.append(f"  - [{els.show(f)}, {lab[f]}]")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "PavingFile":
        return _paving_from_doc(_parse(text))


def _paving_from_doc(doc: dict) -> PavingFile:
    kind = doc.get("kind")
    if kind not in ("paving", "paving-pair"):
        raise FormatError(f"expected a paving document, got kind {kind!r}")
    n, r = _need(doc, "n", int), _need(doc, "r", int)
    names = doc.get("names")
    els = _Elements(n, names)
    names = els.names

    def hyps(key):
        return tuple(els.many(h) for h in _need(doc, key, list))

    def labels(key):
        raw = doc.get(key)
        if raw is None:
            return None
        out = {}
        for item in raw:
            if not (isinstance(item, list) and len(item) == 2 and isinstance(item[1], int)):
                raise FormatError(f"{key} entries are [elements, rank] pairs")
            out[els.many(item[0])] = item[1]
        return out

    if kind == "paving":
        pf = PavingFile(n, r, names, hyps("hyperplanes"))
        try:
            check_paving_spec(pf.spec1())
        except MatroidError as exc:
            raise FormatError(str(exc)) from None
        return pf
    blocks = []
    for blk in doc.get("blocks") or []:
        if not isinstance(blk, dict):
            raise FormatError("each block needs alpha, A and B")
        alpha = _need(blk, "alpha")
        if isinstance(alpha, str):
            try:
                perm = parse_cycles(alpha, names or [str(i) for i in range(n)])
            except MatroidError as exc:
                raise FormatError(str(exc)) from None
        elif isinstance(alpha, list):
            perm = tuple(els.one(x) for x in alpha)
            if sorted(perm) != list(range(n)):
                raise FormatError("explicit alpha map must be a permutation")
        else:
            raise FormatError("alpha must be cycle notation or an explicit list")
        blocks.append((tuple(els.many(h) for h in _need(blk, "A", list)),
                       tuple(els.many(h) for h in _need(blk, "B", list)), perm))
    sizes = doc.get("block_sizes")
    if sizes is not None:
        if not (isinstance(sizes, list) and len(sizes) == n and all(isinstance(x, int) and x > 0 for x in sizes)):
            raise FormatError("block_sizes must list n positive integers")
        sizes = tuple(sizes)
    return PavingFile(n, r, names, hyps("hyperplanes1"), hyps("hyperplanes2"), tuple(blocks), sizes,
                      labels("rank_labels1"), labels("rank_labels2"))


# -- lattice extensions -----------------------------------------------------

@dataclass(frozen=True)
class ExtensionFile:
    """A lattice-extension spec with size and rank labels.

    Atom indices in ``s`` and ``t`` are 1-based in the document.
    """

    spec: LatticeExtensionSpec
    sizes: dict
    ranks: dict

    def dumps(self) -> str:
        sp = self.spec
        lines = _header("lattice-extension")

        def lat(L: FiniteLattice, indent: str):
            out = [f"{indent}elements: [" + ", ".join(_q(x) for x in L.names) + "]",
                   f"{indent}covers:"]
            out += [f"{indent}  - [{_q(L.names[x])}, {_q(L.names[y])}]" for x, y in sorted(L.cover_pairs())]
            return out

        lines.append("base:")
        lines += lat(sp.base, "  ")
        lines.append("atoms: [" + ", ".join(_q(a) for a in sp.atoms) + "]")
        lines.append(f"b: {_q(sp.b)}")
        lines.append("taus:")
        for tau in sp.taus:
            lines.append("  - {" + ", ".join(f"{_q(k)}: {_q(v)}" for k, v in sorted(tau.items())) + "}")
        lines.append("inserts:")
        for L in sp.inserts:
            body = lat(L, "    ")
            body[0] = "  - " + body[0][4:]
            lines += body
        lines.append(f"s: {_ilist(a + 1 for a in sp.s)}")
        lines.append(f"t: {_ilist(a + 1 for a in sp.t)}")
        for key, lab in (("sizes", self.sizes), ("ranks", self.ranks)):
            lines.append(f"{key}:")
            lines += [f"  {_q(k)}: {lab[k]}" for k in sorted(lab)]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "ExtensionFile":
        return _extension_from_doc(_parse(text))


def _extension_from_doc(doc: dict) -> ExtensionFile:
    if doc.get("kind") != "lattice-extension":
        raise FormatError(f"expected a lattice-extension document, got kind {doc.get('kind')!r}")

    def lat(d):
        if not isinstance(d, dict):
            raise FormatError("a lattice needs elements and covers")
        names = [str(x) for x in _need(d, "elements", list)]
        pairs = [(str(x), str(y)) for x, y in _need(d, "covers", list)]
        try:
            return FiniteLattice.from_relation(names, pairs)
        except LatticeError as exc:
            raise FormatError(str(exc)) from None

    def assign(key):
        vals = _need(doc, key, list)
        if not all(isinstance(v, int) and v >= 1 for v in vals):
            raise FormatError(f"{key} lists 1-based atom indices")
        return tuple(v - 1 for v in vals)

    spec = LatticeExtensionSpec(
        lat(_need(doc, "base")),
        tuple(str(a) for a in _need(doc, "atoms", list)),
        str(_need(doc, "b")),
        tuple({str(k): str(v) for k, v in tau.items()} for tau in doc.get("taus") or []),
        tuple(lat(d) for d in doc.get("inserts") or []),
        assign("s"), assign("t"))
    sizes = {str(k): int(v) for k, v in _need(doc, "sizes", dict).items()}
    ranks = {str(k): int(v) for k, v in _need(doc, "ranks", dict).items()}
    return ExtensionFile(spec, sizes, ranks)


# -- generic entry points ---------------------------------------------------

def loads(text: str) -> Any:
    doc = _parse(text)
    kind = doc.get("kind", "matroid")
    if kind == "matroid":
        return _matroid_from_doc(doc)
    if kind in ("paving", "paving-pair"):
        return _paving_from_doc(doc)
    if kind == "lattice-extension":
        return _extension_from_doc(doc)
    raise FormatError(f"unknown document kind {kind!r}")


def load(path: str | os.PathLike) -> Any:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def load_matroid(path: str | os.PathLike) -> Matroid:
    """Any document describing a single matroid (matroid or paving kind)."""
    doc = load(path)
    if isinstance(doc, MatroidFile):
        return doc.to_matroid()
    if isinstance(doc, PavingFile) and not doc.is_pair:
        from .core import matroid_from_paving
        return matroid_from_paving(doc.spec1())
    raise FormatError(f"{path}: document does not describe a single matroid")


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    path = os.fspath(path)
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=".yaml")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


FIXTURES = ("fig1-M", "fig1-N", "example5.2", "example5.2-printed", "example5.3", "fig3")


def fixture_path(name: str):
    if name not in FIXTURES:
        raise FormatError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return resources.files("cyclicflats") / "data" / f"{name}.yaml"


def load_fixture(name: str) -> Any:
    return loads(fixture_path(name).read_text(encoding="utf-8"))
