"""Command-line front end: ``python -m cyclicflats {compute,compare,generate,verify}``.

Exit status: 0 for equal/pass, 1 for unequal/fail, 2 for errors.
Inputs are file paths or ``fixture:NAME`` for the bundled examples.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from collections import Counter

import yaml

from . import constructions as C
from .core import Matroid, MatroidError
from .fileformat import (ExtensionFile, FormatError, MatroidFile, PavingFile, fixture_path, load,
                         write_atomic)
from .ginv import (catenary_data, chain_compositions_via_lists, chain_report, default_workers, dual_transform,
                   g_from_catenary, g_invariant, g_invariant_bruteforce, inclusion_exclusion_check)
from .lattice import LatticeError, labeled_isomorphic
from .tutte import format_polynomial, tutte_polynomial
from .zfl import configuration_of, validate_Z_axioms


class CliError(Exception):
    pass


# -- input helpers ------------------------------------------------------------

def _resolve(path: str):
    if path.startswith("fixture:"):
        return fixture_path(path.split(":", 1)[1])
    return path


def _load(path: str):
    p = _resolve(path)
    if not hasattr(p, "read_text"):
        return load(p)
    from .fileformat import loads
    return loads(p.read_text(encoding="utf-8"))


def _matroid(path: str) -> Matroid:
    doc = _load(path)
    if isinstance(doc, MatroidFile):
        return doc.to_matroid()
    if isinstance(doc, PavingFile) and not doc.is_pair:
        from .core import matroid_from_paving
        return matroid_from_paving(doc.spec1())
    raise CliError(f"{path}: expected a single matroid document")


def _expand(paths: list[str]) -> list[str]:
    out = []
    for p in paths:
        if os.path.isdir(p):
            out += sorted(os.path.join(p, f) for f in os.listdir(p) if f.endswith((".yaml", ".yml")))
        else:
            out.append(p)
    return out


# -- report values ------------------------------------------------------------

def _comp(c) -> str:
    return ",".join(str(x) for x in c)


def _set(s) -> list[int]:
    return sorted(s)


def _ginv(m: Matroid, args) -> dict:
    if args.force_bruteforce:
        return g_invariant_bruteforce(m, max_n=m.n)
    if getattr(args, "force_catenary", False):
        return g_from_catenary(catenary_data(m, workers=args.threads), m.n, m.r)
    return g_invariant(m, workers=args.threads)


def _value(m: Matroid, what: str, args):
    if what == "tutte":
        return format_polynomial(tutte_polynomial(m))
    if what == "ginv":
        g = _ginv(m, args)
        return {k: g[k] for k in sorted(g, reverse=True)}
    if what == "catenary":
        cd = catenary_data(m, workers=args.threads)
        return {_comp(k): cd[k] for k in sorted(cd)}
    if what == "config":
        cfg = configuration_of(m)
        lat = cfg.lattice
        elems = [{"set": _set(lat.names[i]), "size": cfg.sizes[i], "rank": cfg.ranks[i]} for i in range(lat.size)]
        covers = sorted([_set(lat.names[x]), _set(lat.names[y])] for x, y in lat.cover_pairs())
        return {"elements": elems, "covers": covers}
    if what == "chains":
        rep = chain_report(m)
        out = []
        for chain in sorted(rep.per_chain, key=lambda c: (len(c), [sorted(x) for x in c])):
            cnt = rep.per_chain[chain]
            out.append({"chain": [_set(x) for x in chain], "flags": sum(cnt.values()),
                        "compositions": {_comp(k): cnt[k] for k in sorted(cnt)}})
        return out
    if what == "iota":
        rep = inclusion_exclusion_check(m)
        return {"independent_hyperplanes": m.independent_hyperplane_count(), "via_g_sets": rep.iota_from_union}
    raise CliError(f"unknown invariant {what!r}")


def _emit(doc: dict, args) -> None:
    text = yaml.safe_dump({"format": 1, **doc}, sort_keys=False, allow_unicode=True, width=4096,
                          default_flow_style=False)
    if getattr(args, "output", None):
        write_atomic(args.output, text)
    else:
        sys.stdout.write(text)


# -- commands ---------------------------------------------------------------

def cmd_compute(args) -> int:
    m = _matroid(args.path)
    _emit({"command": "compute", "what": args.what, "input": args.path, "n": m.n, "rank": m.r,
           "result": _value(m, args.what, args)}, args)
    return 0


def cmd_compare(args) -> int:
    ma, mb = _matroid(args.path_a), _matroid(args.path_b)
    if args.mode == "config":
        equal = labeled_isomorphic(configuration_of(ma), configuration_of(mb))
    else:
        equal = _value(ma, args.mode, args) == _value(mb, args.mode, args)
    _emit({"command": "compare", "mode": args.mode, "inputs": [args.path_a, args.path_b],
           "verdict": "equal" if equal else "unequal"}, args)
    return 0 if equal else 1


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"expected comma-separated integers, got {text!r}") from None


def _write_matroid(m: Matroid, path: str, name: str | None = None) -> str:
    write_atomic(path, MatroidFile.from_matroid(m, name=name).dumps())
    return path


def _outdir(args) -> str:
    if not args.output:
        raise CliError("--output DIR is required for this kind")
    os.makedirs(args.output, exist_ok=True)
    return args.output


def cmd_generate(args) -> int:
    kind = args.kind
    written: list[str] = []
    if kind in ("parallel", "dual", "example1"):
        if kind == "parallel":
            m = C.parallel_extension(_matroid(_need(args, "input")), args.t)
        elif kind == "dual":
            src = _matroid(_need(args, "input"))
            m = src.dual()
            m.name = f"{src.name}*" if src.name else None
        else:
            assign = [a - 1 for a in _ints(_need(args, "assign"))]
            m = C.example1_family(_need(args, "m"), assign, _ints(_need(args, "sizes")))
        text = MatroidFile.from_matroid(m).dumps()
        if args.output:
            write_atomic(args.output, text)
            written.append(args.output)
        else:
            sys.stdout.write(text)
            return 0
    elif kind in ("example3", "example4", "example3-printed"):
        if kind == "example3":
            spec = C.example3_spec(args.m or 2, args.n or 2, args.block or 2)
        elif kind == "example3-printed":
            spec = C.example3_printed_spec(args.m or 2, args.n or 2, args.block or 7)
        else:
            spec = C.example4_spec(args.block or 2)
        m1, m2 = C.realize_paving_pair(spec)
        d = _outdir(args)
        written.append(_write_matroid(m1, os.path.join(d, "M1.yaml"), f"{kind}-M1"))
        written.append(_write_matroid(m2, os.path.join(d, "M2.yaml"), f"{kind}-M2"))
        pair = os.path.join(d, "pair.yaml")
        write_atomic(pair, PavingFile.from_pair_spec(spec).dumps())
        written.append(pair)
    elif kind == "lattice-extension":
        doc = _load(_need(args, "input"))
        if not isinstance(doc, ExtensionFile):
            raise CliError("--input must be a lattice-extension document")
        ms, mt = C.realize_extension_pair(doc.spec, doc.sizes, doc.ranks)
        d = _outdir(args)
        written.append(_write_matroid(ms, os.path.join(d, "M_s.yaml")))
        written.append(_write_matroid(mt, os.path.join(d, "M_t.yaml")))
    else:
        raise CliError(f"unknown kind {kind!r}")
    sys.stderr.write("".join(f"wrote {p}\n" for p in written))
    return 0


def _need(args, key):
    val = getattr(args, key, None)
    if val is None:
        raise CliError(f"--{key} is required for generate {args.kind}")
    return val


def _verify_one(kind: str, path: str, args) -> tuple[bool, dict]:
    if kind == "axioms":
        doc = _load(path)
        if isinstance(doc, MatroidFile):
            fams = {"family": doc.family}
        elif isinstance(doc, PavingFile) and doc.is_pair:
            f1, f2 = C.paving_families(doc.pair_spec())
            fams = {"M1": f1, "M2": f2}
        else:
            raise CliError(f"{path}: axioms needs a matroid or paving-pair document")
        out, ok = {}, True
        for key, fam in fams.items():
            rep = validate_Z_axioms(fam.n, fam.entries)
            ok &= rep.ok
            out[key] = "pass" if rep.ok else {"axiom": rep.axiom, "message": rep.message,
                                               "witness": [sorted(w) if isinstance(w, frozenset) else w
                                                           for w in rep.witness]}
        return ok, out
    if kind == "paving-hypotheses":
        doc = _load(path)
        if not (isinstance(doc, PavingFile) and doc.is_pair):
            raise CliError(f"{path}: expected a paving-pair document")
        spec = doc.pair_spec()
        rep = C.verify_paving_hypotheses(spec)
        info = {} if rep.ok else {"failure": rep.failures[0][0],
                                  "witness": spec.fmt(rep.witness) if rep.witness is not None else None}
        return rep.ok, info
    m = _matroid(path)
    if kind == "lemma31":
        rep = inclusion_exclusion_check(m)
        return rep.ok, {"union": rep.union, "subset_sum": rep.subset_sum, "chain_sum": rep.chain_sum,
                        "iota": rep.iota_direct, "join_property": rep.join_property}
    if kind == "chains":
        rep = chain_report(m)
        cd = catenary_data(m, workers=args.threads)
        agree_total = Counter(cd) == rep.total()
        agree_lists = all(chain_compositions_via_lists(m, ch) == cnt for ch, cnt in rep.per_chain.items())
        return agree_total and agree_lists, {"chains": len(rep.per_chain), "totals_match": agree_total,
                                             "list_counts_match": agree_lists}
    if kind == "duality":
        d = m.dual()
        g, gd = _ginv(m, args), _ginv(d, args)
        rule = gd == dual_transform(g)
        E = m.ground
        comp = sorted((sorted(E - z), len(E - z) + k - m.r) for z, k in m.zflats)
        zok = comp == sorted((sorted(z), k) for z, k in d.zflats)
        return rule and zok, {"transform_rule": rule, "complemented_family": zok}
    raise CliError(f"unknown verification {kind!r}")


def cmd_verify(args) -> int:
    results, all_ok = [], True
    for path in _expand(args.paths):
        ok, info = _verify_one(args.kind, path, args)
        all_ok &= ok
        results.append({"input": path, "verdict": "pass" if ok else "fail", **({"details": info} if info else {})})
    _emit({"command": "verify", "kind": args.kind, "results": results,
           "verdict": "pass" if all_ok else "fail"}, args)
    return 0 if all_ok else 1


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclicflats", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=default_workers(),
                        help="worker processes for flag enumeration (default: available CPUs)")
    common.add_argument("--force-bruteforce", action="store_true", help="compute G by brute force")
    common.add_argument("--force-catenary", action="store_true", help="compute G from catenary data")
    common.add_argument("--output", "-o", help="write the report or generated file here")
    common.add_argument("--timing", action="store_true", help="print elapsed time on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="print one invariant of a matroid")
    c.add_argument("path")
    c.add_argument("--what", required=True, choices=["tutte", "ginv", "catenary", "config", "chains", "iota"])
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("compare", parents=[common], help="compare two matroids")
    c.add_argument("path_a")
    c.add_argument("path_b")
    c.add_argument("--mode", required=True, choices=["ginv", "catenary", "config", "tutte"])
    c.set_defaults(func=cmd_compare)

    c = sub.add_parser("generate", parents=[common], help="write construction outputs")
    c.add_argument("kind", choices=["parallel", "example1", "example3", "example3-printed", "example4",
                                    "lattice-extension", "dual"])
    c.add_argument("--input", help="source document for parallel, dual and lattice-extension")
    c.add_argument("--t", type=int, default=1, help="copies per element for parallel")
    c.add_argument("--m", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--block", type=int)
    c.add_argument("--sizes", help="comma-separated plane sizes for example1")
    c.add_argument("--assign", help="comma-separated 1-based line index per plane for example1")
    c.set_defaults(func=cmd_generate)

    c = sub.add_parser("verify", parents=[common], help="run a property check")
    c.add_argument("kind", choices=["axioms", "lemma31", "chains", "paving-hypotheses", "duality"])
    c.add_argument("paths", nargs="+", help="files, directories or fixture:NAME")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be positive")
    start = time.perf_counter()
    try:
        status = args.func(args)
    except (CliError, FormatError, MatroidError, LatticeError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        wit = getattr(exc, "witness", None)
        if wit is None and hasattr(exc, "report"):
            wit = exc.report.witness
        if wit is not None:
            sys.stderr.write(f"witness: {wit!r}\n")
        return 2
    if args.timing:
        sys.stderr.write(f"elapsed: {time.perf_counter() - start:.3f} s\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
