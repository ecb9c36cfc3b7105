"""Command-line interface.

Exit codes: 0 when everything checked passes or holds, 1 when a check fails
or a counterexample is found (details on stdout), 2 for usage, syntax or
file-format errors.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from collections import deque
from pathlib import Path
from typing import Callable, Sequence

from . import convert
from .enumerate import (
    DEFAULT_MAX_ORDER,
    KERNEL,
    OrderTooLarge,
    SearchOptions,
    canonical_form,
    enumerate_peas,
    search_counterexample,
    to_flat,
)
from .io import ModelFile, ParseError, Structure, dumps, read_model_file, write_model
from .laws import (
    FLAGS,
    STRICT_SELF_ADJOINTNESS,
    SUITES,
    check_law,
    classify,
    compatible_pair_count,
)
from .models import (
    CDCIP_OPTIONAL,
    PseudoEffectAlgebra,
    UnsupportedOperation,
    ValidationError,
    check_cdcip,
    check_dcip,
)
from .terms import Law, TermSyntaxError, format_law, parse_law, parse_law_file

PASS, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def default_names(n: int) -> tuple[str, ...]:
    """0, a, b, ..., 1 for models that carry no element names."""
    if n == 1:
        return ("0",)
    inner = [chr(ord("a") + i) if i < 26 else f"e{i}" for i in range(n - 2)]
    return ("0", *inner, "1")


def _names(mf: ModelFile) -> tuple[str, ...]:
    return mf.names or default_names(mf.structure.n)


def _show_env(env: dict[str, int], names: Sequence[str]) -> str:
    return ", ".join(f"{k}={names[v]}" for k, v in env.items())


def _load_laws(spec: str) -> list[tuple[str, Law]]:
    if spec in SUITES:
        return [(text, parse_law(text)) for text in SUITES[spec]]
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"{spec!r} is neither a built-in suite ({', '.join(SUITES)}) nor a file")
    return [(format_law(law), law) for _, law in parse_law_file(path.read_text(encoding="utf-8"))]


def _run_laws(model, laws: list[tuple[str, Law]], names: Sequence[str], semantics: str) -> bool:
    ok = True
    for text, law in laws:
        env = check_law(model, law, semantics)
        if env is None:
            print(f"  holds: {text}")
        else:
            ok = False
            print(f"  FAIL:  {text}  [{_show_env(env, names)}]")
    return ok


# -- conversions -------------------------------------------------------------

_EDGES: dict[tuple[str, str], Callable] = {
    ("pea", "psa"): convert.lpea_to_psa,
    ("psa", "pea"): convert.psa_to_pea,
    ("pea", "cdcip"): convert.pea_to_cdcip,
    ("cdcip", "pea"): convert.cdcip_to_pea,
    ("psa", "dcip"): convert.psa_to_dcilattice,
}


def conversion_path(src: str, dst: str) -> list[tuple[str, str]]:
    """Shortest chain of converters from ``src`` to ``dst``."""
    prev: dict[str, str | None] = {src: None}
    queue = deque([src])
    while queue:
        k = queue.popleft()
        for a, b in _EDGES:
            if a == k and b not in prev:
                prev[b] = k
                queue.append(b)
    if dst not in prev or dst == src:
        raise UsageError(f"no conversion from {src} to {dst}")
    path = []
    node = dst
    while prev[node] is not None:
        path.append((prev[node], node))
        node = prev[node]
    return path[::-1]


def convert_to(structure: Structure, dst: str) -> Structure:
    for edge in conversion_path(structure.kind, dst):
        structure = _EDGES[edge](structure)
    return structure


def as_pea(structure: Structure) -> PseudoEffectAlgebra:
    if structure.kind == "pea":
        return structure
    if structure.kind == "dcip":
        raise UsageError("a double CI-poset file cannot be turned back into a PEA")
    return convert_to(structure, "pea")


def _table_diff(name: str, a, b, names: Sequence[str]) -> list[str]:
    out = []
    for i, (ra, rb) in enumerate(zip(a, b)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                show = lambda v: "undef" if v is None else names[v]  # noqa: E731
                out.append(f"  {name}[{names[i]}][{names[j]}]: {show(x)} -> {show(y)}")
    return out


# -- commands ----------------------------------------------------------------

def cmd_check(args) -> int:
    mf = read_model_file(args.file)
    s, names = mf.structure, _names(mf)
    print(s.report)
    optional: Sequence[str] = ()
    if s.kind == "dcip":
        optional = ("pseudo-involution", "divisibility", "ortho-exchange", "self-adjointness")
        rep = check_dcip(s.poset, s.circ, s.star, s.arrow, s.squiggle, optional)
    elif s.kind == "cdcip":
        optional = CDCIP_OPTIONAL
        rep = check_cdcip(s.poset, s.circ, s.star, s.arrow, s.squiggle, optional)
    if optional:
        print("optional laws:")
        for name in optional:
            verdict = "pass" if rep.verdicts[name] else f"fail ({rep.violations[name]})"
            print(f"  {name}: {verdict}")
    ok = s.report.ok if s.kind in ("pea", "psa") else True
    if args.laws:
        print(f"laws ({args.laws}):")
        ok &= _run_laws(s, _load_laws(args.laws), names, args.semantics)
    if args.strict_self_adjointness:
        print("strict self-adjointness:")
        laws = [(t, parse_law(t)) for t in STRICT_SELF_ADJOINTNESS]
        ok &= _run_laws(s, laws, names, args.semantics)
    return PASS if ok else FAIL


def cmd_convert(args) -> int:
    mf = read_model_file(args.file)
    out = convert_to(mf.structure, args.to)
    text = dumps(out, mf.names)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return PASS


def cmd_roundtrip(args) -> int:
    mf = read_model_file(args.file)
    s, names = mf.structure, _names(mf)
    trips: list[tuple[str, list[str], str]] = []
    if s.kind == "pea":
        if s.is_lattice():
            trips.append(("pea -> psa -> pea", ["psa", "pea"], "oplus"))
        trips.append(("pea -> cdcip -> pea", ["cdcip", "pea"], "oplus"))
    elif s.kind == "psa":
        trips.append(("psa -> pea -> psa", ["pea", "psa"], "circ star"))
    elif s.kind == "cdcip":
        trips.append(("cdcip -> pea -> cdcip", ["pea", "cdcip"], "circ star arrow squiggle"))
    else:
        raise UsageError("no round trip starts from a double CI-poset")
    ok = True
    for label, steps, fields in trips:
        t = s
        for k in steps:
            t = convert_to(t, k)
        diffs = [line for f in fields.split() for line in
                 _table_diff(f, getattr(s, f), getattr(t, f), names)]
        if s.kind != "pea":
            diffs += _table_diff("leq", s.poset.leq, t.poset.leq, names)
        else:
            diffs += _table_diff("leq", s.order.leq, t.order.leq, names)
        if diffs:
            ok = False
            print(f"{label}: MISMATCH")
            print("\n".join(diffs))
        else:
            print(f"{label}: identical")
    return PASS if ok else FAIL


def table_hash(table) -> str:
    flat = ",".join(str(v) for v in to_flat(table))
    return hashlib.sha256(flat.encode()).hexdigest()[:16]


def cmd_enumerate(args) -> int:
    filters = []
    if args.filter:
        filters = [law for _, law in
                   parse_law_file(Path(args.filter).read_text(encoding="utf-8"))]
    opts = SearchOptions(args.order, require_lattice=args.lattice, up_to_iso=not args.no_iso,
                         filter=filters, worker_count=args.workers,
                         max_order=max(args.order, DEFAULT_MAX_ORDER) if args.allow_large
                         else DEFAULT_MAX_ORDER)
    out = Path(args.out) if args.out else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    count = 0
    for p in enumerate_peas(opts):
        count += 1
        h = table_hash(canonical_form(p) if opts.up_to_iso else p.oplus)
        flags = classify(p)
        tags = " ".join(k for k in FLAGS if flags[k])
        print(f"{h}  {tags}")
        if out is not None:
            write_model(p, out / f"pea-{h}.json", default_names(p.n))
    print(f"order {args.order}: {count} model(s) [{KERNEL} kernel]")
    return PASS


def cmd_classify(args) -> int:
    mf = read_model_file(args.file)
    p = as_pea(mf.structure)
    flags = classify(p)
    for k in FLAGS:
        v = flags[k]
        print(f"{k}: {'n/a' if v is None else str(v).lower()}")
    pairs = compatible_pair_count(p)
    print(f"compatible_pairs: {'n/a' if pairs is None else pairs}")
    return PASS


def cmd_law(args) -> int:
    if (args.file is None) == (args.order is None):
        raise UsageError("give either a model file or --order N")
    laws = [parse_law(e) for e in args.expr or ()]
    if args.law_file:
        laws += [law for _, law in
                 parse_law_file(Path(args.law_file).read_text(encoding="utf-8"))]
    if not laws:
        raise UsageError("give at least one --expr or --law-file")
    ok = True
    if args.file is not None:
        mf = read_model_file(args.file)
        names = _names(mf)
        for law in laws:
            env = check_law(mf.structure, law, args.semantics)
            if env is None:
                print(f"holds: {format_law(law)}")
            else:
                ok = False
                print(f"counterexample: {format_law(law)}  [{_show_env(env, names)}]")
        return PASS if ok else FAIL
    limit = max(args.order, DEFAULT_MAX_ORDER) if args.allow_large else DEFAULT_MAX_ORDER
    for law in laws:
        found = search_counterexample(law, args.order, args.kind, args.semantics, limit=limit)
        if found is None:
            print(f"holds up to order {args.order}: {format_law(law)}")
        else:
            ok = False
            p, env = found
            names = default_names(p.n)
            print(f"counterexample at order {p.n}: {format_law(law)}  [{_show_env(env, names)}]")
            sys.stdout.write(dumps(p, names))
    return PASS if ok else FAIL


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="peakit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def semantics(p):
        p.add_argument("--semantics", choices=("strong", "die"), default="strong",
                       help="reading of undefined terms in the conclusion (default: strong)")

    p = sub.add_parser("check", help="validate a model file and optionally run laws")
    p.add_argument("file")
    p.add_argument("--laws", help=f"built-in suite ({', '.join(SUITES)}) or a law file")
    p.add_argument("--strict-self-adjointness", action="store_true",
                   help="also check self-adjointness with the circle product on both sides")
    semantics(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("convert", help="translate a model to another structure kind")
    p.add_argument("file")
    p.add_argument("--to", required=True, choices=("pea", "psa", "dcip", "cdcip"))
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("roundtrip", help="convert there and back and diff the tables")
    p.add_argument("file")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("enumerate", help="list all PEAs of a given order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--lattice", action="store_true", help="lattice-ordered models only")
    p.add_argument("--no-iso", action="store_true", help="list labeled tables, not classes")
    p.add_argument("--filter", help="law file; keep models satisfying every law")
    p.add_argument("--out", help="directory for one model file per result")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true",
                   help=f"permit orders above {DEFAULT_MAX_ORDER}")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="print structural flags of a PEA")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("law", help="check laws on a model or search for a countermodel")
    p.add_argument("file", nargs="?")
    p.add_argument("--order", type=int, help="search all PEAs up to this order")
    p.add_argument("--expr", action="append", help="law text (repeatable)")
    p.add_argument("--law-file", help="file with one law per line")
    p.add_argument("--kind", choices=("pea", "lattice-pea"), default="pea")
    p.add_argument("--allow-large", action="store_true")
    semantics(p)
    p.set_defaults(func=cmd_law)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, TermSyntaxError, OrderTooLarge, UnsupportedOperation,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ValidationError as exc:
        print(exc.report)
        return FAIL
    except (convert.NotLattice, convert.ExpressionMismatch, convert.OrderMismatch) as exc:
        print(f"conversion failed: {exc}")
        return FAIL
    except ValueError as exc:  # malformed law limits, bad options
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
