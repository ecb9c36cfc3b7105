"""JSON model files.

A model file is a JSON object whose fields always appear in this order::

    kind, order, names, leq, oplus, circ, star, arrow, squiggle, neg, til

Only the fields a kind needs are written (``names`` is optional). ``null``
marks an undefined entry in a partial table.  The writer puts each matrix
row on its own line so that output is byte-stable and diffs stay readable.

Zero (bottom) is element 0 and the unit (top) is element ``order - 1``.  A
file that puts them elsewhere is relabeled on read, and its names are
permuted along with it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence, Union

from .models import (
    ConditionalDoubleCIPoset,
    DoubleCIPoset,
    PseudoEffectAlgebra,
    PseudoSasakiAlgebra,
    ValidationError,
    cdcip_check,
    dcip_check,
    pea_from_table,
    psa_check,
)
from .order import validate_poset

Structure = Union[PseudoEffectAlgebra, PseudoSasakiAlgebra, DoubleCIPoset, ConditionalDoubleCIPoset]

ValidationFailed = ValidationError

FIELD_ORDER = ("kind", "order", "names", "leq", "oplus", "circ", "star", "arrow", "squiggle",
               "neg", "til")

KIND_FIELDS = {
    "pea": ("oplus",),
    "psa": ("leq", "circ", "star", "neg", "til"),
    "dcip": ("leq", "circ", "star", "arrow", "squiggle"),
    "cdcip": ("leq", "circ", "star", "arrow", "squiggle"),
}
_BINARY = ("oplus", "circ", "star", "arrow", "squiggle")
_UNARY = ("neg", "til")
_PARTIAL = {"pea": {"oplus"}, "cdcip": {"circ", "star", "arrow", "squiggle"}}


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class ModelFile:
    structure: Structure
    names: tuple[str, ...] | None = None

    @property
    def kind(self) -> str:
        return self.structure.kind

    def name(self, i: int) -> str:
        return self.names[i] if self.names else str(i)


# -- parsing -----------------------------------------------------------------

def _check_matrix(data: Any, key: str, n: int, partial: bool, boolean: bool = False) -> list:
    if not isinstance(data, list) or len(data) != n:
        raise ParseError(f"{key!r} must be a list of {n} rows")
    for row in data:
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"every {key!r} row must have {n} entries")
        for v in row:
            if boolean:
                if not isinstance(v, bool):
                    raise ParseError(f"{key!r} entries must be true/false")
            elif v is None:
                if not partial:
                    raise ParseError(f"{key!r} must be total")
            elif isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise ParseError(f"{key!r} entry {v!r} out of range")
    return data


def _check_vector(data: Any, key: str, n: int) -> list:
    if (not isinstance(data, list) or len(data) != n
            or any(isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n for v in data)):
        raise ParseError(f"{key!r} must list {n} elements in range")
    return data


def _normalizing_perm(n: int, bottom: int, top: int) -> list[int] | None:
    """perm[old] = new, sending bottom to 0 and top to n-1, others kept in order."""
    if bottom == 0 and top == n - 1:
        return None
    perm = [0] * n
    rest = [x for x in range(n) if x not in (bottom, top)]
    perm[bottom], perm[top] = 0, n - 1
    for new, old in enumerate(rest, 1):
        perm[old] = new
    return perm


def _permute(fields: dict, perm: list[int]) -> dict:
    n = len(perm)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    out = dict(fields)
    for key, val in fields.items():
        if key == "leq":
            out[key] = [[val[inv[i]][inv[j]] for j in range(n)] for i in range(n)]
        elif key in _BINARY:
            out[key] = [[None if val[inv[i]][inv[j]] is None else perm[val[inv[i]][inv[j]]]
                         for j in range(n)] for i in range(n)]
        elif key in _UNARY:
            out[key] = [perm[val[inv[i]]] for i in range(n)]
        elif key == "names" and val is not None:
            out[key] = [val[inv[i]] for i in range(n)]
    return out


def _pea_bounds(t: list, n: int) -> tuple[int, int]:
    """Neutral element and order top of a sum table; (0, n-1) when unclear."""
    zeros = [z for z in range(n) if all(t[z][x] == x and t[x][z] == x for x in range(n))]
    if len(zeros) != 1:
        return 0, n - 1
    tops = [u for u in range(n) if all(any(t[a][d] == u for d in range(n)) for a in range(n))]
    return zeros[0], tops[0] if len(tops) == 1 else n - 1


def _poset_bounds(leq: list, n: int) -> tuple[int, int]:
    bots = [b for b in range(n) if all(leq[b][x] for x in range(n))]
    tops = [t for t in range(n) if all(leq[x][t] for x in range(n))]
    return (bots[0] if len(bots) == 1 else 0), (tops[0] if len(tops) == 1 else n - 1)


def from_dict(data: Any) -> ModelFile:
    """Validate a decoded model object and build its structure."""
    if not isinstance(data, dict):
        raise ParseError("a model file must hold a JSON object")
    kind = data.get("kind")
    if kind not in KIND_FIELDS:
        raise ParseError(f"unknown kind {kind!r}")
    n = data.get("order")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError("'order' must be a positive integer")
    allowed = {"kind", "order", "names", *KIND_FIELDS[kind]}
    extra = sorted(set(data) - allowed)
    if extra:
        raise ParseError(f"unexpected field(s) for {kind}: {', '.join(extra)}")
    missing = [k for k in KIND_FIELDS[kind] if k not in data]
    if missing:
        raise ParseError(f"missing field(s) for {kind}: {', '.join(missing)}")
    names = data.get("names")
    if names is not None and (not isinstance(names, list) or len(names) != n
                              or not all(isinstance(s, str) for s in names)
                              or len(set(names)) != n):
        raise ParseError(f"'names' must list {n} distinct strings")

    fields: dict = {"names": names}
    for key in KIND_FIELDS[kind]:
        if key == "leq":
            fields[key] = _check_matrix(data[key], key, n, False, boolean=True)
        elif key in _UNARY:
            fields[key] = _check_vector(data[key], key, n)
        else:
            fields[key] = _check_matrix(data[key], key, n, key in _PARTIAL.get(kind, ()))

    if kind == "pea":
        bottom, top = _pea_bounds(fields["oplus"], n)
    else:
        bottom, top = _poset_bounds(fields["leq"], n)
    perm = _normalizing_perm(n, bottom, top)
    if perm is not None:
        fields = _permute(fields, perm)

    structure = build(kind, n, fields)
    return ModelFile(structure, tuple(fields["names"]) if fields["names"] else None)


def build(kind: str, n: int, f: dict) -> Structure:
    if kind == "pea":
        return pea_from_table(n, f["oplus"])
    poset = validate_poset(n, f["leq"], 0, n - 1)
    if kind == "psa":
        return psa_check(poset, f["circ"], f["star"], f["neg"], f["til"])
    if kind == "dcip":
        return dcip_check(poset, f["circ"], f["star"], f["arrow"], f["squiggle"])
    return cdcip_check(poset, f["circ"], f["star"], f["arrow"], f["squiggle"])


def loads(text: str) -> ModelFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    return from_dict(data)


def read_model_file(path: str | Path) -> ModelFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not UTF-8: {exc}") from None
    return loads(text)


def read_model(path: str | Path) -> Structure:
    return read_model_file(path).structure


# -- writing -----------------------------------------------------------------

def to_dict(structure: Structure, names: Sequence[str] | None = None) -> dict:
    kind = structure.kind
    out: dict = {"kind": kind, "order": structure.n}
    if names is not None:
        out["names"] = list(names)
    for key in KIND_FIELDS[kind]:
        if key == "leq":
            out[key] = [list(row) for row in structure.poset.leq]
        elif key in _UNARY:
            out[key] = list(getattr(structure, key))
        else:
            out[key] = [list(row) for row in getattr(structure, key)]
    return {k: out[k] for k in FIELD_ORDER if k in out}


def _encode_row(row: Sequence) -> str:
    return "[" + ", ".join(json.dumps(v) for v in row) + "]"


def dumps(structure: Structure | ModelFile, names: Sequence[str] | None = None) -> str:
    if isinstance(structure, ModelFile):
        names = structure.names if names is None else names
        structure = structure.structure
    data = to_dict(structure, names)
    parts = []
    for key, val in data.items():
        if isinstance(val, list) and val and isinstance(val[0], list):
            rows = ",\n".join("    " + _encode_row(r) for r in val)
            parts.append(f'  "{key}": [\n{rows}\n  ]')
        elif isinstance(val, list):
            parts.append(f'  "{key}": {_encode_row(val)}')
        else:
            parts.append(f'  "{key}": {json.dumps(val)}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def write_model(structure: Structure | ModelFile, path: str | Path,
                names: Sequence[str] | None = None) -> None:
    Path(path).write_text(dumps(structure, names), encoding="utf-8")
