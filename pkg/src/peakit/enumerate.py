"""Exhaustive generation of small pseudo-effect algebras and countermodel search.

The backtracking kernel is the compiled ``_search`` extension when it is
importable and ``PEAKIT_PURE`` is unset; otherwise the pure-Python
``_search_py`` twin is used.  ``KERNEL`` names the one in use.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator, Sequence

from . import _search_py
from .laws import check_law
from .models import PseudoEffectAlgebra, pea_from_table
from .terms import Law, parse_law

if os.environ.get("PEAKIT_PURE"):
    _kernel = _search_py
else:
    try:
        from . import _search as _kernel
    except ImportError:  # extension not built
        _kernel = _search_py

KERNEL = "compiled" if _kernel is not _search_py else "python"

DEFAULT_MAX_ORDER = 7


class OrderTooLarge(ValueError):
    pass


@dataclass
class SearchOptions:
    order: int
    require_lattice: bool = False
    up_to_iso: bool = True
    filter: Sequence[Law] = field(default_factory=tuple)
    worker_count: int = 1
    max_order: int = DEFAULT_MAX_ORDER
    semantics: str = "strong"

    def __post_init__(self) -> None:
        if self.order < 2:
            raise ValueError("order must be at least 2")
        if self.order > self.max_order:
            raise OrderTooLarge(f"order {self.order} exceeds the limit {self.max_order}; "
                                "raise max_order explicitly to go further")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")
        self.filter = tuple(parse_law(f) if isinstance(f, str) else f for f in self.filter)


def to_flat(table: Sequence[Sequence[int | None]]) -> tuple[int, ...]:
    return tuple(-1 if v is None else v for row in table for v in row)


def from_flat(flat: Sequence[int], n: int) -> tuple[tuple[int | None, ...], ...]:
    return tuple(tuple(None if flat[a * n + b] < 0 else flat[a * n + b] for b in range(n))
                 for a in range(n))


def _normalized(p: PseudoEffectAlgebra) -> tuple[tuple[int | None, ...], ...]:
    """The table relabeled so that zero is 0 and the unit is n-1."""
    n = p.n
    if p.zero == 0 and p.unit == n - 1:
        return p.oplus
    rest = [x for x in range(n) if x not in (p.zero, p.unit)]
    perm = [0] * n
    perm[p.zero] = 0
    perm[p.unit] = n - 1
    for new, old in enumerate(rest, 1):
        perm[old] = new
    out = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            s = p.oplus[a][b]
            out[perm[a]][perm[b]] = None if s is None else perm[s]
    return tuple(tuple(r) for r in out)


def canonical_form(p: PseudoEffectAlgebra) -> tuple[tuple[int | None, ...], ...]:
    """Least table (undefined sorting first) over relabelings fixing 0 and 1."""
    flat = to_flat(_normalized(p))
    return from_flat(_kernel.canonical(flat, p.n), p.n)


def isomorphic(p: PseudoEffectAlgebra, q: PseudoEffectAlgebra) -> bool:
    """Direct search for an isomorphism; used to cross-check canonical forms."""
    if p.n != q.n:
        return False
    n = p.n
    others_p = [x for x in range(n) if x not in (p.zero, p.unit)]
    others_q = [x for x in range(n) if x not in (q.zero, q.unit)]
    for image in permutations(others_q):
        f = {p.zero: q.zero, p.unit: q.unit, **dict(zip(others_p, image))}
        if all((p.oplus[a][b] is None and q.oplus[f[a]][f[b]] is None)
               or (p.oplus[a][b] is not None and q.oplus[f[a]][f[b]] == f[p.oplus[a][b]])
               for a in range(n) for b in range(n)):
            return True
    return False


def _branch_prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    cells = _search_py.free_cells(n)[:depth]
    return list(product(*(_search_py.cell_domain(n, i, j) for i, j in cells)))


def _run_branch(args) -> list[tuple[int, ...]]:
    n, labeled, prefix = args
    return _kernel.search(n, labeled, prefix)


def raw_tables(order: int, labeled: bool = False, workers: int = 1) -> list[tuple[int, ...]]:
    """Sorted flat tables from the kernel, split across ``workers`` processes."""
    if workers <= 1 or order < 4:
        return _kernel.search(order, labeled)
    jobs = [(order, labeled, pre) for pre in _branch_prefixes(order, 2)]
    found: set[tuple[int, ...]] = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_run_branch, jobs):
            found.update(part)
    return sorted(found)


def enumerate_peas(opts: SearchOptions) -> Iterator[PseudoEffectAlgebra]:
    """Yield every PEA of the given order, re-validated, in canonical-table order."""
    n = opts.order
    for flat in raw_tables(n, labeled=not opts.up_to_iso, workers=opts.worker_count):
        p = pea_from_table(n, from_flat(flat, n))
        if opts.require_lattice and not p.is_lattice():
            continue
        if any(check_law(p, law, opts.semantics) is not None for law in opts.filter):
            continue
        yield p


def search_counterexample(law: Law | str, max_order: int, kind: str = "pea",
                          semantics: str = "strong",
                          limit: int = DEFAULT_MAX_ORDER) -> tuple[PseudoEffectAlgebra, dict] | None:
    """Smallest countermodel to ``law`` among PEAs (``kind="pea"``) or lattice PEAs."""
    if kind not in ("pea", "lattice-pea"):
        raise ValueError("kind must be 'pea' or 'lattice-pea'")
    if isinstance(law, str):
        law = parse_law(law)
    for n in range(2, max_order + 1):
        opts = SearchOptions(n, require_lattice=kind == "lattice-pea", max_order=max(limit, max_order))
        for p in enumerate_peas(opts):
            env = check_law(p, law, semantics)
            if env is not None:
                return p, env
    return None
