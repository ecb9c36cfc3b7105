"""Independent reference implementations used as test oracles.

Nothing here imports the package's checking or search code.  The functions
restate the definitions as directly as possible (sets and dictionaries of
defined sums), trading speed for obviousness.
"""

from __future__ import annotations

import json
from itertools import permutations, product
from pathlib import Path

import numpy as np

GOLDEN = Path(__file__).resolve().parents[1] / "src" / "peakit" / "data" / "golden"
NEGATIVE_CORPUS = GOLDEN.parent / "negative_corpus.json"

# Order in which the checker is documented to report axioms.
AXIOM_ORDER = ("PE1", "PE2", "PE3", "PE4", "PE3-unique", "zero-neutral", "order", "domain")


def load_table(name: str) -> list[list[int | None]]:
    return json.loads((GOLDEN / f"{name}.json").read_text())["oplus"]


def sums(t) -> dict[tuple[int, int], int]:
    """The partial operation as a dictionary of defined sums."""
    return {(a, b): v for a, row in enumerate(t) for b, v in enumerate(row) if v is not None}


def first_violation(t, zero: int = 0, unit: int | None = None) -> tuple[str, tuple] | None:
    """First failing axiom and its witness, or None for a valid PEA."""
    n = len(t)
    unit = n - 1 if unit is None else unit
    S = sums(t)
    E = range(n)

    def plus(x, y):
        return None if x is None or y is None else S.get((x, y))

    for a, b, c in product(E, repeat=3):
        if plus(plus(a, b), c) != plus(a, plus(b, c)):
            return "PE1", (a, b, c)
    for a in E:
        right = {d for d in E if S.get((a, d)) == unit}
        left = {e for e in E if S.get((e, a)) == unit}
        if len(right) != 1 or len(left) != 1:
            return "PE2", (a,)
    for (a, b), s in sorted(S.items()):
        if not any(S.get((d, a)) == s for d in E) or not any(S.get((b, e)) == s for e in E):
            return "PE3", (a, b)
    for a in E:
        if a != zero and ((a, unit) in S or (unit, a) in S):
            return "PE4", (a,)
    for (a, b), s in sorted(S.items()):
        if (len([d for d in E if S.get((d, a)) == s]) > 1
                or len([e for e in E if S.get((b, e)) == s]) > 1):
            return "PE3-unique", (a, b)
    for a in E:
        if S.get((zero, a)) != a or S.get((a, zero)) != a:
            return "zero-neutral", (a,)

    below_l = {(a, s) for (c, a), s in S.items()}   # c+a = s gives a <= s
    below_r = {(a, s) for (a, d), s in S.items()}   # a+d = s gives a <= s
    for a, b in product(E, repeat=2):
        if ((a, b) in below_l) != ((a, b) in below_r):
            return "order", (a, b)
    le = below_l
    for a in E:
        if (a, a) not in le:
            return "order", (a, a)
    for a, b in product(E, repeat=2):
        if a != b and (a, b) in le and (b, a) in le:
            return "order", (a, b)
    for a, b, c in product(E, repeat=3):
        if (a, b) in le and (b, c) in le and (a, c) not in le:
            return "order", (a, b, c)
    for a in E:
        if (zero, a) not in le:
            return "order", (zero, a)
        if (a, unit) not in le:
            return "order", (a, unit)

    minus = {a: next(e for e in E if S.get((e, a)) == unit) for a in E}
    tilde = {a: next(d for d in E if S.get((a, d)) == unit) for a in E}
    for a, b in product(E, repeat=2):
        if not (((a, b) in S) == ((a, minus[b]) in le) == ((b, tilde[a]) in le)):
            return "domain", (a, b)
    return None


def is_pea(t) -> bool:
    return first_violation(t) is None


# -- negative corpus ---------------------------------------------------------

CORPUS_MODELS = ("E2", "MV3", "B4", "MV4", "HS4", "M3C5", "NL6")


def build_negative_corpus() -> list[dict]:
    """Every single-cell mutant of the golden PEAs that is not itself a PEA."""
    out = []
    for name in CORPUS_MODELS:
        t = load_table(name)
        n = len(t)
        for a, b in product(range(n), repeat=2):
            for v in [None, *range(n)]:
                if v == t[a][b]:
                    continue
                m = [row[:] for row in t]
                m[a][b] = v
                fv = first_violation(m)
                if fv is None:
                    continue
                out.append({"model": name, "cell": [a, b], "value": v,
                            "axiom": fv[0], "witness": list(fv[1])})
    return out


# -- brute-force enumeration -------------------------------------------------

def canonical(t) -> tuple:
    """Least relabeling (undefined below every element) fixing 0 and n-1."""
    n = len(t)
    best = None
    for p in permutations(range(1, n - 1)):
        f = (0, *p, n - 1)
        new = [[None] * n for _ in range(n)]
        for (a, b), s in sums(t).items():
            new[f[a]][f[b]] = f[s]
        key = tuple(-1 if v is None else v for row in new for v in row)
        if best is None or key < best:
            best = key
    return best


def _necessary(tabs: np.ndarray, n: int) -> np.ndarray:
    """Vectorised PE2 and cancellation filters over a stack of flat tables."""
    T = tabs.reshape(-1, n, n)
    u = n - 1
    keep = ((T == u).sum(axis=2) == 1).all(axis=1) & ((T == u).sum(axis=1) == 1).all(axis=1)
    for j in range(n):
        for k in range(j + 1, n):
            keep &= ~((T[:, :, j] == T[:, :, k]) & (T[:, :, j] >= 0)).any(axis=1)
            keep &= ~((T[:, j, :] == T[:, k, :]) & (T[:, j, :] >= 0)).any(axis=1)
    return keep


def brute_force_tables(n: int, fix_pe4: bool = True) -> set[tuple]:
    """All labeled PEA tables of order n (zero 0, unit n-1), by generate-and-filter.

    Every cell ranges over undefined and all n elements.  With ``fix_pe4`` the
    cells that PE4 forces to be undefined (sums of the unit with a nonzero
    element) are fixed up front; every other cell stays free.
    """
    u = n - 1
    cells = [(a, b) for a in range(n) for b in range(n)
             if not (fix_pe4 and ((a == u and b != 0) or (b == u and a != 0)))]
    values = np.arange(-1, n, dtype=np.int8)
    head = cells[:3] if len(cells) > 9 else []
    tail = cells[len(head):]
    grid = np.array(list(product(values, repeat=len(tail))), dtype=np.int8)
    found: set[tuple] = set()
    for hv in product(values, repeat=len(head)):
        tabs = np.full((len(grid), n * n), -1, dtype=np.int8)
        for (a, b), v in zip(head, hv):
            tabs[:, a * n + b] = v
        for k, (a, b) in enumerate(tail):
            tabs[:, a * n + b] = grid[:, k]
        for flat in tabs[_necessary(tabs, n)]:
            t = [[None if v < 0 else int(v) for v in flat[a * n:(a + 1) * n]] for a in range(n)]
            if is_pea(t):
                found.add(tuple(int(v) for v in flat))
    return found


def brute_force_classes(n: int) -> set[tuple]:
    out = set()
    for flat in brute_force_tables(n):
        t = [[None if v < 0 else v for v in flat[a * n:(a + 1) * n]] for a in range(n)]
        out.add(canonical(t))
    return out
