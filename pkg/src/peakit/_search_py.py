"""Pure-Python backtracking kernel for pseudo-effect algebra tables.

Mirrors ``_search.pyx`` line for line; used when the compiled module is not
available or ``PEAKIT_PURE`` is set.

Tables are flat lists of length n*n, ``-1`` marking an undefined sum and
``-2`` an unassigned cell.  Element 0 is the zero and n-1 the unit.  The
zero row/column and the unit row/column are prefilled (zero is neutral,
sums with the unit vanish); the interior cells are filled in row-major order.
"""

from __future__ import annotations

from itertools import permutations

UNDEF = -1
FREE = -2


def _prefill(n: int) -> list[int]:
    t = [FREE] * (n * n)
    u = n - 1
    for x in range(n):
        t[x] = x
        t[x * n] = x
        if x:
            t[x * n + u] = UNDEF
            t[u * n + x] = UNDEF
    return t


def free_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n - 1) for j in range(1, n - 1)]


def cell_domain(n: int, i: int, j: int) -> list[int]:
    return [UNDEF, n - 1] + [k for k in range(1, n - 1) if k != i and k != j]


def _triple_ok(t: list[int], n: int, a: int, b: int, c: int) -> bool:
    ab = t[a * n + b]
    if ab == FREE:
        return True
    lhs = UNDEF if ab == UNDEF else t[ab * n + c]
    if lhs == FREE:
        return True
    bc = t[b * n + c]
    if bc == FREE:
        return True
    rhs = UNDEF if bc == UNDEF else t[a * n + bc]
    if rhs == FREE:
        return True
    return lhs == rhs


def _consistent(t: list[int], n: int, i: int, j: int) -> bool:
    """Check every constraint touched by the cell (i, j) just assigned."""
    v = t[i * n + j]
    u = n - 1
    if v >= 0:
        for k in range(1, j):
            if t[i * n + k] == v:
                return False
        for k in range(1, i):
            if t[k * n + j] == v:
                return False
    if j == n - 2 and sum(1 for k in range(1, n - 1) if t[i * n + k] == u) != 1:
        return False
    if v == u:
        for k in range(1, j):
            if t[i * n + k] == u:
                return False
        for k in range(1, i):
            if t[k * n + j] == u:
                return False
    if i == n - 2 and sum(1 for k in range(1, n - 1) if t[k * n + j] == u) != 1:
        return False
    for x in range(n):
        if not _triple_ok(t, n, i, j, x) or not _triple_ok(t, n, x, i, j):
            return False
    for a in range(n):
        for b in range(n):
            s = t[a * n + b]
            if s == i and not _triple_ok(t, n, a, b, j):
                return False
            if s == j and not _triple_ok(t, n, i, a, b):
                return False
    return True


def _row_defined(t: list[int], n: int, i: int) -> int:
    return sum(1 for k in range(1, n - 1) if t[i * n + k] != UNDEF)


def is_pea(t: list[int], n: int) -> bool:
    """Full PE1-PE4 check plus agreement and antisymmetry of the induced order."""
    u = n - 1
    r = range(n)
    for a in r:
        for b in r:
            ab = t[a * n + b]
            for c in r:
                lhs = UNDEF if ab == UNDEF else t[ab * n + c]
                bc = t[b * n + c]
                rhs = UNDEF if bc == UNDEF else t[a * n + bc]
                if lhs != rhs:
                    return False
    for a in r:
        if sum(1 for d in r if t[a * n + d] == u) != 1:
            return False
        if sum(1 for e in r if t[e * n + a] == u) != 1:
            return False
        if a and (t[a * n + u] != UNDEF or t[u * n + a] != UNDEF):
            return False
    for a in r:
        for b in r:
            s = t[a * n + b]
            if s == UNDEF:
                continue
            if sum(1 for d in r if t[d * n + a] == s) != 1:
                return False
            if sum(1 for e in r if t[b * n + e] == s) != 1:
                return False
    left = [[False] * n for _ in r]
    right = [[False] * n for _ in r]
    for x in r:
        for y in r:
            s = t[x * n + y]
            if s != UNDEF:
                left[y][s] = True
                right[x][s] = True
    for a in r:
        for b in r:
            if left[a][b] != right[a][b]:
                return False
            if a != b and left[a][b] and left[b][a]:
                return False
            if left[a][b]:
                for c in r:
                    if left[b][c] and not left[a][c]:
                        return False
    return True


def canonical(t: list[int] | tuple[int, ...], n: int) -> tuple[int, ...]:
    """Lexicographically least relabeling, permuting interior elements only."""
    best = None
    inner = range(1, n - 1)
    for p in permutations(inner):
        perm = (0,) + p + (n - 1,)
        new = [UNDEF] * (n * n)
        for a in range(n):
            pa = perm[a] * n
            for b in range(n):
                s = t[a * n + b]
                new[pa + perm[b]] = UNDEF if s == UNDEF else perm[s]
        cand = tuple(new)
        if best is None or cand < best:
            best = cand
    return best


def search(n: int, labeled: bool = False, prefix: tuple[int, ...] = ()) -> list[tuple[int, ...]]:
    """All PEA tables of order ``n`` whose first free cells match ``prefix``.

    With ``labeled`` every labeled table is returned; otherwise rows are
    constrained to non-increasing defined counts and results are reduced to
    canonical forms.  The result is sorted.
    """
    if n < 2:
        return []
    t = _prefill(n)
    cells = free_cells(n)
    found: set[tuple[int, ...]] = set()

    def leaf():
        if is_pea(t, n):
            found.add(tuple(t) if labeled else canonical(t, n))

    def rec(k: int):
        if k == len(cells):
            leaf()
            return
        i, j = cells[k]
        dom = (prefix[k],) if k < len(prefix) else cell_domain(n, i, j)
        for v in dom:
            t[i * n + j] = v
            if not _consistent(t, n, i, j):
                continue
            if (not labeled and j == n - 2 and i >= 2
                    and _row_defined(t, n, i - 1) < _row_defined(t, n, i)):
                continue
            rec(k + 1)
        t[i * n + j] = FREE

    rec(0)
    return sorted(found)
