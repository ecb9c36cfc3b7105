"""Finite bounded posets with meet/join queries."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence


class PosetError(ValueError):
    """Raised when a relation fails to be a bounded partial order."""

    def __init__(self, witness: tuple[int, ...], message: str = "") -> None:
        self.witness = witness
        super().__init__(f"{type(self).__name__}{witness}" + (f": {message}" if message else ""))


class NotReflexive(PosetError):
    pass


class NotAntisymmetric(PosetError):
    pass


class NotTransitive(PosetError):
    pass


class BoundsViolated(PosetError):
    pass


@dataclass(frozen=True)
class FiniteBoundedPoset:
    n: int
    leq: tuple[tuple[bool, ...], ...]
    bottom: int
    top: int

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    @cached_property
    def _meet_table(self) -> tuple[tuple[int | None, ...], ...]:
        return tuple(tuple(_bound(self.leq, self.n, x, y, lower=True)
                           for y in range(self.n)) for x in range(self.n))

    @cached_property
    def _join_table(self) -> tuple[tuple[int | None, ...], ...]:
        return tuple(tuple(_bound(self.leq, self.n, x, y, lower=False)
                           for y in range(self.n)) for x in range(self.n))

    def meet(self, x: int, y: int) -> int | None:
        return self._meet_table[x][y]

    def join(self, x: int, y: int) -> int | None:
        return self._join_table[x][y]

    def meet_all(self, xs: Sequence[int]) -> int | None:
        """Infimum of a non-empty finite family, or None if it does not exist."""
        return _family_bound(self, xs, lower=True)

    def join_all(self, xs: Sequence[int]) -> int | None:
        return _family_bound(self, xs, lower=False)

    def is_lattice(self) -> bool:
        return self.first_non_lattice_pair() is None

    def first_non_lattice_pair(self) -> tuple[int, int] | None:
        for x in range(self.n):
            for y in range(self.n):
                if self.meet(x, y) is None or self.join(x, y) is None:
                    return (x, y)
        return None

    def relabel(self, perm: Sequence[int]) -> FiniteBoundedPoset:
        """Return the poset with element ``i`` renamed ``perm[i]``."""
        inv = [0] * self.n
        for i, p in enumerate(perm):
            inv[p] = i
        leq = tuple(tuple(self.leq[inv[i]][inv[j]] for j in range(self.n)) for i in range(self.n))
        return FiniteBoundedPoset(self.n, leq, perm[self.bottom], perm[self.top])


def _bound(leq, n: int, x: int, y: int, lower: bool) -> int | None:
    if lower:
        cands = [z for z in range(n) if leq[z][x] and leq[z][y]]
        best = [m for m in cands if all(leq[z][m] for z in cands)]
    else:
        cands = [z for z in range(n) if leq[x][z] and leq[y][z]]
        best = [m for m in cands if all(leq[m][z] for z in cands)]
    return best[0] if len(best) == 1 else None


def _family_bound(p: FiniteBoundedPoset, xs: Sequence[int], lower: bool) -> int | None:
    if not xs:
        return p.top if lower else p.bottom
    if lower:
        cands = [z for z in range(p.n) if all(p.leq[z][x] for x in xs)]
        best = [m for m in cands if all(p.leq[z][m] for z in cands)]
    else:
        cands = [z for z in range(p.n) if all(p.leq[x][z] for x in xs)]
        best = [m for m in cands if all(p.leq[m][z] for z in cands)]
    return best[0] if len(best) == 1 else None


def validate_poset(n: int, leq: Sequence[Sequence[bool]], bottom: int, top: int) -> FiniteBoundedPoset:
    """Check that ``leq`` is a bounded partial order on ``range(n)``.

    Raises the first violation found, scanning pairs and triples in
    lexicographic order.
    """
    if n < 1:
        raise ValueError("a poset needs at least one element")
    if len(leq) != n or any(len(row) != n for row in leq):
        raise ValueError(f"relation must be {n}x{n}")
    if not (0 <= bottom < n and 0 <= top < n):
        raise ValueError("bottom/top index out of range")
    rel = tuple(tuple(bool(v) for v in row) for row in leq)
    for x in range(n):
        if not rel[x][x]:
            raise NotReflexive((x, x))
    for x in range(n):
        for y in range(n):
            if x != y and rel[x][y] and rel[y][x]:
                raise NotAntisymmetric((x, y))
    for x in range(n):
        for y in range(n):
            if not rel[x][y]:
                continue
            for z in range(n):
                if rel[y][z] and not rel[x][z]:
                    raise NotTransitive((x, y, z))
    for x in range(n):
        if not rel[bottom][x]:
            raise BoundsViolated((bottom, x), "bottom is not below every element")
        if not rel[x][top]:
            raise BoundsViolated((x, top), "top is not above every element")
    return FiniteBoundedPoset(n, rel, bottom, top)


def meet(p: FiniteBoundedPoset, x: int, y: int) -> int | None:
    return p.meet(x, y)


def join(p: FiniteBoundedPoset, x: int, y: int) -> int | None:
    return p.join(x, y)


def is_lattice(p: FiniteBoundedPoset) -> bool | tuple[int, int]:
    """True for lattices, otherwise the first pair lacking a meet or join."""
    pair = p.first_non_lattice_pair()
    return True if pair is None else pair


def chain(n: int) -> FiniteBoundedPoset:
    leq = [[i <= j for j in range(n)] for i in range(n)]
    return validate_poset(n, leq, 0, n - 1)


def from_covers(n: int, covers: Sequence[tuple[int, int]], bottom: int = 0,
                top: int | None = None) -> FiniteBoundedPoset:
    """Build a poset as the reflexive-transitive closure of ``covers``."""
    rel = [[i == j for j in range(n)] for i in range(n)]
    for a, b in covers:
        rel[a][b] = True
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                for j in range(n):
                    if rel[k][j]:
                        rel[i][j] = True
    return validate_poset(n, rel, bottom, n - 1 if top is None else top)
