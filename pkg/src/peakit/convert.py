"""Translations between the structure classes.

Every converter pushes its output back through the target checker, so a
successful return means the translated structure really is valid.
"""

from __future__ import annotations

from .models import (
    ConditionalDoubleCIPoset,
    DoubleCIPoset,
    PseudoEffectAlgebra,
    PseudoSasakiAlgebra,
    ValidationError,
    cdcip_check,
    dcip_check,
    derived_implications,
    pea_from_table,
    psa_check,
)


class NotLattice(ValueError):
    def __init__(self, pair: tuple[int, int]) -> None:
        self.pair = pair
        super().__init__(f"NotLattice{pair}")


class ExpressionMismatch(ValueError):
    def __init__(self, x: int, y: int, values: tuple) -> None:
        self.witness = (x, y)
        self.values = values
        super().__init__(f"ExpressionMismatch({x}, {y}): {values[0]} != {values[1]}")


class OrderMismatch(ValueError):
    def __init__(self, a: int, b: int) -> None:
        self.witness = (a, b)
        super().__init__(f"OrderMismatch({a}, {b})")


def _first_order_difference(p, q) -> tuple[int, int] | None:
    for a in range(p.n):
        for b in range(p.n):
            if p.leq[a][b] != q.leq[a][b]:
                return (a, b)
    return None


def lpea_to_psa(p: PseudoEffectAlgebra) -> PseudoSasakiAlgebra:
    pair = p.order.first_non_lattice_pair()
    if pair is not None:
        raise NotLattice(pair)
    circ, star = p.sasaki_tables
    return psa_check(p.order, circ, star, p.neg, p.til)


def psa_to_pea(s: PseudoSasakiAlgebra) -> PseudoEffectAlgebra:
    n, neg, til = s.n, s.neg, s.til
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            if s.leq(a, neg[b]):
                lhs = neg[s.circ[til[a]][til[b]]]
                rhs = til[s.star[neg[b]][neg[a]]]
                if lhs != rhs:
                    raise ExpressionMismatch(a, b, (lhs, rhs))
                row.append(lhs)
            else:
                row.append(None)
        table.append(row)
    p = pea_from_table(n, table, s.poset.bottom, s.poset.top)
    diff = _first_order_difference(p.order, s.poset)
    if diff is not None:
        raise OrderMismatch(*diff)
    pair = p.order.first_non_lattice_pair()
    if pair is not None:
        raise NotLattice(pair)
    return p


def pea_to_cdcip(p: PseudoEffectAlgebra) -> ConditionalDoubleCIPoset:
    circ, star, arrow, squig = p.conditional_tables
    for x in range(p.n):
        for y in range(p.n):
            if arrow[x][y] is not None:
                assert arrow[x][y] == p.oplus[p.neg[x]][y], (x, y)
                assert squig[x][y] == p.oplus[y][p.til[x]], (x, y)
    r = cdcip_check(p.order, circ, star, arrow, squig, "defg")
    if not r.report.ok:
        raise ValidationError(r.report)
    return r


def cdcip_to_pea(r: ConditionalDoubleCIPoset) -> PseudoEffectAlgebra:
    """Recover the sum x+y = (y^- * x^-)^~ = (x^~ . y^~)^-, defined iff x <= y^-."""
    n, neg, til = r.n, r.neg, r.til
    table = []
    for x in range(n):
        row = []
        for y in range(n):
            if r.leq(x, neg[y]):
                s = r.star[neg[y]][neg[x]]
                c = r.circ[til[x]][til[y]]
                lhs = None if s is None else til[s]
                rhs = None if c is None else neg[c]
                if lhs is None or lhs != rhs:
                    raise ExpressionMismatch(x, y, (lhs, rhs))
                row.append(lhs)
            else:
                row.append(None)
        table.append(row)
    p = pea_from_table(n, table, r.poset.bottom, r.poset.top)
    diff = _first_order_difference(p.order, r.poset)
    if diff is not None:
        raise OrderMismatch(*diff)
    return p


def psa_to_dcilattice(s: PseudoSasakiAlgebra) -> DoubleCIPoset:
    arrow, squig = derived_implications(s)
    d = dcip_check(s.poset, s.circ, s.star, arrow, squig,
                   ("pseudo-involution", "self-adjointness", "divisibility"))
    if not d.report.ok:
        raise ValidationError(d.report)
    pair = s.poset.first_non_lattice_pair()
    if pair is not None:
        raise NotLattice(pair)
    o, neg, til = s.poset, s.neg, s.til
    for a in range(s.n):
        for b in range(s.n):
            m = o.meet(a, b)
            assert m == s.circ[a][squig[a][b]] == s.star[a][arrow[a][b]], (a, b)
            assert o.join(a, b) == til[o.meet(neg[a], neg[b])] == neg[o.meet(til[a], til[b])], (a, b)
    return d
