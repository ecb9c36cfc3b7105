"""Pseudo-effect algebras, pseudo Sasaki algebras and double CI-posets.

Every structure is an immutable bundle of Cayley tables over the elements
``0..n-1``.  Partial tables use ``None`` for undefined entries.  Structures
are built through the checking constructors (:func:`pea_from_table`,
:func:`psa_check`, :func:`dcip_check`, :func:`cdcip_check`), which quantify
each axiom literally over all tuples and either return the structure, with
its all-pass :class:`CheckReport` attached, or raise :class:`ValidationError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .order import FiniteBoundedPoset, PosetError, validate_poset

Table = tuple[tuple["int | None", ...], ...]
Unary = tuple[int, ...]


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    values: tuple = ()
    op: str | None = None

    def __str__(self) -> str:
        op = f"{self.op} " if self.op else ""
        vals = f" values={self.values}" if self.values else ""
        return f"{self.axiom}: {op}witness={self.witness}{vals}"


@dataclass
class CheckReport:
    kind: str
    verdicts: dict[str, bool] = field(default_factory=dict)
    violations: dict[str, Violation] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    @property
    def first(self) -> Violation | None:
        for name, passed in self.verdicts.items():
            if not passed:
                return self.violations[name]
        return None

    def record(self, axiom: str, violation: Violation | None) -> None:
        self.verdicts[axiom] = violation is None
        if violation is not None:
            self.violations[axiom] = violation

    def lines(self) -> list[str]:
        out = []
        for name, passed in self.verdicts.items():
            if passed:
                out.append(f"  {name}: pass")
            else:
                out.append(f"  {name}: FAIL ({self.violations[name]})")
        return out

    def __str__(self) -> str:
        return "\n".join([f"{self.kind}: {'valid' if self.ok else 'invalid'}"] + self.lines())


class ValidationError(ValueError):
    def __init__(self, report: CheckReport) -> None:
        self.report = report
        first = report.first
        super().__init__(f"{report.kind} invalid: {first}")


class UnsupportedOperation(LookupError):
    def __init__(self, op: str, kind: str) -> None:
        self.op = op
        self.kind = kind
        super().__init__(f"operation {op!r} is not available on {kind}")


def _table(rows: Sequence[Sequence[int | None]], n: int, name: str, partial: bool) -> Table:
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"{name} table must be {n}x{n}")
    out = []
    for row in rows:
        for v in row:
            if v is None:
                if not partial:
                    raise ValueError(f"{name} table must be total")
            elif not (isinstance(v, int) and 0 <= v < n):
                raise ValueError(f"{name} entry {v!r} out of range")
        out.append(tuple(row))
    return tuple(out)


def _unary(vals: Sequence[int], n: int, name: str) -> Unary:
    if len(vals) != n or any(not (isinstance(v, int) and 0 <= v < n) for v in vals):
        raise ValueError(f"{name} must list {n} elements in range")
    return tuple(vals)


def _first(items: Iterable[Violation | None]) -> Violation | None:
    for v in items:
        if v is not None:
            return v
    return None


# -- pseudo-effect algebras -------------------------------------------------

@dataclass(frozen=True)
class PseudoEffectAlgebra:
    n: int
    oplus: Table
    zero: int
    unit: int
    order: FiniteBoundedPoset
    report: CheckReport | None = field(default=None, compare=False, repr=False)

    kind = "pea"

    def sum(self, a: int, b: int) -> int | None:
        return self.oplus[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self.order.leq[a][b]

    @cached_property
    def neg(self) -> Unary:
        """Left complements: ``neg[a]`` is the unique e with e+a = 1."""
        return tuple(next(e for e in range(self.n) if self.oplus[e][a] == self.unit)
                     for a in range(self.n))

    @cached_property
    def til(self) -> Unary:
        """Right complements: ``til[a]`` is the unique d with a+d = 1."""
        return tuple(next(d for d in range(self.n) if self.oplus[a][d] == self.unit)
                     for a in range(self.n))

    @cached_property
    def ldiff(self) -> Table:
        """``ldiff[b][a]`` is x with x+a = b, defined iff a <= b."""
        t = [[None] * self.n for _ in range(self.n)]
        for x in range(self.n):
            for a in range(self.n):
                b = self.oplus[x][a]
                if b is not None:
                    t[b][a] = x
        return tuple(tuple(r) for r in t)

    @cached_property
    def rdiff(self) -> Table:
        """``rdiff[a][b]`` is y with a+y = b, defined iff a <= b."""
        t = [[None] * self.n for _ in range(self.n)]
        for a in range(self.n):
            for y in range(self.n):
                b = self.oplus[a][y]
                if b is not None:
                    t[a][b] = y
        return tuple(tuple(r) for r in t)

    def is_lattice(self) -> bool:
        return self.order.is_lattice()

    @cached_property
    def sasaki_tables(self) -> tuple[Table, Table]:
        """Total products a.b = (a meet b^-)/a and a*b = a\\(a meet b^~).

        Only meaningful when the induced order is a lattice.
        """
        n, o = self.n, self.order
        circ = tuple(tuple(self.rdiff[o.meet(a, self.neg[b])][a] for b in range(n)) for a in range(n))
        star = tuple(tuple(self.ldiff[a][o.meet(a, self.til[b])] for b in range(n)) for a in range(n))
        return circ, star

    @cached_property
    def conditional_tables(self) -> tuple[Table, Table, Table, Table]:
        """Partial circ, star, arrow, squiggle tables of the conditional structure."""
        n = self.n
        circ = tuple(tuple(self.rdiff[self.neg[y]][x] for y in range(n)) for x in range(n))
        star = tuple(tuple(self.ldiff[x][self.til[y]] for y in range(n)) for x in range(n))

        arrow = []
        squig = []
        for x in range(n):
            ar, sq = [], []
            for y in range(n):
                if self.leq(y, x):
                    c = circ[x][self.til[y]]
                    s = star[x][self.neg[y]]
                    ar.append(None if c is None else self.neg[c])
                    sq.append(None if s is None else self.til[s])
                else:
                    ar.append(None)
                    sq.append(None)
            arrow.append(tuple(ar))
            squig.append(tuple(sq))
        return circ, star, tuple(arrow), tuple(squig)

    @cached_property
    def operations(self) -> dict:
        ops = {"oplus": self.oplus, "ldiff": self.ldiff, "rdiff": self.rdiff,
               "neg": self.neg, "til": self.til}
        if self.is_lattice():
            circ, star = self.sasaki_tables
            ops.update(circ=circ, star=star,
                       arrow=_implication(circ, self.neg, self.til, left=True),
                       squiggle=_implication(star, self.neg, self.til, left=False))
            ops.update(_lattice_ops(self.order))
        else:
            circ, star, arrow, squig = self.conditional_tables
            ops.update(circ=circ, star=star, arrow=arrow, squiggle=squig)
        return ops


def _implication(prod: Table, neg: Unary, til: Unary, left: bool) -> Table:
    n = len(neg)
    if left:
        return tuple(tuple(neg[prod[a][til[b]]] for b in range(n)) for a in range(n))
    return tuple(tuple(til[prod[a][neg[b]]] for b in range(n)) for a in range(n))


def _lattice_ops(p: FiniteBoundedPoset) -> dict:
    if not p.is_lattice():
        return {}
    r = range(p.n)
    return {"meet": tuple(tuple(p.meet(a, b) for b in r) for a in r),
            "join": tuple(tuple(p.join(a, b) for b in r) for a in r)}


def check_pea(n: int, oplus: Sequence[Sequence[int | None]], zero: int = 0,
              unit: int | None = None) -> tuple[CheckReport, FiniteBoundedPoset | None]:
    """Quantify PE1-PE4 over the table; return the report and induced order."""
    unit = n - 1 if unit is None else unit
    t = _table(oplus, n, "oplus", partial=True)
    rep = CheckReport("pea")
    r = range(n)

    def pe1():
        for a in r:
            for b in r:
                ab = t[a][b]
                for c in r:
                    lhs = None if ab is None else t[ab][c]
                    bc = t[b][c]
                    rhs = None if bc is None else t[a][bc]
                    if lhs != rhs:
                        return Violation("PE1", (a, b, c), (lhs, rhs))
        return None

    def pe2():
        for a in r:
            ds = [d for d in r if t[a][d] == unit]
            es = [e for e in r if t[e][a] == unit]
            if len(ds) != 1 or len(es) != 1:
                return Violation("PE2", (a,), (tuple(ds), tuple(es)))
        return None

    def pe3(unique: bool):
        for a in r:
            for b in r:
                s = t[a][b]
                if s is None:
                    continue
                ds = [d for d in r if t[d][a] == s]
                es = [e for e in r if t[b][e] == s]
                if unique:
                    if len(ds) > 1 or len(es) > 1:
                        return Violation("PE3-unique", (a, b), (tuple(ds), tuple(es)))
                elif not ds or not es:
                    return Violation("PE3", (a, b), (tuple(ds), tuple(es)))
        return None

    def pe4():
        for a in r:
            if a != zero and (t[a][unit] is not None or t[unit][a] is not None):
                return Violation("PE4", (a,), (t[a][unit], t[unit][a]))
        return None

    rep.record("PE1", pe1())
    rep.record("PE2", pe2())
    rep.record("PE3", pe3(False))
    rep.record("PE4", pe4())
    rep.record("PE3-unique", pe3(True))
    if not rep.ok:
        return rep, None

    rep.record("zero-neutral", _first(
        Violation("zero-neutral", (a,), (t[zero][a], t[a][zero]))
        for a in r if t[zero][a] != a or t[a][zero] != a))

    left = [[any(t[c][a] == b for c in r) for b in r] for a in r]
    right = [[any(t[a][d] == b for d in r) for b in r] for a in r]
    mism = _first(Violation("order", (a, b), (left[a][b], right[a][b]))
                  for a in r for b in r if left[a][b] != right[a][b])
    poset = None
    if mism is None:
        try:
            poset = validate_poset(n, left, zero, unit)
        except PosetError as exc:
            mism = Violation("order", exc.witness, (type(exc).__name__,))
    rep.record("order", mism)
    if poset is None:
        return rep, None

    neg = [next(e for e in r if t[e][a] == unit) for a in r]
    til = [next(d for d in r if t[a][d] == unit) for a in r]
    rep.record("domain", _first(
        Violation("domain", (a, b), (t[a][b], left[a][neg[b]], left[b][til[a]]))
        for a in r for b in r
        if not ((t[a][b] is not None) == left[a][neg[b]] == left[b][til[a]])))
    return rep, poset if rep.ok else None


def pea_from_table(n: int, oplus: Sequence[Sequence[int | None]], zero: int = 0,
                   unit: int | None = None) -> PseudoEffectAlgebra:
    unit = n - 1 if unit is None else unit
    rep, poset = check_pea(n, oplus, zero, unit)
    if not rep.ok:
        raise ValidationError(rep)
    return PseudoEffectAlgebra(n, _table(oplus, n, "oplus", True), zero, unit, poset, rep)


def pea_subtract(p: PseudoEffectAlgebra, a: int, b: int, side: str) -> int:
    """``side="left"``: b\\a (x with x+a = b); ``"right"``: a/b (y with a+y = b)."""
    if side == "left":
        hits = [x for x in range(p.n) if p.oplus[x][a] == b]
    elif side == "right":
        hits = [y for y in range(p.n) if p.oplus[a][y] == b]
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if not hits:
        raise NotComparable(a, b)
    assert len(hits) == 1, f"cancellation fails at ({a}, {b})"
    return hits[0]


class NotComparable(ValueError):
    def __init__(self, a: int, b: int) -> None:
        self.witness = (a, b)
        super().__init__(f"NotComparable({a}, {b})")


def pea_complements(p: PseudoEffectAlgebra, a: int) -> tuple[int, int]:
    """Return ``(a^-, a^~)``."""
    return p.neg[a], p.til[a]


# -- pseudo Sasaki algebras -------------------------------------------------

PSA_AXIOMS = ("pseudo-involution", "unity", "self-adjointness", "divisibility",
              "partial-associativity", "sum-compatibility")


@dataclass(frozen=True)
class PseudoSasakiAlgebra:
    poset: FiniteBoundedPoset
    circ: Table
    star: Table
    neg: Unary
    til: Unary
    report: CheckReport | None = field(default=None, compare=False, repr=False)

    kind = "psa"

    @property
    def n(self) -> int:
        return self.poset.n

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq[a][b]

    @cached_property
    def arrow(self) -> Table:
        return _implication(self.circ, self.neg, self.til, left=True)

    @cached_property
    def squiggle(self) -> Table:
        return _implication(self.star, self.neg, self.til, left=False)

    @cached_property
    def oplus(self) -> Table:
        n, neg, til = self.n, self.neg, self.til
        return tuple(tuple(neg[self.circ[til[a]][til[b]]] if self.leq(a, neg[b]) else None
                           for b in range(n)) for a in range(n))

    @cached_property
    def operations(self) -> dict:
        n, neg, til = self.n, self.neg, self.til
        ldiff = tuple(tuple(self.circ[neg[a]][b] if self.leq(a, b) else None
                            for a in range(n)) for b in range(n))
        rdiff = tuple(tuple(self.star[til[a]][b] if self.leq(a, b) else None
                            for b in range(n)) for a in range(n))
        ops = {"circ": self.circ, "star": self.star, "neg": neg, "til": til,
               "arrow": self.arrow, "squiggle": self.squiggle, "oplus": self.oplus,
               "ldiff": ldiff, "rdiff": rdiff}
        ops.update(_lattice_ops(self.poset))
        return ops


def check_psa(poset: FiniteBoundedPoset, circ, star, neg, til) -> CheckReport:
    n = poset.n
    c = _table(circ, n, "circ", partial=False)
    s = _table(star, n, "star", partial=False)
    ng = _unary(neg, n, "neg")
    tl = _unary(til, n, "til")
    le = poset.leq
    one = poset.top
    r = range(n)
    rep = CheckReport("psa")

    def involution():
        for a in r:
            if tl[ng[a]] != a or ng[tl[a]] != a:
                return Violation("pseudo-involution", (a,), (tl[ng[a]], ng[tl[a]]))
        for a in r:
            for b in r:
                if le[a][b] and not (le[ng[b]][ng[a]] and le[tl[b]][tl[a]]):
                    return Violation("pseudo-involution", (a, b))
        return None

    def unity():
        for a in r:
            vals = (c[a][one], c[one][a], s[one][a], s[a][one])
            if any(v != a for v in vals):
                return Violation("unity", (a,), vals)
        return None

    def self_adjoint():
        for a in r:
            for b in r:
                for x in r:
                    if le[c[a][b]][x] != le[s[a][ng[x]]][ng[b]]:
                        return Violation("self-adjointness", (a, b, x), (c[a][b], s[a][ng[x]]), "circ")
                    if le[s[a][b]][x] != le[c[a][tl[x]]][tl[b]]:
                        return Violation("self-adjointness", (a, b, x), (s[a][b], c[a][tl[x]]), "star")
        return None

    def divisibility():
        for a in r:
            for b in r:
                lhs = c[a][tl[s[a][ng[b]]]]
                rhs = s[a][ng[c[a][tl[b]]]]
                if lhs != rhs:
                    return Violation("divisibility", (a, b), (lhs, rhs))
                for x in r:
                    if le[x][a] and le[x][b] and not le[x][lhs]:
                        return Violation("divisibility", (a, b, x), (lhs,))
        return None

    def partial_assoc():
        for a in r:
            for b in r:
                for x in r:
                    if le[a][ng[b]] and le[x][c[tl[a]][tl[b]]]:
                        lhs = c[c[tl[a]][tl[b]]][tl[x]]
                        rhs = c[tl[a]][c[tl[b]][tl[x]]]
                        if lhs != rhs:
                            return Violation("partial-associativity", (a, b, x), (lhs, rhs), "circ")
                    if le[b][tl[a]] and le[x][s[ng[b]][ng[a]]]:
                        lhs = s[ng[x]][s[ng[b]][ng[a]]]
                        rhs = s[s[ng[x]][ng[b]]][ng[a]]
                        if lhs != rhs:
                            return Violation("partial-associativity", (a, b, x), (lhs, rhs), "star")
        return None

    def sum_compat():
        for a in r:
            for b in r:
                if le[a][ng[b]]:
                    lhs, rhs = ng[c[tl[a]][tl[b]]], tl[s[ng[b]][ng[a]]]
                    if lhs != rhs:
                        return Violation("sum-compatibility", (a, b), (lhs, rhs))
        return None

    for name, fn in zip(PSA_AXIOMS, (involution, unity, self_adjoint, divisibility,
                                     partial_assoc, sum_compat)):
        rep.record(name, fn())
    if rep.ok:
        rep.record("derived-identities", _psa_consequences(poset, c, s, ng, tl))
    return rep


def _psa_consequences(poset, c, s, ng, tl) -> Violation | None:
    le, zero = poset.leq, poset.bottom
    r = range(poset.n)
    for a in r:
        vals = (c[ng[a]][a], c[a][tl[a]], s[a][ng[a]], s[tl[a]][a],
                c[a][zero], c[zero][a], s[a][zero], s[zero][a])
        if any(v != zero for v in vals):
            return Violation("derived-identities", (a,), vals)
        for b in r:
            if le[a][ng[b]] != (c[a][b] == zero) or le[a][tl[b]] != (s[a][b] == zero):
                return Violation("derived-identities", (a, b))
            if not (le[c[a][b]][a] and le[s[a][b]][a]):
                return Violation("derived-identities", (a, b))
    return None


def psa_check(poset: FiniteBoundedPoset, circ, star, neg, til) -> PseudoSasakiAlgebra:
    rep = check_psa(poset, circ, star, neg, til)
    if not rep.ok:
        raise ValidationError(rep)
    n = poset.n
    return PseudoSasakiAlgebra(poset, _table(circ, n, "circ", False), _table(star, n, "star", False),
                               tuple(neg), tuple(til), rep)


def derived_implications(s: PseudoSasakiAlgebra) -> tuple[Table, Table]:
    """a->b = (a.b^~)^- and a~>b = (a*b^-)^~; residuation is re-checked."""
    arrow, squig = s.arrow, s.squiggle
    le = s.poset.leq
    r = range(s.n)
    for a in r:
        for b in r:
            for c in r:
                if le[s.circ[a][b]][c] != le[b][squig[a][c]] or le[s.star[a][b]][c] != le[b][arrow[a][c]]:
                    raise ResiduationBroken((a, b, c))
    return arrow, squig


class ResiduationBroken(AssertionError):
    def __init__(self, witness: tuple[int, int, int]) -> None:
        self.witness = witness
        super().__init__(f"ResiduationBroken{witness}")


# -- double CI-posets --------------------------------------------------------

DCIP_OPTIONAL = ("pseudo-involution", "divisibility", "ortho-exchange", "self-adjointness",
                 "self-adjointness-literal")


@dataclass(frozen=True)
class DoubleCIPoset:
    poset: FiniteBoundedPoset
    circ: Table
    star: Table
    arrow: Table
    squiggle: Table
    report: CheckReport | None = field(default=None, compare=False, repr=False)

    kind = "dcip"

    @property
    def n(self) -> int:
        return self.poset.n

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq[a][b]

    @cached_property
    def neg(self) -> Unary:
        return tuple(self.arrow[a][self.poset.bottom] for a in range(self.n))

    @cached_property
    def til(self) -> Unary:
        return tuple(self.squiggle[a][self.poset.bottom] for a in range(self.n))

    @cached_property
    def operations(self) -> dict:
        ops = {"circ": self.circ, "star": self.star, "arrow": self.arrow,
               "squiggle": self.squiggle, "neg": self.neg, "til": self.til}
        ops.update(_lattice_ops(self.poset))
        return ops

    def holds(self, law: str) -> bool:
        return self.report is not None and self.report.verdicts.get(law, False)


def check_dcip(poset: FiniteBoundedPoset, circ, star, arrow, squiggle,
               optional_laws: Iterable[str] = ()) -> CheckReport:
    n = poset.n
    c = _table(circ, n, "circ", False)
    s = _table(star, n, "star", False)
    ar = _table(arrow, n, "arrow", False)
    sq = _table(squiggle, n, "squiggle", False)
    le, zero, one = poset.leq, poset.bottom, poset.top
    r = range(n)
    ng = [ar[a][zero] for a in r]
    tl = [sq[a][zero] for a in r]
    rep = CheckReport("dcip")

    rep.record("unity", _first(
        Violation("unity", (a,), (c[one][a], c[a][one], s[one][a], s[a][one]))
        for a in r if not (c[one][a] == c[a][one] == s[one][a] == s[a][one] == a)))

    def residuation():
        for a in r:
            for b in r:
                for x in r:
                    if le[c[a][b]][x] != le[b][sq[a][x]]:
                        return Violation("residuation", (a, b, x), (c[a][b], sq[a][x]), "circ")
                    if le[s[a][b]][x] != le[b][ar[a][x]]:
                        return Violation("residuation", (a, b, x), (s[a][b], ar[a][x]), "star")
        return None

    rep.record("residuation", residuation())
    if rep.ok:
        rep.record("deduction", _first(
            Violation("deduction", (a, b), (ar[a][b], sq[a][b]))
            for a in r for b in r
            if not (le[a][b] == (ar[a][b] == one) == (sq[a][b] == one))))

    def involution():
        for a in r:
            if tl[ng[a]] != a or ng[tl[a]] != a:
                return Violation("pseudo-involution", (a,), (tl[ng[a]], ng[tl[a]]))
        for a in r:
            for b in r:
                if le[a][b] and not (le[ng[b]][ng[a]] and le[tl[b]][tl[a]]):
                    return Violation("pseudo-involution", (a, b))
        return None

    def divisibility():
        for a in r:
            for b in r:
                lhs, rhs = c[a][sq[a][b]], s[a][ar[a][b]]
                if lhs != rhs:
                    return Violation("divisibility", (a, b), (lhs, rhs))
                for x in r:
                    if (le[x][a] and le[x][b]) != le[x][lhs]:
                        return Violation("divisibility", (a, b, x), (lhs,))
        return None

    def ortho_exchange():
        for a in r:
            for b in r:
                for x in r:
                    if c[ng[a]][ng[b]] == zero and le[tl[x]][c[a][b]] and not le[ng[b]][s[a][x]]:
                        return Violation("ortho-exchange", (a, b, x), op="circ")
                    if s[tl[a]][tl[b]] == zero and le[ng[x]][s[a][b]] and not le[tl[b]][c[a][x]]:
                        return Violation("ortho-exchange", (a, b, x), op="star")
        return None

    def self_adjoint(literal: bool):
        name = "self-adjointness-literal" if literal else "self-adjointness"
        second = c if literal else s
        for a in r:
            for b in r:
                for x in r:
                    if le[c[a][b]][x] != le[second[a][ng[x]]][ng[b]]:
                        return Violation(name, (a, b, x), op="circ")
                    if le[s[a][b]][x] != le[c[a][tl[x]]][tl[b]]:
                        return Violation(name, (a, b, x), op="star")
        return None

    checks = {"pseudo-involution": involution, "divisibility": divisibility,
              "ortho-exchange": ortho_exchange,
              "self-adjointness": lambda: self_adjoint(False),
              "self-adjointness-literal": lambda: self_adjoint(True)}
    for law in _normalize(optional_laws, DCIP_OPTIONAL, {}):
        rep.record(law, checks[law]())
    return rep


def _mandatory_ok(rep: CheckReport, mandatory: Sequence[str]) -> bool:
    return all(rep.verdicts.get(k, True) for k in mandatory)


def dcip_check(poset: FiniteBoundedPoset, circ, star, arrow, squiggle,
               optional_laws: Iterable[str] = ()) -> DoubleCIPoset:
    """Check unity and residuation plus any requested optional laws.

    The structure is returned when the mandatory axioms hold; optional law
    verdicts are recorded on ``result.report``.  A failing mandatory axiom
    raises :class:`ValidationError`.
    """
    rep = check_dcip(poset, circ, star, arrow, squiggle, optional_laws)
    if not _mandatory_ok(rep, ("unity", "residuation", "deduction")):
        raise ValidationError(rep)
    n = poset.n
    return DoubleCIPoset(poset, *(_table(t, n, k, False) for t, k in
                                  ((circ, "circ"), (star, "star"), (arrow, "arrow"),
                                   (squiggle, "squiggle"))), report=rep)


# -- conditional double CI-posets -------------------------------------------

CDCIP_OPTIONAL = ("pseudo-involution", "divisibility", "associativity", "pea-condition")
CDCIP_ALIASES = {"d": "pseudo-involution", "e": "divisibility", "f": "associativity",
                 "g": "pea-condition"}


def _normalize(laws: Iterable[str], allowed: Sequence[str], aliases: dict) -> list[str]:
    wanted = set()
    for law in laws:
        law = aliases.get(law, law)
        if law not in allowed:
            raise ValueError(f"unknown optional law {law!r}")
        wanted.add(law)
    return [k for k in allowed if k in wanted]


@dataclass(frozen=True)
class ConditionalDoubleCIPoset:
    poset: FiniteBoundedPoset
    circ: Table
    star: Table
    arrow: Table
    squiggle: Table
    report: CheckReport | None = field(default=None, compare=False, repr=False)

    kind = "cdcip"

    @property
    def n(self) -> int:
        return self.poset.n

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq[a][b]

    @cached_property
    def neg(self) -> Unary:
        return tuple(self.arrow[a][self.poset.bottom] for a in range(self.n))

    @cached_property
    def til(self) -> Unary:
        return tuple(self.squiggle[a][self.poset.bottom] for a in range(self.n))

    @cached_property
    def oplus(self) -> Table:
        """x+y = (x^~ . y^~)^- where x <= y^-."""
        n, ng, tl = self.n, self.neg, self.til
        out = []
        for x in range(n):
            row = []
            for y in range(n):
                v = self.circ[tl[x]][tl[y]] if self.leq(x, ng[y]) else None
                row.append(None if v is None else ng[v])
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def operations(self) -> dict:
        ops = {"circ": self.circ, "star": self.star, "arrow": self.arrow,
               "squiggle": self.squiggle, "neg": self.neg, "til": self.til,
               "oplus": self.oplus}
        ops.update(_lattice_ops(self.poset))
        return ops


def _get(t: Table, x: int | None, y: int | None) -> int | None:
    if x is None or y is None:
        return None
    return t[x][y]


def _un(u: Sequence[int | None], x: int | None) -> int | None:
    return None if x is None else u[x]


def check_cdcip(poset: FiniteBoundedPoset, circ, star, arrow, squiggle,
                optional_laws: Iterable[str] = ()) -> CheckReport:
    n = poset.n
    c = _table(circ, n, "circ", True)
    s = _table(star, n, "star", True)
    ar = _table(arrow, n, "arrow", True)
    sq = _table(squiggle, n, "squiggle", True)
    le, zero, one = poset.leq, poset.bottom, poset.top
    r = range(n)
    rep = CheckReport("cdcip")
    ng = [ar[x][zero] for x in r]
    tl = [sq[x][zero] for x in r]

    def domain():
        for name, t in (("arrow", ar), ("squiggle", sq)):
            for x in r:
                for y in r:
                    if (t[x][y] is not None) != le[y][x]:
                        return Violation("domain", (x, y), (t[x][y],), name)
        for name, t, comp in (("circ", c, ng), ("star", s, tl)):
            for x in r:
                for y in r:
                    if (t[x][y] is not None) != (comp[y] is not None and le[comp[y]][x]):
                        return Violation("domain", (x, y), (t[x][y],), name)
        return None

    rep.record("domain", domain())
    if not rep.ok:
        return rep

    rep.record("unity", _first(
        Violation("unity", (x,), (c[x][one], c[one][x], s[x][one], s[one][x]))
        for x in r if not (c[x][one] == c[one][x] == s[x][one] == s[one][x] == x)))

    def residuation():
        for x in r:
            for y in r:
                for z in r:
                    if c[x][y] is not None and sq[x][z] is not None:
                        if le[c[x][y]][z] != le[y][sq[x][z]]:
                            return Violation("residuation", (x, y, z), (c[x][y], sq[x][z]), "circ")
                    if s[x][y] is not None and ar[x][z] is not None:
                        if le[s[x][y]][z] != le[y][ar[x][z]]:
                            return Violation("residuation", (x, y, z), (s[x][y], ar[x][z]), "star")
        return None

    rep.record("residuation", residuation())

    def involution():
        for x in r:
            for y in r:
                if le[x][y] and not (le[ng[y]][ng[x]] and le[tl[y]][tl[x]]):
                    return Violation("pseudo-involution", (x, y))
        for x in r:
            if tl[ng[x]] != x or ng[tl[x]] != x:
                return Violation("pseudo-involution", (x,), (tl[ng[x]], ng[tl[x]]))
        return None

    def divisibility():
        for x in r:
            for y in r:
                u = _get(c, y, sq[y][x])
                v = _get(s, y, ar[y][x])
                if le[x][y] != (u == x and v == x):
                    return Violation("divisibility", (x, y), (u, v))
        return None

    def associativity():
        for x in r:
            for y in r:
                for z in r:
                    lhs, rhs = _get(c, c[x][y], z), _get(c, x, c[y][z])
                    if lhs != rhs:
                        return Violation("associativity", (x, y, z), (lhs, rhs), "circ")
                    lhs, rhs = _get(s, s[x][y], z), _get(s, x, s[y][z])
                    if lhs != rhs:
                        return Violation("associativity", (x, y, z), (lhs, rhs), "star")
        return None

    def pea_condition():
        for x in r:
            for y in r:
                lhs = _un(tl, s[ng[y]][ng[x]])
                rhs = _un(ng, c[tl[x]][tl[y]])
                if lhs != rhs:
                    return Violation("pea-condition", (x, y), (lhs, rhs))
        return None

    checks = {"pseudo-involution": involution, "divisibility": divisibility,
              "associativity": associativity, "pea-condition": pea_condition}
    for law in _normalize(optional_laws, CDCIP_OPTIONAL, CDCIP_ALIASES):
        rep.record(law, checks[law]())
    return rep


def cdcip_check(poset: FiniteBoundedPoset, circ, star, arrow, squiggle,
                optional_laws: Iterable[str] = ()) -> ConditionalDoubleCIPoset:
    """Check the domain rules, unity and conditional residuation.

    Requested optional laws are recorded on the report; only the mandatory
    axioms decide whether :class:`ValidationError` is raised.
    """
    rep = check_cdcip(poset, circ, star, arrow, squiggle, optional_laws)
    if not _mandatory_ok(rep, ("domain", "unity", "residuation")):
        raise ValidationError(rep)
    n = poset.n
    return ConditionalDoubleCIPoset(poset, *(_table(t, n, k, True) for t, k in
                                             ((circ, "circ"), (star, "star"), (arrow, "arrow"),
                                              (squiggle, "squiggle"))), report=rep)
