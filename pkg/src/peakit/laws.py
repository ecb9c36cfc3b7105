"""Three-valued term evaluation, universal law checking and classifiers."""

from __future__ import annotations

from itertools import product
from typing import Mapping

from .models import PseudoEffectAlgebra, PseudoSasakiAlgebra, UnsupportedOperation
from .terms import (
    MAX_VARIABLES,
    Atom,
    Binary,
    Const,
    Defined,
    Eq,
    Law,
    Leq,
    Term,
    Unary,
    Var,
    parse_law,
)

SEMANTICS = ("strong", "die")


def _bounds(model) -> tuple[int, int]:
    if isinstance(model, PseudoEffectAlgebra):
        return model.zero, model.unit
    return model.poset.bottom, model.poset.top


def _op(model, name: str):
    try:
        return model.operations[name]
    except KeyError:
        raise UnsupportedOperation(name, model.kind) from None


def eval_term(model, t: Term, assignment: Mapping[str, int]) -> int | None:
    """Value of ``t`` under ``assignment``; ``None`` when any subterm is undefined."""
    if isinstance(t, Var):
        return assignment[t.name]
    if isinstance(t, Const):
        return _bounds(model)[t.value]
    if isinstance(t, Unary):
        table = _op(model, t.op)
        x = eval_term(model, t.arg, assignment)
        return None if x is None else table[x]
    if isinstance(t, Binary):
        table = _op(model, t.op)
        x = eval_term(model, t.left, assignment)
        if x is None:
            return None
        y = eval_term(model, t.right, assignment)
        return None if y is None else table[x][y]
    raise TypeError(f"not a term: {t!r}")


def atom_holds(model, atom: Atom, assignment: Mapping[str, int], semantics: str = "strong") -> bool:
    if isinstance(atom, Defined):
        return eval_term(model, atom.term, assignment) is not None
    x = eval_term(model, atom.left, assignment)
    y = eval_term(model, atom.right, assignment)
    if x is None or y is None:
        if semantics == "die":
            return True
        return isinstance(atom, Eq) and x is None and y is None
    if isinstance(atom, Eq):
        return x == y
    return model.leq(x, y)


def check_law(model, law: Law | str, semantics: str = "strong") -> dict[str, int] | None:
    """First counterexample assignment in lexicographic order, or ``None``.

    Hypotheses are always read with strong semantics; ``semantics`` governs
    the conclusion only.
    """
    if isinstance(law, str):
        law = parse_law(law)
    if semantics not in SEMANTICS:
        raise ValueError(f"semantics must be one of {SEMANTICS}")
    names = law.variables
    if len(names) > MAX_VARIABLES:
        raise ValueError(f"at most {MAX_VARIABLES} variables supported")
    for values in product(range(model.n), repeat=len(names)):
        env = dict(zip(names, values))
        if all(atom_holds(model, h, env) for h in law.hypotheses):
            if not atom_holds(model, law.conclusion, env, semantics):
                return env
    return None


def _suite(*laws: str) -> tuple[str, ...]:
    return laws


SUITES: dict[str, tuple[str, ...]] = {
    "core": _suite(
        # deduction law
        "x <= y => x -> y = 1",
        "x -> y = 1 => x <= y",
        "x <= y => x ~> y = 1",
        "x ~> y = 1 => x <= y",
        # units of the implications
        "x -> 1 = 1", "0 -> x = 1", "x -> x = 1",
        "x ~> 1 = 1", "0 ~> x = 1", "x ~> x = 1",
        # complements of the bounds
        "x^~ = 1 => x = 0", "x = 0 => x^~ = 1",
        "x^- = 1 => x = 0", "x = 0 => x^- = 1",
        "0^~^- = 0", "0^-^~ = 0",
        # annihilation
        "x . y = 0 => y <= x^~", "y <= x^~ => x . y = 0",
        "x * y = 0 => y <= x^-", "y <= x^- => x * y = 0",
        "x^- . x = 0 => x <= x^-^~", "x <= x^-^~ => x^- . x = 0",
        "x^~ * x = 0 => x <= x^~^-", "x <= x^~^- => x^~ * x = 0",
        # unit laws from residuation
        "y <= x ~> (x . y)", "y <= x -> (x * y)",
        "1 -> y = y", "1 ~> y = y",
        "x . y <= x", "x * y <= x",
        "x . 0 = 0", "0 . x = 0", "x * 0 = 0", "0 * x = 0",
        "x . y = 1 => x = 1", "x . y = 1 => y = 1", "x = 1 ; y = 1 => x . y = 1",
        "x * y = 1 => x = 1", "x * y = 1 => y = 1", "x = 1 ; y = 1 => x * y = 1",
        # modus ponens, monotonicity, Duns Scotus
        "x . (x ~> y) <= y", "x * (x -> y) <= y",
        "y <= z => x ~> y <= x ~> z", "y <= z => x -> y <= x -> z",
        "x^- <= x -> y", "x^~ <= x ~> y",
        "y <= z => x . y <= x . z", "y <= z => x * y <= x * z",
        # finite joins and meets
        "x . (y \\/ z) = (x . y) \\/ (x . z)",
        "x * (y \\/ z) = (x * y) \\/ (x * z)",
        "x . (y \\/ z \\/ w) = (x . y) \\/ (x . z) \\/ (x . w)",
        "x * (y \\/ z \\/ w) = (x * y) \\/ (x * z) \\/ (x * w)",
        "x -> (y /\\ z) = (x -> y) /\\ (x -> z)",
        "x ~> (y /\\ z) = (x ~> y) /\\ (x ~> z)",
        "x -> (y /\\ z /\\ w) = (x -> y) /\\ (x -> z) /\\ (x -> w)",
        "x ~> (y /\\ z /\\ w) = (x ~> y) /\\ (x ~> z) /\\ (x ~> w)",
    ),
    "sasaki": _suite(
        "x^- . x = 0", "x . x^~ = 0", "x * x^- = 0", "x^~ * x = 0",
        "x . 0 = 0", "0 . x = 0", "x * 0 = 0", "0 * x = 0",
        "x <= y^- => x . y = 0", "x . y = 0 => x <= y^-",
        "x <= y^~ => x * y = 0", "x * y = 0 => x <= y^~",
        "x . y <= x", "x * y <= x",
        "x <= y => y = (x^- * (x^- . y)^-)^~",
        "x <= y => y = (x^~ . (x^~ * y)^~)^-",
        "x -> y = (x . y^~)^-", "x ~> y = (x * y^-)^~",
    ),
    "optional": _suite(
        "x^-^~ = x", "x^~^- = x",
        "x <= y => y^- <= x^-", "x <= y => y^~ <= x^~",
        "x . (x ~> y) = x * (x -> y)",
        "z <= x ; z <= y => z <= x . (x ~> y)",
        "z <= x . (x ~> y) => z <= x",
        "z <= x . (x ~> y) => z <= y",
        "x^- . y^- = 0 ; z^~ <= x . y => y^- <= x * z",
        "x^~ * y^~ = 0 ; z^- <= x * y => y^~ <= x . z",
        "x . y <= z => x * z^- <= y^-", "x * z^- <= y^- => x . y <= z",
        "x * y <= z => x . z^~ <= y^~", "x . z^~ <= y^~ => x * y <= z",
    ),
    "cdci": _suite(
        "x <= y => y^- <= x^-", "x <= y => y^~ <= x^~",
        "x^-^~ = x", "x^~^- = x",
        "x <= y => x = y . (y ~> x)", "x <= y => x = y * (y -> x)",
        "x = y . (y ~> x) ; x = y * (y -> x) => x <= y",
        "(x . y) . z = x . (y . z)", "(x * y) * z = x * (y * z)",
        "(y^- * x^-)^~ = (x^~ . y^~)^-",
    ),
}

# The printed variant of self-adjointness, with the circle product on both
# right-hand sides; checked only on request.
STRICT_SELF_ADJOINTNESS = _suite(
    "x . y <= z => x . z^- <= y^-", "x . z^- <= y^- => x . y <= z",
)


def run_suite(model, suite: str | list, semantics: str = "strong") -> list[tuple[str, dict | None]]:
    laws = SUITES[suite] if isinstance(suite, str) else suite
    return [(text, check_law(model, text, semantics)) for text in laws]


# -- compatibility and classification ----------------------------------------

class NotLatticeOrdered(ValueError):
    pass


def compatible(p: PseudoEffectAlgebra, a: int, b: int) -> bool:
    """(a v b)\\a = b\\(a ^ b) and (a v b)\\b = a\\(a ^ b)."""
    o = p.order
    j, m = o.join(a, b), o.meet(a, b)
    if j is None or m is None:
        raise NotLatticeOrdered(f"no meet/join for ({a}, {b})")
    ld, rd = p.ldiff, p.rdiff
    left_form = ld[j][a] == ld[b][m] and ld[j][b] == ld[a][m]
    right_form = rd[m][a] == rd[b][j] and rd[m][b] == rd[a][j]
    assert left_form == right_form, f"compatibility forms disagree at ({a}, {b})"
    return left_form


def pseudocommute(s: PseudoSasakiAlgebra, a: int, b: int) -> bool:
    c, st, ng, tl = s.circ, s.star, s.neg, s.til
    first = st[b][ng[a]] == c[ng[a]][b] and st[a][ng[b]] == c[ng[b]][a]
    second = c[a][tl[b]] == st[tl[b]][a] and c[b][tl[a]] == st[tl[a]][b]
    assert first == second, f"pseudocommutation forms disagree at ({a}, {b})"
    return first


FLAGS = ("lattice", "effect_algebra", "pseudo_mv", "all_pairs_compatible", "good",
         "same_complements", "arrow_eq_squiggle_on_leq")


def classify(p: PseudoEffectAlgebra) -> dict[str, bool | None]:
    """Structural flags of a PEA.

    Flags that only make sense for lattice-ordered algebras are ``None`` on
    the others.
    """
    n, t, ng, tl = p.n, p.oplus, p.neg, p.til
    r = range(n)

    def osum(x, y):
        return None if x is None or y is None else t[x][y]

    def un(u, x):
        return None if x is None else u[x]

    flags: dict[str, bool | None] = dict.fromkeys(FLAGS)
    lattice = p.is_lattice()
    flags["lattice"] = lattice
    flags["effect_algebra"] = all(t[a][b] == t[b][a] for a in r for b in r)
    flags["good"] = all(un(tl, osum(ng[x], ng[y])) == un(ng, osum(tl[x], tl[y]))
                        for x in r for y in r)
    flags["same_complements"] = ng == tl
    flags["pseudo_mv"] = False
    if lattice:
        circ, star = p.sasaki_tables
        flags["pseudo_mv"] = all(star[a][b] == circ[b][a] for a in r for b in r)
        flags["all_pairs_compatible"] = all(compatible(p, a, b) for a in r for b in r)
        ops = p.operations
        flags["arrow_eq_squiggle_on_leq"] = all(
            ops["arrow"][a][b] == ops["squiggle"][a][b]
            for a in r for b in r if p.leq(b, a))
    return flags


def compatible_pair_count(p: PseudoEffectAlgebra) -> int | None:
    """Number of unordered pairs {a, b} (a != b) that are compatible."""
    if not p.is_lattice():
        return None
    return sum(1 for a in range(p.n) for b in range(a + 1, p.n) if compatible(p, a, b))
