"""Terms and laws over the connective signature, with an ASCII parser.

Grammar, loosest to tightest binding::

    law   := [atom (';' atom)* '=>'] atom
    atom  := term '=' term | term '<=' term | 'def' '(' term ')'
    term  := lat [('->' | '~>') lat]           # no chaining without parentheses
    lat   := prod (('/\\' | '\\/') prod)*       # one operator per level
    prod  := post (('.' | '*' | '(+)' | '\\' | '/') post)*
    post  := prim ('^-' | '^~')*
    prim  := '0' | '1' | variable | '(' term ')'

Variables are single lowercase letters.  Within the ``lat`` and ``prod``
levels a chain must repeat one operator (read left-associatively); mixing
operators at a level needs parentheses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

BINARY_SYMBOLS = {
    "circ": ".", "star": "*", "oplus": "(+)", "ldiff": "\\", "rdiff": "/",
    "meet": "/\\", "join": "\\/", "arrow": "->", "squiggle": "~>",
}
UNARY_SYMBOLS = {"neg": "^-", "til": "^~"}
_BY_SYMBOL = {v: k for k, v in {**BINARY_SYMBOLS, **UNARY_SYMBOLS}.items()}

_LEVEL = {"arrow": 1, "squiggle": 1, "meet": 2, "join": 2,
          "circ": 3, "star": 3, "oplus": 3, "ldiff": 3, "rdiff": 3}

MAX_VARIABLES = 4


@dataclass(frozen=True)
class Const:
    value: int  # 0 or 1


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Unary:
    op: str
    arg: "Term"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Term"
    right: "Term"


Term = Union[Const, Var, Unary, Binary]


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Leq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Defined:
    term: Term


Atom = Union[Eq, Leq, Defined]


@dataclass(frozen=True)
class Law:
    hypotheses: tuple[Atom, ...]
    conclusion: Atom

    @property
    def variables(self) -> tuple[str, ...]:
        names: set[str] = set()
        for atom in self.hypotheses + (self.conclusion,):
            names |= atom_variables(atom)
        return tuple(sorted(names))

    def __str__(self) -> str:
        return format_law(self)


class TermSyntaxError(ValueError):
    def __init__(self, position: int, expected: str, text: str = "") -> None:
        self.position = position
        self.expected = expected
        where = f" near {text[position:position + 10]!r}" if text else ""
        super().__init__(f"syntax error at position {position}: expected {expected}{where}")


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<sym>\(\+\)|->|~>|/\\|\\/|\^-|\^~|<=|=>|[=;().*\\/])
  | (?P<kw>def(?=\s*\())
  | (?P<const>[01])
  | (?P<var>[a-z])
""", re.VERBOSE)


def _tokenize(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise TermSyntaxError(pos, "a token", text)
        if m.lastgroup != "ws":
            out.append((m.group(), pos))
        pos = m.end()
    out.append(("", len(text)))
    return out


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def peek(self) -> str:
        return self.toks[self.i][0]

    def fail(self, expected: str):
        raise TermSyntaxError(self.toks[self.i][1], expected, self.text)

    def take(self, tok: str | None = None) -> str:
        cur = self.peek
        if tok is not None and cur != tok:
            self.fail(repr(tok))
        self.i += 1
        return cur

    def end(self) -> None:
        if self.peek != "":
            self.fail("end of input")

    def law(self) -> Law:
        atoms = [self.atom()]
        while self.peek == ";":
            self.take()
            atoms.append(self.atom())
        if self.peek == "=>":
            self.take()
            concl = self.atom()
            return Law(tuple(atoms), concl)
        if len(atoms) > 1:
            self.fail("'=>'")
        return Law((), atoms[0])

    def atom(self) -> Atom:
        if self.peek == "def":
            self.take()
            self.take("(")
            t = self.term()
            self.take(")")
            return Defined(t)
        left = self.term()
        if self.peek == "=":
            self.take()
            return Eq(left, self.term())
        if self.peek == "<=":
            self.take()
            return Leq(left, self.term())
        self.fail("'=' or '<='")

    def term(self) -> Term:
        left = self.level(2)
        if self.peek in ("->", "~>"):
            op = _BY_SYMBOL[self.take()]
            right = self.level(2)
            if self.peek in ("->", "~>"):
                self.fail("parentheses around the implication")
            return Binary(op, left, right)
        return left

    def level(self, lvl: int) -> Term:
        syms = ("/\\", "\\/") if lvl == 2 else (".", "*", "(+)", "\\", "/")
        left = self.level(3) if lvl == 2 else self.postfix()
        first = None
        while self.peek in syms:
            if first is not None and self.peek != first:
                self.fail(f"{first!r} or parentheses")
            first = self.take()
            right = self.level(3) if lvl == 2 else self.postfix()
            left = Binary(_BY_SYMBOL[first], left, right)
        return left

    def postfix(self) -> Term:
        t = self.primary()
        while self.peek in ("^-", "^~"):
            t = Unary(_BY_SYMBOL[self.take()], t)
        return t

    def primary(self) -> Term:
        tok = self.peek
        if tok in ("0", "1"):
            self.take()
            return Const(int(tok))
        if len(tok) == 1 and tok.isalpha():
            self.take()
            return Var(tok)
        if tok == "(":
            self.take()
            t = self.term()
            self.take(")")
            return t
        self.fail("a constant, variable or '('")


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.end()
    return t


def parse_law(text: str) -> Law:
    p = _Parser(text)
    law = p.law()
    p.end()
    if len(law.variables) > MAX_VARIABLES:
        raise ValueError(f"laws may use at most {MAX_VARIABLES} variables, got {law.variables}")
    return law


def parse_law_file(text: str) -> list[tuple[int, Law]]:
    """Parse one law per line; ``#`` starts a comment."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((lineno, parse_law(line)))
    return out


def term_variables(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Unary):
        return term_variables(t.arg)
    if isinstance(t, Binary):
        return term_variables(t.left) | term_variables(t.right)
    return set()


def atom_variables(a: Atom) -> set[str]:
    if isinstance(a, Defined):
        return term_variables(a.term)
    return term_variables(a.left) | term_variables(a.right)


def format_term(t: Term) -> str:
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Unary):
        inner = format_term(t.arg)
        if isinstance(t.arg, Binary):
            inner = f"({inner})"
        return inner + UNARY_SYMBOLS[t.op]
    lvl = _LEVEL[t.op]

    def side(child: Term, is_left: bool) -> str:
        s = format_term(child)
        if isinstance(child, Binary):
            clvl = _LEVEL[child.op]
            if clvl < lvl or (clvl == lvl and not (is_left and child.op == t.op and lvl > 1)):
                return f"({s})"
        return s

    return f"{side(t.left, True)} {BINARY_SYMBOLS[t.op]} {side(t.right, False)}"


def format_atom(a: Atom) -> str:
    if isinstance(a, Defined):
        return f"def({format_term(a.term)})"
    rel = "=" if isinstance(a, Eq) else "<="
    return f"{format_term(a.left)} {rel} {format_term(a.right)}"


def format_law(law: Law) -> str:
    concl = format_atom(law.conclusion)
    if not law.hypotheses:
        return concl
    return " ; ".join(format_atom(h) for h in law.hypotheses) + " => " + concl
