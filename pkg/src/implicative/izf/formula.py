"""Formulas of set theory (only variables as terms) and their concrete syntax.

Grammar, loosest binding first::

    phi ::= phi -> phi                      (right associative)
          | phi \\/ phi | phi /\\ phi          (both right associative)
          | ~phi                            (phi -> False)
          | exists x. phi | forall x. phi
          | exists x in y. phi | forall x in y. phi
          | x in y | x = y | sub(x, y) | False | True | (phi)

A formula in context is written ``[x, y] |- phi``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from ..errors import InvalidArgument, ParseError
from ..terms import fresh_name


class Formula:
    __slots__ = ()

    @cached_property
    def free(self) -> frozenset:
        return _free(self)

    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Mem(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Eq(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class BExists(Formula):
    """``exists var in bound. body``"""
    var: str
    bound: str
    body: Formula


@dataclass(frozen=True)
class BForall(Formula):
    """``forall var in bound. body``"""
    var: str
    bound: str
    body: Formula


def top() -> Formula:
    return Imp(Bot(), Bot())


def neg(f: Formula) -> Formula:
    return Imp(f, Bot())


def subset(x: str, y: str, avoid=()) -> Formula:
    z = "z" if "z" not in {x, y, *avoid} else fresh_name("z", {x, y, *avoid})
    return BForall(z, x, Mem(z, y))


QUANTIFIERS = (Exists, Forall)
BOUNDED = (BExists, BForall)
BINARY = (And, Or, Imp)
ATOMS = (Mem, Eq)


def _free(f):
    if isinstance(f, Bot):
        return frozenset()
    if isinstance(f, ATOMS):
        return frozenset((f.left, f.right))
    if isinstance(f, BINARY):
        return f.left.free | f.right.free
    if isinstance(f, QUANTIFIERS):
        return f.body.free - {f.var}
    return (f.body.free - {f.var}) | {f.bound}


def all_vars(f) -> set:
    if isinstance(f, Bot):
        return set()
    if isinstance(f, ATOMS):
        return {f.left, f.right}
    if isinstance(f, BINARY):
        return all_vars(f.left) | all_vars(f.right)
    out = all_vars(f.body) | {f.var}
    if isinstance(f, BOUNDED):
        out.add(f.bound)
    return out


def rename_free(f: Formula, old: str, new: str) -> Formula:
    """Replace free occurrences of ``old`` by ``new`` (``new`` must not be captured)."""
    if old not in f.free:
        return f
    r = (lambda v: new if v == old else v)
    if isinstance(f, ATOMS):
        return type(f)(r(f.left), r(f.right))
    if isinstance(f, BINARY):
        return type(f)(rename_free(f.left, old, new), rename_free(f.right, old, new))
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, rename_free(f.body, old, new))
    body = f.body if f.var == old else rename_free(f.body, old, new)
    return type(f)(f.var, r(f.bound), body)


def freshen(f: Formula, avoid) -> Formula:
    """Rename bound variables away from ``avoid`` and from enclosing binders.

    Ties go to the lowest unused numeric suffix.
    """
    avoid = set(avoid)
    if isinstance(f, (Bot,) + ATOMS):
        return f
    if isinstance(f, BINARY):
        return type(f)(freshen(f.left, avoid), freshen(f.right, avoid))
    var, body = f.var, f.body
    if var in avoid:
        new = fresh_name(var, avoid | all_vars(body))
        body = rename_free(body, var, new)
        var = new
    body = freshen(body, avoid | {var})
    if isinstance(f, QUANTIFIERS):
        return type(f)(var, body)
    return type(f)(var, f.bound, body)


def expand(f: Formula) -> Formula:
    """Unfold bounded quantifiers into their unbounded definitions."""
    if isinstance(f, (Bot,) + ATOMS):
        return f
    if isinstance(f, BINARY):
        return type(f)(expand(f.left), expand(f.right))
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, expand(f.body))
    if isinstance(f, BExists):
        return Exists(f.var, And(Mem(f.var, f.bound), expand(f.body)))
    return Forall(f.var, Imp(Mem(f.var, f.bound), expand(f.body)))


def substitute(f: Formula, old: str, new: str) -> Formula:
    """Capture-avoiding ``f[new/old]``."""
    f = freshen(f, {new})
    return rename_free(f, old, new)


@dataclass(frozen=True)
class ContextedFormula:
    formula: Formula
    context: tuple

    def __post_init__(self):
        context = tuple(self.context)
        if len(set(context)) != len(context):
            raise InvalidArgument(f"repeated variable in context {list(context)}")
        unbound = self.formula.free - set(context)
        if unbound:
            raise InvalidArgument(f"unbound variables {sorted(unbound)} not in context {list(context)}")
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "formula", freshen(self.formula, context))

    @property
    def arity(self) -> int:
        return len(self.context)

    def __str__(self):
        return f"[{', '.join(self.context)}] |- {show(self.formula)}"


# -- printing -------------------------------------------------------------------

_PREC = {Imp: 1, Or: 2, And: 3}


def show(f: Formula, prec: int = 0) -> str:
    if isinstance(f, Bot):
        return "False"
    if f == top():
        return "True"
    if isinstance(f, Mem):
        return f"{f.left} in {f.right}"
    if isinstance(f, Eq):
        return f"{f.left} = {f.right}"
    if isinstance(f, Imp) and isinstance(f.right, Bot):
        return "~" + show(f.left, 4)
    if isinstance(f, BINARY):
        op = {And: "/\\", Or: "\\/", Imp: "->"}[type(f)]
        p = _PREC[type(f)]
        text = f"{show(f.left, p + 1)} {op} {show(f.right, p)}"
        return f"({text})" if prec > p else text
    if isinstance(f, Exists):
        text = f"exists {f.var}. {show(f.body)}"
    elif isinstance(f, Forall):
        text = f"forall {f.var}. {show(f.body)}"
    elif isinstance(f, BExists):
        text = f"exists {f.var} in {f.bound}. {show(f.body)}"
    else:
        text = f"forall {f.var} in {f.bound}. {show(f.body)}"
    return f"({text})" if prec > 0 else text


# -- parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<op>->|/\\|\\/|\|-|[~().,\[\]=])|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<bad>\S))")
_KEYWORDS = {"exists", "forall", "in", "False", "True", "sub"}


class _FormulaParser:
    def __init__(self, text):
        self.text = text
        self.tokens = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            if m.lastgroup == "bad":
                raise ParseError(f"unexpected character {m.group('bad')!r}", m.start("bad"), text)
            self.tokens.append((m.group(m.lastgroup), m.start(m.lastgroup), m.lastgroup))
            pos = m.end()
        self.tokens.append(("", len(text), "eof"))
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def take(self, expected=None):
        tok, pos, kind = self.tokens[self.i]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok or 'end of input'!r}", pos, self.text)
        self.i += 1
        return tok

    def ident(self):
        tok, pos, kind = self.tokens[self.i]
        if kind != "ident" or tok in _KEYWORDS:
            raise ParseError(f"expected a variable, found {tok or 'end of input'!r}", pos, self.text)
        self.i += 1
        return tok

    def formula(self):
        left = self.disj()
        if self.peek() == "->":
            self.take()
            return Imp(left, self.formula())
        return left

    def disj(self):
        left = self.conj()
        if self.peek() == "\\/":
            self.take()
            return Or(left, self.disj())
        return left

    def conj(self):
        left = self.unary()
        if self.peek() == "/\\":
            self.take()
            return And(left, self.conj())
        return left

    def unary(self):
        tok = self.peek()
        if tok == "~":
            self.take()
            return neg(self.unary())
        if tok in ("exists", "forall"):
            self.take()
            var = self.ident()
            bound = None
            if self.peek() == "in":
                self.take()
                bound = self.ident()
            self.take(".")
            body = self.formula()
            if bound is None:
                return (Exists if tok == "exists" else Forall)(var, body)
            return (BExists if tok == "exists" else BForall)(var, bound, body)
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok == "(":
            self.take()
            f = self.formula()
            self.take(")")
            return f
        if tok == "False":
            self.take()
            return Bot()
        if tok == "True":
            self.take()
            return top()
        if tok == "sub":
            self.take()
            self.take("(")
            x = self.ident()
            self.take(",")
            y = self.ident()
            self.take(")")
            return subset(x, y)
        left = self.ident()
        op = self.peek()
        if op == "in":
            self.take()
            return Mem(left, self.ident())
        if op == "=":
            self.take()
            return Eq(left, self.ident())
        tok, pos, _ = self.tokens[self.i]
        raise ParseError(f"expected 'in' or '=', found {tok or 'end of input'!r}", pos, self.text)

    def context(self):
        self.take("[")
        names = []
        if self.peek() != "]":
            names.append(self.ident())
            while self.peek() == ",":
                self.take()
                names.append(self.ident())
        self.take("]")
        self.take("|-")
        return names


def parse_formula(text: str, context=None) -> ContextedFormula:
    """Parse ``[x, y] |- phi``; a bare formula takes ``context`` (default empty)."""
    p = _FormulaParser(text)
    names = p.context() if p.peek() == "[" else list(context or ())
    f = p.formula()
    if p.peek() != "":
        tok, pos, _ = p.tokens[p.i]
        raise ParseError(f"trailing input {tok!r}", pos, text)
    try:
        return ContextedFormula(f, tuple(names))
    except InvalidArgument as exc:
        raise ParseError(str(exc), None, text) from None
