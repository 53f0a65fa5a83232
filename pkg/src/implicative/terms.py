"""λ-terms with algebra parameters, and their compilation into algebra elements.

Terms are hash-consed: structurally equal terms are the same object, so they
can key memo tables by identity. Concrete syntax::

    \\x y. body      abstraction (``λ`` also accepted)
    f a b           application, left associative
    #name           algebra parameter (label, or a name bound in ``params``)
    k kbar s p p1 p2 j1 j2 e y   built-in combinators, unless λ-bound

An identifier that is neither λ-bound nor a built-in is a free variable.
"""
from __future__ import annotations

import re
import weakref
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .algebra import ImplicativeAlgebra
from .errors import InvalidArgument, ParseError


class Term:
    __slots__ = ("free", "fvs", "__weakref__")
    _table: "weakref.WeakValueDictionary" = weakref.WeakValueDictionary()

    def __new__(cls, *args):
        key = (cls, *args)
        term = Term._table.get(key)
        if term is None:
            term = object.__new__(cls)
            term._setup(*args)
            term.fvs = tuple(sorted(term.free))
            Term._table[key] = term
        return term

    def __reduce__(self):
        return (type(self), self._args())

    @property
    def closed(self) -> bool:
        return not self.free

    def __repr__(self):
        return f"<{type(self).__name__} {show(self)}>"

    def __str__(self):
        return show(self)


class Var(Term):
    __slots__ = ("name",)

    def _setup(self, name):
        self.name = name
        self.free = frozenset([name])

    def _args(self):
        return (self.name,)


class Param(Term):
    __slots__ = ("value",)

    def _setup(self, value):
        self.value = value
        self.free = frozenset()

    def _args(self):
        return (self.value,)


class App(Term):
    __slots__ = ("fun", "arg")

    def _setup(self, fun, arg):
        self.fun = fun
        self.arg = arg
        self.free = fun.free | arg.free

    def _args(self):
        return (self.fun, self.arg)


class Abs(Term):
    __slots__ = ("var", "body")

    def _setup(self, var, body):
        self.var = var
        self.body = body
        self.free = body.free - {var}

    def _args(self):
        return (self.var, self.body)


# -- construction helpers ----------------------------------------------------

def app(fun: Term, *args: Term) -> Term:
    for a in args:
        fun = App(fun, a)
    return fun


def lam(names: str, body: Term) -> Term:
    for name in reversed(names.split()):
        body = Abs(name, body)
    return body


def show(t: Term, labels: Sequence[str] | None = None) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Param):
        return "#" + (labels[t.value] if labels is not None else str(t.value))
    if isinstance(t, Abs):
        names = [t.var]
        body = t.body
        while isinstance(body, Abs):
            names.append(body.var)
            body = body.body
        return "\\" + " ".join(names) + ". " + show(body, labels)
    fun = show(t.fun, labels)
    if isinstance(t.fun, Abs):
        fun = f"({fun})"
    arg = show(t.arg, labels)
    if isinstance(t.arg, (App, Abs)):
        arg = f"({arg})"
    return f"{fun} {arg}"


def size(t: Term) -> int:
    if isinstance(t, App):
        return 1 + size(t.fun) + size(t.arg)
    if isinstance(t, Abs):
        return 1 + size(t.body)
    return 1


def is_pure(t: Term) -> bool:
    if isinstance(t, Param):
        return False
    if isinstance(t, App):
        return is_pure(t.fun) and is_pure(t.arg)
    if isinstance(t, Abs):
        return is_pure(t.body)
    return True


def church(n: int) -> Term:
    """Church numeral ``\\f x. f (... (f x))`` with ``n`` applications."""
    body = Var("x")
    for _ in range(n):
        body = App(Var("f"), body)
    return lam("f x", body)


# -- substitution and reduction ---------------------------------------------

_SUFFIX = re.compile(r"\d+$")


def fresh_name(base: str, avoid) -> str:
    """``base`` with the lowest numeric suffix not in ``avoid``."""
    stem = _SUFFIX.sub("", base) or "v"
    k = 1
    while f"{stem}{k}" in avoid:
        k += 1
    return f"{stem}{k}"


def subst(t: Term, name: str, value: Term) -> Term:
    """Capture-avoiding ``t[value/name]``."""
    if name not in t.free:
        return t
    if isinstance(t, Var):
        return value
    if isinstance(t, App):
        return App(subst(t.fun, name, value), subst(t.arg, name, value))
    # Abs with name free in body
    var, body = t.var, t.body
    if var in value.free:
        new = fresh_name(var, value.free | body.free | {name})
        body = subst(body, var, Var(new))
        var = new
    return Abs(var, subst(body, name, value))


def substitute_all(t: Term, assignment: Mapping[str, Term]) -> Term:
    for name, value in assignment.items():
        t = subst(t, name, value)
    return t


def beta_step(t: Term) -> Term | None:
    """One leftmost-outermost β-step, or ``None`` for a normal form."""
    if isinstance(t, App):
        if isinstance(t.fun, Abs):
            return subst(t.fun.body, t.fun.var, t.arg)
        fun = beta_step(t.fun)
        if fun is not None:
            return App(fun, t.arg)
        arg = beta_step(t.arg)
        if arg is not None:
            return App(t.fun, arg)
        return None
    if isinstance(t, Abs):
        body = beta_step(t.body)
        return None if body is None else Abs(t.var, body)
    return None


def reducts(t: Term) -> list[Term]:
    """Every term reachable from ``t`` by contracting exactly one redex."""
    out = []
    if isinstance(t, App):
        if isinstance(t.fun, Abs):
            out.append(subst(t.fun.body, t.fun.var, t.arg))
        out.extend(App(f, t.arg) for f in reducts(t.fun))
        out.extend(App(t.fun, a) for a in reducts(t.arg))
    elif isinstance(t, Abs):
        out.extend(Abs(t.var, b) for b in reducts(t.body))
    return out


@dataclass(frozen=True)
class FuelExhausted:
    term: Term
    fuel: int


def normalize(t: Term, fuel: int = 1000) -> Term | FuelExhausted:
    if fuel < 0:
        raise InvalidArgument("fuel must be non-negative")
    for _ in range(fuel):
        nxt = beta_step(t)
        if nxt is None:
            return t
        t = nxt
    return t if beta_step(t) is None else FuelExhausted(t, fuel)


def alpha_equal(s: Term, t: Term) -> bool:
    def go(s, t, env_s, env_t, depth):
        if isinstance(s, Var) and isinstance(t, Var):
            ds, dt = env_s.get(s.name), env_t.get(t.name)
            if ds is None and dt is None:
                return s.name == t.name
            return ds == dt
        if isinstance(s, Param) and isinstance(t, Param):
            return s.value == t.value
        if isinstance(s, App) and isinstance(t, App):
            return go(s.fun, t.fun, env_s, env_t, depth) and go(s.arg, t.arg, env_s, env_t, depth)
        if isinstance(s, Abs) and isinstance(t, Abs):
            return go(s.body, t.body, {**env_s, s.var: depth}, {**env_t, t.var: depth}, depth + 1)
        return False
    return go(s, t, {}, {}, 0)


# -- parsing ------------------------------------------------------------------

BUILTIN_SOURCE = {
    "k": r"\x y. x",
    "kbar": r"\x y. y",
    "s": r"\x y z. x z (y z)",
    "p": r"\x y z. z x y",
    "p1": r"\x. x (\x y. x)",
    "p2": r"\x. x (\x y. y)",
    "j1": r"\x z w. z x",
    "j2": r"\x z w. w x",
    "e": r"\x z. z x",
    # Turing's fixed-point combinator: y f reduces to f (y f) in two steps
    "y": r"(\x f. f (x x f)) (\x f. f (x x f))",
}
_builtins: dict[str, Term] = {}


def builtin(name: str) -> Term:
    try:
        return _builtins[name]
    except KeyError:
        pass
    if name not in BUILTIN_SOURCE:
        raise InvalidArgument(f"unknown built-in {name!r}")
    t = _builtins[name] = parse_term(BUILTIN_SOURCE[name], builtins=False)
    return t


_TOKEN = re.compile(r"\s*(?:(?P<lam>\\|λ)|(?P<dot>\.)|(?P<lp>\()|(?P<rp>\))"
                    r"|(?P<param>#[^\s().\\λ#]+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<bad>\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        kind = m.lastgroup
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", m.start(kind), text)
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _TermParser:
    def __init__(self, text, algebra, params, builtins):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.algebra = algebra
        self.params = params or {}
        self.builtins = builtins

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = tok[1] or "end of input"
            raise ParseError(f"expected {kind}, found {what!r}", tok[2], self.text)
        self.i += 1
        return tok

    def term(self, bound):
        if self.peek()[0] == "lam":
            self.take("lam")
            names = [self.take("ident")[1]]
            while self.peek()[0] == "ident":
                names.append(self.take("ident")[1])
            self.take("dot")
            body = self.term(bound | set(names))
            return lam(" ".join(names), body)
        head = self.atom(bound)
        while True:
            kind = self.peek()[0]
            if kind == "lam":
                return App(head, self.term(bound))
            if kind in ("ident", "param", "lp"):
                head = App(head, self.atom(bound))
            else:
                return head

    def atom(self, bound):
        kind, value, pos = self.peek()
        if kind == "lp":
            self.take("lp")
            t = self.term(bound)
            self.take("rp")
            return t
        if kind == "ident":
            self.i += 1
            if value in bound or not self.builtins or value not in BUILTIN_SOURCE:
                return Var(value)
            return builtin(value)
        if kind == "param":
            self.i += 1
            name = value[1:]
            if name in self.params:
                return Param(int(self.params[name]))
            if self.algebra is not None:
                try:
                    return Param(self.algebra.element(name))
                except InvalidArgument:
                    raise ParseError(f"unknown parameter {value!r}", pos, self.text) from None
            if name.isdigit():
                return Param(int(name))
            raise ParseError(f"unknown parameter {value!r}", pos, self.text)
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos, self.text)


def parse_term(text: str, algebra: ImplicativeAlgebra | None = None,
               params: Mapping[str, int] | None = None, builtins: bool = True) -> Term:
    p = _TermParser(text, algebra, params, builtins)
    t = p.term(frozenset())
    p.take("eof")
    if algebra is not None:
        _check_params(t, algebra)
    return t


def _check_params(t, algebra):
    stack = [t]
    while stack:
        t = stack.pop()
        if isinstance(t, Param):
            if not 0 <= t.value < algebra.size:
                raise InvalidArgument(f"parameter {t.value} is not an element of {algebra!r}")
        elif isinstance(t, App):
            stack += [t.fun, t.arg]
        elif isinstance(t, Abs):
            stack.append(t.body)


# -- encoding -----------------------------------------------------------------

class Encoder:
    """Compiles terms into elements of one algebra, memoized on
    (term, values of its free variables). Recomputing an entry is harmless,
    so the cache needs no locking beyond the GIL's dict atomicity."""

    def __init__(self, algebra: ImplicativeAlgebra):
        self.algebra = algebra
        self.memo: dict = {}

    def encode(self, t: Term, env: Mapping[str, int] | None = None) -> int:
        env = dict(env or {})
        missing = t.free - env.keys()
        if missing:
            raise InvalidArgument(f"term has unbound free variables {sorted(missing)}")
        return self._enc(t, env)

    def _enc(self, t, env):
        if isinstance(t, Param):
            return t.value
        if isinstance(t, Var):
            return env[t.name]
        key = (t, tuple([env[v] for v in t.fvs])) if t.fvs else t
        memo = self.memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        alg = self.algebra
        if isinstance(t, App):
            value = alg.app_table[self._enc(t.fun, env)][self._enc(t.arg, env)]
        else:
            var, body = t.var, t.body
            saved = env.get(var)
            imp = alg.imp_table
            meet = alg.lattice.meet_table
            value = alg.top
            for a in alg.elements:
                env[var] = a
                value = meet[value][imp[a][self._enc(body, env)]]
            if saved is None:
                del env[var]
            else:
                env[var] = saved
        memo[key] = value
        return value


_encoders: "weakref.WeakKeyDictionary[ImplicativeAlgebra, Encoder]" = weakref.WeakKeyDictionary()


def encoder(algebra: ImplicativeAlgebra) -> Encoder:
    enc = _encoders.get(algebra)
    if enc is None:
        enc = _encoders[algebra] = Encoder(algebra)
    return enc


def encode(t: Term, algebra: ImplicativeAlgebra) -> int:
    if t.free:
        raise InvalidArgument(f"cannot encode open term {show(t)}")
    return encoder(algebra)._enc(t, {})


def apply_op(a: int, b: int, algebra: ImplicativeAlgebra) -> int:
    return algebra.app_table[a][b]


def conj(a, b, algebra):
    return algebra.conj(a, b)


def disj(a, b, algebra):
    return algebra.disj(a, b)


def uforall(family: Iterable[int], algebra) -> int:
    return algebra.uforall(family)


def uexists(family: Iterable[int], algebra) -> int:
    return algebra.uexists(family)


def in_separator(a: int, algebra) -> bool:
    return algebra.in_separator(a)


# -- sequents -----------------------------------------------------------------

@dataclass(frozen=True)
class Judgement:
    """``x1:a1, ..., xn:an |- term : target`` with element-valued context."""
    context: tuple
    term: Term
    target: int

    def __post_init__(self):
        object.__setattr__(self, "context", tuple((str(x), int(a)) for x, a in self.context))


def check_sequent(j: Judgement, algebra: ImplicativeAlgebra) -> bool:
    env = dict(j.context)
    missing = j.term.free - env.keys()
    if missing:
        raise InvalidArgument(f"unbound free variables {sorted(missing)} in judgement")
    value = encoder(algebra)._enc(j.term, env)
    return algebra.leq(value, j.target)


def parse_judgement(text: str, algebra: ImplicativeAlgebra) -> Judgement:
    """``x:a, y:b |- term : c`` where ``a, b, c`` are element labels."""
    if "|-" not in text:
        raise ParseError("judgement needs '|-'", None, text)
    ctx_text, rest = text.split("|-", 1)
    if ":" not in rest:
        raise ParseError("judgement needs ': target'", None, text)
    term_text, target_text = rest.rsplit(":", 1)
    context = []
    for item in filter(None, (c.strip() for c in ctx_text.split(","))):
        if ":" not in item:
            raise ParseError(f"context entry {item!r} needs 'name:element'", None, text)
        name, label = (s.strip() for s in item.split(":", 1))
        context.append((name, _element(algebra, label)))
    bound = {name for name, _ in context}
    p = _TermParser(term_text, algebra, None, True)
    term = p.term(frozenset(bound))
    p.take("eof")
    return Judgement(tuple(context), term, _element(algebra, target_text.strip()))


def _element(algebra, label):
    try:
        return algebra.element(label.lstrip("#"))
    except InvalidArgument as exc:
        raise ParseError(str(exc), None, label) from None
