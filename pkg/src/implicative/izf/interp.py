"""Interpretation of formulas as A-valued functions on the truncated universe."""
from __future__ import annotations

import itertools
import weakref
from dataclasses import dataclass

from ..errors import InvalidArgument
from ..tripos import Predicate, entails
from ..universe import Universe
from .formula import (And, BExists, Bot, ContextedFormula, Eq, Exists, Forall, Formula, Imp,
                      Mem, Or)

MODES = ("direct", "bounded")


class Interpreter:
    """Memoized evaluator for one universe and one mode.

    ``direct`` unfolds bounded quantifiers by their definition and lets every
    quantifier range over the whole truncation; ``bounded`` evaluates
    ``exists z in y`` as a sum over the graph of ``y`` (and dually for forall).
    """

    def __init__(self, universe: Universe, mode: str = "direct"):
        if mode not in MODES:
            raise InvalidArgument(f"unknown interpretation mode {mode!r}; expected one of {MODES}")
        self.universe = universe
        self.mode = mode
        self._memo: dict = {}
        self._pinned: dict = {}  # keeps memoized formulas alive so their ids stay unique
        self._order: dict = {}

    def _fvs(self, f):
        key = id(f)
        hit = self._order.get(key)
        if hit is None:
            hit = self._order[key] = tuple(sorted(f.free))
            self._pinned[key] = f
        return hit

    def value(self, f: Formula, env: dict) -> int:
        fvs = self._fvs(f)
        key = (id(f), tuple([env[v] for v in fvs]))
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = self._eval(f, env)
        return hit

    def _eval(self, f, env):
        U = self.universe
        alg = U.algebra
        if isinstance(f, Bot):
            return alg.bottom
        if isinstance(f, Mem):
            return U.mem_value(env[f.left], env[f.right])
        if isinstance(f, Eq):
            return U.eq_value(env[f.left], env[f.right])
        if isinstance(f, And):
            return alg.conj_table[self.value(f.left, env)][self.value(f.right, env)]
        if isinstance(f, Or):
            return alg.disj_table[self.value(f.left, env)][self.value(f.right, env)]
        if isinstance(f, Imp):
            return alg.imp_table[self.value(f.left, env)][self.value(f.right, env)]
        if isinstance(f, (Exists, Forall)):
            values = self._range(f.var, f.body, env, U.elements)
            return alg.uexists(values) if isinstance(f, Exists) else alg.uforall(values)
        bound = env[f.bound]
        if self.mode == "direct":
            conj, imp = alg.conj_table, alg.imp_table
            members = [U.mem_value(b, bound) for b in U.elements]
            values = self._range(f.var, f.body, env, U.elements)
            if isinstance(f, BExists):
                return alg.uexists([conj[m][v] for m, v in zip(members, values)])
            return alg.uforall([imp[m][v] for m, v in zip(members, values)])
        graph = U.graph(bound)
        values = self._range(f.var, f.body, env, [u for u, _ in graph])
        if isinstance(f, BExists):
            conj = alg.conj_table
            return alg.uexists([conj[w][v] for (_, w), v in zip(graph, values)])
        imp = alg.imp_table
        return alg.uforall([imp[w][v] for (_, w), v in zip(graph, values)])

    def _range(self, var, body, env, domain):
        saved = env.get(var, None)
        had = var in env
        out = []
        for b in domain:
            env[var] = b
            out.append(self.value(body, env))
        if had:
            env[var] = saved
        else:
            env.pop(var, None)
        return out

    def evaluate(self, cf: ContextedFormula, args) -> int:
        args = tuple(args)
        if len(args) != cf.arity:
            raise InvalidArgument(f"formula has {cf.arity} context variables but {len(args)} arguments were given")
        for a in args:
            if not 0 <= a < len(self.universe.graphs):
                raise InvalidArgument(f"no W-element w{a}")
        return self.value(cf.formula, dict(zip(cf.context, args)))


_interpreters: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def interpreter(universe: Universe, mode: str = "direct") -> Interpreter:
    per = _interpreters.setdefault(universe, {})
    it = per.get(mode)
    if it is None:
        it = per[mode] = Interpreter(universe, mode)
    return it


def interpret(cf: ContextedFormula, args, universe: Universe, mode: str = "direct") -> int:
    return interpreter(universe, mode).evaluate(cf, args)


def argument_tuples(universe: Universe, n: int):
    return itertools.product(universe.elements, repeat=n)


def predicate(cf: ContextedFormula, universe: Universe, mode: str = "direct") -> Predicate:
    """The interpretation as a predicate over ``W_N^n``."""
    it = interpreter(universe, mode)
    index = tuple(argument_tuples(universe, cf.arity))
    return Predicate(index, tuple(it.evaluate(cf, args) for args in index))


@dataclass(frozen=True)
class Satisfaction:
    holds: bool
    value: int


def satisfies(cf: ContextedFormula, universe: Universe, mode: str = "direct") -> Satisfaction:
    """Meet of the interpretation over every argument tuple, tested against the separator."""
    alg = universe.algebra
    it = interpreter(universe, mode)
    value = alg.uforall(it.evaluate(cf, args) for args in argument_tuples(universe, cf.arity))
    return Satisfaction(value in alg.separator, value)


def check_entailment(phi: ContextedFormula, psi: ContextedFormula, universe: Universe,
                     mode: str = "direct") -> bool:
    if phi.context != psi.context:
        raise InvalidArgument(f"contexts differ: {list(phi.context)} vs {list(psi.context)}")
    alg = universe.algebra
    return entails(predicate(phi, universe, mode), predicate(psi, universe, mode), alg)


def modes_equivalent(cf: ContextedFormula, universe: Universe) -> bool:
    """Direct and bounded evaluation give mutually entailing predicates."""
    alg = universe.algebra
    d, b = predicate(cf, universe, "direct"), predicate(cf, universe, "bounded")
    return entails(d, b, alg) and entails(b, d, alg)
