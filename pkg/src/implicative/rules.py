"""The typing rules for ``Γ ⊢ t : a`` as executable checks.

Each rule instantiates its premises at random (terms, context, target
elements chosen so every premise holds), then the conclusion is decided by
:func:`check_sequent`. A sound rule never yields a false conclusion.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import ImplicativeAlgebra
from .gen import random_term
from .terms import Abs, App, Judgement, Param, Term, Var, app, builtin, check_sequent, encoder

RULES = ("var", "param", "weaken", "bot", "top", "app", "abs", "pair", "proj1", "proj2",
         "inj1", "inj2", "case", "forall-intro", "forall-elim", "exists-intro", "exists-elim")

# bound names used by the rules; kept clear of the built-in combinator names
X, W = "x", "w"


@dataclass
class RuleInstance:
    rule: str
    premises: list
    conclusion: Judgement
    side: dict = field(default_factory=dict)


class _Gen:
    def __init__(self, rng: random.Random, alg: ImplicativeAlgebra, depth: int):
        self.rng, self.alg, self.depth = rng, alg, depth
        self.enc = encoder(alg)
        k = rng.randint(0, 2)
        self.context = tuple((f"g{i}", rng.randrange(alg.size)) for i in range(k))

    def term(self, extra=()):
        scope = [n for n, _ in self.context] + list(extra)
        return random_term(self.rng, self.rng.randint(0, self.depth), scope, list(self.alg.elements))

    def value(self, t: Term, extra=()) -> int:
        return self.enc.encode(t, dict(self.context) | dict(extra))

    def above(self, a: int) -> int:
        return self.rng.choice([b for b in self.alg.elements if self.alg.leq(a, b)])

    def element(self) -> int:
        return self.rng.randrange(self.alg.size)

    def judge(self, t: Term, target: int, extra=()) -> Judgement:
        return Judgement(self.context + tuple(extra), t, target)

    def typed(self, target_ok, fallback):
        """A random term whose value satisfies ``target_ok``; else ``fallback()``."""
        for _ in range(8):
            t = self.term()
            if target_ok(self.value(t)):
                return t
        return fallback()


def _family(g: _Gen, size=None):
    return [g.element() for _ in range(size or g.rng.randint(1, 3))]


def instantiate(rule: str, rng: random.Random, alg: ImplicativeAlgebra, depth: int = 3) -> RuleInstance:
    g = _Gen(rng, alg, depth)
    A, leq = alg, alg.leq
    p, p1, p2 = builtin("p"), builtin("p1"), builtin("p2")
    j1, j2, e = builtin("j1"), builtin("j2"), builtin("e")

    if rule == "var":
        if not g.context:
            g.context = (("g0", g.element()),)
        name, a = rng.choice(g.context)
        return RuleInstance(rule, [], g.judge(Var(name), a))
    if rule == "param":
        a = g.element()
        return RuleInstance(rule, [], g.judge(Param(a), a))
    if rule == "weaken":
        t = g.term()
        a = g.above(g.value(t))
        b = g.above(a)
        return RuleInstance(rule, [g.judge(t, a)], g.judge(t, b), {"a<=b": leq(a, b)})
    if rule == "bot":
        t = g.typed(lambda v: v == A.bottom, lambda: Param(A.bottom))
        return RuleInstance(rule, [g.judge(t, A.bottom)], g.judge(t, g.element()))
    if rule == "top":
        t = g.term()
        return RuleInstance(rule, [g.judge(t, g.above(g.value(t)))], g.judge(t, A.top))
    if rule == "app":
        t, s = g.term(), g.term()
        a = g.above(g.value(s))
        vt = g.value(t)
        b = rng.choice([b for b in A.elements if leq(vt, A.imp(a, b))])
        return RuleInstance(rule, [g.judge(t, A.imp(a, b)), g.judge(s, a)], g.judge(App(t, s), b))
    if rule == "abs":
        a = g.element()
        t = g.term([X])
        b = g.above(g.value(t, {X: a}))
        return RuleInstance(rule, [g.judge(t, b, [(X, a)])], g.judge(Abs(X, t), A.imp(a, b)))
    if rule == "pair":
        t, s = g.term(), g.term()
        a, b = g.above(g.value(t)), g.above(g.value(s))
        return RuleInstance(rule, [g.judge(t, a), g.judge(s, b)], g.judge(app(p, t, s), A.conj(a, b)))
    if rule in ("proj1", "proj2"):
        a, b = g.element(), g.element()
        t = g.typed(lambda v: leq(v, A.conj(a, b)), lambda: app(p, Param(a), Param(b)))
        proj, target = (p1, a) if rule == "proj1" else (p2, b)
        return RuleInstance(rule, [g.judge(t, A.conj(a, b))], g.judge(App(proj, t), target))
    if rule in ("inj1", "inj2"):
        t = g.term()
        a, b = g.above(g.value(t)), g.element()
        if rule == "inj2":
            a, b = b, a
        inj = j1 if rule == "inj1" else j2
        return RuleInstance(rule, [g.judge(t, a if rule == "inj1" else b)],
                            g.judge(App(inj, t), A.disj(a, b)))
    if rule == "case":
        a, b = g.element(), g.element()
        t = g.typed(lambda v: leq(v, A.disj(a, b)), lambda: App(j1, Param(a)))
        u, v = g.term([X]), g.term([W])
        c = g.above(A.join([g.value(u, {X: a}), g.value(v, {W: b})]))
        premises = [g.judge(t, A.disj(a, b)), g.judge(u, c, [(X, a)]), g.judge(v, c, [(W, b)])]
        return RuleInstance(rule, premises, g.judge(app(t, Abs(X, u), Abs(W, v)), c))
    if rule == "forall-intro":
        t = g.term()
        vt = g.value(t)
        family = [g.above(vt) for _ in range(rng.randint(0, 3))]
        return RuleInstance(rule, [g.judge(t, a) for a in family], g.judge(t, A.uforall(family)))
    if rule == "forall-elim":
        t = g.term()
        vt = g.value(t)
        family = [g.above(vt) for _ in range(rng.randint(1, 3))]
        i = rng.randrange(len(family))
        return RuleInstance(rule, [g.judge(t, A.uforall(family))], g.judge(t, family[i]), {"index": i})
    if rule == "exists-intro":
        t = g.term()
        family = _family(g)
        i = rng.randrange(len(family))
        family[i] = g.above(g.value(t))
        return RuleInstance(rule, [g.judge(t, family[i])], g.judge(App(e, t), A.uexists(family)), {"index": i})
    if rule == "exists-elim":
        family = _family(g)
        ex = A.uexists(family)
        t = g.typed(lambda v: leq(v, ex), lambda: App(e, Param(family[0])))
        u = g.term([X])
        b = g.above(A.join([g.value(u, {X: a}) for a in family]))
        premises = [g.judge(t, ex)] + [g.judge(u, b, [(X, a)]) for a in family]
        return RuleInstance(rule, premises, g.judge(App(t, Abs(X, u)), b))
    raise ValueError(f"unknown rule {rule!r}")


@dataclass
class RuleResult:
    rule: str
    trials: int
    premise_failures: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations and not self.premise_failures


def check_rule(rule: str, alg: ImplicativeAlgebra, trials: int = 100, seed: int = 0, depth: int = 3) -> RuleResult:
    rng = random.Random(f"{rule}:{seed}")
    bad_premises, violations = 0, []
    for _ in range(trials):
        inst = instantiate(rule, rng, alg, depth)
        if not all(check_sequent(j, alg) for j in inst.premises) or not inst.side.get("a<=b", True):
            bad_premises += 1
            continue
        if not check_sequent(inst.conclusion, alg):
            violations.append(inst)
    return RuleResult(rule, trials, bad_premises, violations)


def check_all_rules(alg: ImplicativeAlgebra, trials: int = 100, seed: int = 0) -> list[RuleResult]:
    return [check_rule(r, alg, trials, seed) for r in RULES]
