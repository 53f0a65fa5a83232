"""Realizers for equality, membership and substitution in the truncated universe.

Every realizer is an encoded lambda term. Each construction comes with a
verifier that compares the element against the bound it is supposed to
satisfy, tuple by tuple, and reports the first failing tuple.
"""
from __future__ import annotations

import itertools
import random
import weakref
from dataclasses import dataclass, field

from ..algebra import ImplicativeAlgebra
from ..errors import InvalidArgument, VerificationFailure
from ..terms import App, Param, Term, Var, app, builtin, encode, lam, parse_term, substitute_all
from ..universe import Universe
from .formula import (And, BExists, BForall, Bot, ContextedFormula, Eq, Exists, Forall, Imp, Mem, Or,
                      expand)
from .interp import argument_tuples, interpreter

# Lambda-term templates. Upper-case names are holes filled by substitution.
RHO_STEP = r"\r. p (\x. e (p x r)) (\x. e (p x r))"
J_TERM = r"\x. e (p x RHO)"
SIGMA_TERM = r"\x. p (p2 x) (p1 x)"
# a = b /\ c = a  ->  c = b, from the membership transport S1
S3_FROM_S1 = (r"\x. p (\y. S1 (p (p1 x) ((p1 (p2 x)) y)))"
              r" (\y. S1 (p (SIG (p2 x)) ((p2 (p1 x)) y)))")
# a = b /\ a in c  ->  b in c
S2_FROM_S3 = r"\x. (p2 x) (\y. e (p (p1 y) (S3 (p (p1 x) (p2 y)))))"
# a = b /\ c in a  ->  c in b
S1_FROM_S2 = r"\x. (p2 x) (\y. S2 (p (p2 y) ((p1 (p1 x)) (p1 y))))"
H_STEP = r"\h x. x (\y. h x)"


def _t(text: str, **holes: Term) -> Term:
    return substitute_all(parse_term(text), holes)


def core_terms() -> dict[str, Term]:
    """Closed pure terms for rho, j, sigma, s1, s2, s3 and h."""
    y = builtin("y")
    rho = App(y, _t(RHO_STEP))
    sigma = _t(SIGMA_TERM)
    r = Var("r")
    s1_step = lam("r", _t(S1_FROM_S2, S2=_t(S2_FROM_S3, S3=_t(S3_FROM_S1, S1=r, SIG=sigma))))
    s1 = App(y, s1_step)
    s3 = _t(S3_FROM_S1, S1=s1, SIG=sigma)
    s2 = _t(S2_FROM_S3, S3=s3)
    return {
        "rho": rho,
        "j": _t(J_TERM, RHO=rho),
        "sigma": sigma,
        "s1": s1,
        "s2": s2,
        "s3": s3,
        "h": App(y, _t(H_STEP)),
    }


@dataclass(frozen=True)
class CoreRealizers:
    rho: int
    j: int
    sigma: int
    s1: int
    s2: int
    s3: int
    h: int

    NAMES = ("rho", "j", "sigma", "s1", "s2", "s3", "h")

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.NAMES}


_core_cache: "weakref.WeakKeyDictionary[ImplicativeAlgebra, CoreRealizers]" = weakref.WeakKeyDictionary()


def encode_core_realizers(alg: ImplicativeAlgebra) -> CoreRealizers:
    hit = _core_cache.get(alg)
    if hit is None:
        terms = core_terms()
        hit = _core_cache[alg] = CoreRealizers(**{k: encode(t, alg) for k, t in terms.items()})
    return hit


@dataclass
class BoundCheck:
    """One realizer-versus-bound comparison over a finite range of tuples."""
    name: str
    realizer: int | None  # None when the realizer varies with the case
    ok: bool = True
    cases: int = 0
    witness: tuple | None = None
    target: int | None = None  # meet of the bound over the checked range

    def as_dict(self, alg) -> dict:
        out = {"name": self.name, "ok": self.ok, "cases": self.cases}
        if self.realizer is not None:
            out["realizer"] = alg.label(self.realizer)
        if self.target is not None:
            out["target"] = alg.label(self.target)
        if self.witness is not None:
            out["witness"] = [f"w{a}" if isinstance(a, int) else a for a in self.witness]
        return out


def check_bound(name: str, realizer: int, cases, alg: ImplicativeAlgebra) -> BoundCheck:
    """``cases`` yields ``(tuple, bound_value)``; realizer must sit below every bound."""
    leq = alg.lattice.leq_table
    meet = alg.lattice.meet_table
    result = BoundCheck(name, realizer)
    target = alg.top
    for tup, bound in cases:
        result.cases += 1
        target = meet[target][bound]
        if result.ok and not leq[realizer][bound]:
            result.ok = False
            result.witness = tuple(tup)
    result.target = target
    return result


def _core_bounds(U: Universe, core: CoreRealizers) -> list[BoundCheck]:
    alg = U.algebra
    imp, conj = alg.imp_table, alg.conj_table
    eq, mem = U.eq_value, U.mem_value
    W = U.elements
    checks = [
        check_bound("rho: a = a", core.rho, (((a,), eq(a, a)) for a in W), alg),
        check_bound("j: a(u) -> u in a", core.j,
                    (((a, u), imp[v][mem(u, a)]) for a in W for u, v in U.graph(a)), alg),
        check_bound("sigma: a = b -> b = a", core.sigma,
                    (((a, b), imp[eq(a, b)][eq(b, a)]) for a in W for b in W), alg),
    ]
    triples = list(itertools.product(W, repeat=3))
    checks.append(check_bound("s1: a = b /\\ c in a -> c in b", core.s1,
                              ((t, imp[conj[eq(t[0], t[1])][mem(t[2], t[0])]][mem(t[2], t[1])]) for t in triples),
                              alg))
    checks.append(check_bound("s2: a = b /\\ a in c -> b in c", core.s2,
                              ((t, imp[conj[eq(t[0], t[1])][mem(t[0], t[2])]][mem(t[1], t[2])]) for t in triples),
                              alg))
    checks.append(check_bound("s3: a = b /\\ c = a -> c = b", core.s3,
                              ((t, imp[conj[eq(t[0], t[1])][eq(t[2], t[0])]][eq(t[2], t[1])]) for t in triples),
                              alg))
    return checks


def induction_bound(U: Universe, h: int, pred, name: str = "h") -> BoundCheck:
    """``h <= eps -> P(a)`` for every ``a``, with ``eps`` the bounded induction premise for ``P``."""
    alg = U.algebra
    imp = alg.imp_table
    eps = induction_premise(U, pred)
    return check_bound(name, h, (((a,), imp[eps][pred(a)]) for a in U.elements), alg)


def induction_premise(U: Universe, pred) -> int:
    alg = U.algebra
    imp = alg.imp_table
    return alg.uforall(imp[alg.uforall(imp[v][pred(u)] for u, v in U.graph(a))][pred(a)]
                       for a in U.elements)


def _sample_predicates(U: Universe, seed: int = 0, count: int = 8):
    alg = U.algebra
    empty = U.empty()
    yield "constant", (lambda a, c=alg.bottom: c)
    yield "a = empty", (lambda a: U.eq_value(a, empty))
    yield "empty in a", (lambda a: U.mem_value(empty, a))
    yield "a in a", (lambda a: U.mem_value(a, a))
    rng = random.Random(seed)
    for k in range(count):
        table = {a: rng.choice(list(alg.elements)) for a in U.elements}
        yield f"random-{k}", table.__getitem__


def verify_core_realizers(U: Universe, core: CoreRealizers | None = None) -> list[BoundCheck]:
    alg = U.algebra
    core = core or encode_core_realizers(alg)
    checks = _core_bounds(U, core)
    for label, pred in _sample_predicates(U):
        checks.append(induction_bound(U, core.h, pred, f"h: induction on {label}"))
    for name in CoreRealizers.NAMES:
        value = getattr(core, name)
        checks.append(BoundCheck(f"{name} in separator", value, ok=value in alg.separator, cases=1))
    return checks


def core_realizers(U: Universe, verify: bool = True) -> CoreRealizers:
    """Encode the core realizers; with ``verify`` every bound is checked on ``U``."""
    core = encode_core_realizers(U.algebra)
    if verify:
        for check in verify_core_realizers(U, core):
            if not check.ok:
                raise VerificationFailure(check.name, check.witness,
                                          f"realizer {U.algebra.label(check.realizer)}")
    return core


# -- substitution realizers ---------------------------------------------------

def _p(*args):
    return app(builtin("p"), *args)


def _p1(t):
    return App(builtin("p1"), t)


def _p2(t):
    return App(builtin("p2"), t)


def tuple_term(components, top: int) -> Term:
    """Right-nested pair of the components; the empty tuple is the top element."""
    components = list(components)
    if not components:
        return Param(top)
    if len(components) == 1:
        return components[0]
    return _p(components[0], tuple_term(components[1:], top))


def project(t: Term, i: int, n: int) -> Term:
    """Component ``i`` of a right-nested ``n``-tuple ``t``."""
    if not 0 <= i < n:
        raise InvalidArgument(f"component {i} out of range for a {n}-tuple")
    for _ in range(i):
        t = _p2(t)
    return t if i == n - 1 else _p1(t)


def tuple_eq_value(U: Universe, xs, ys) -> int:
    conj = U.algebra.conj_table
    values = [U.eq_value(a, b) for a, b in zip(xs, ys)]
    if not values:
        return U.algebra.top
    acc = values[-1]
    for v in reversed(values[:-1]):
        acc = conj[v][acc]
    return acc


class SubstitutionRealizers:
    """Builds ``r`` with ``r <= (a = b) x phi(a) -> phi(b)`` by recursion on ``phi``."""

    def __init__(self, alg: ImplicativeAlgebra):
        self.alg = alg
        self.core = encode_core_realizers(alg)
        self._memo: dict = {}

    def element(self, formula, context: tuple) -> int:
        key = (formula, context)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = encode(self.term(formula, context), self.alg)
        return hit

    def term(self, f, ctx: tuple) -> Term:
        c = self.core
        n = len(ctx)
        x = Var("x")
        E, V = _p1(x), _p2(x)
        comp = [project(E, i, n) for i in range(n)]
        P = Param
        if isinstance(f, Bot):
            return lam("x", V)
        if isinstance(f, Mem):
            i, j = ctx.index(f.left), ctx.index(f.right)
            inner = App(P(c.s2), _p(comp[i], V))
            return lam("x", App(P(c.s1), _p(comp[j], inner)))
        if isinstance(f, Eq):
            i, j = ctx.index(f.left), ctx.index(f.right)
            inner = App(P(c.s3), _p(V, App(P(c.sigma), comp[i])))
            return lam("x", App(P(c.s3), _p(comp[j], inner)))
        if isinstance(f, And):
            rl, rr = P(self.element(f.left, ctx)), P(self.element(f.right, ctx))
            return lam("x", _p(App(rl, _p(E, _p1(V))), App(rr, _p(E, _p2(V)))))
        if isinstance(f, Or):
            rl, rr = P(self.element(f.left, ctx)), P(self.element(f.right, ctx))
            left = lam("a", App(builtin("j1"), App(rl, _p(E, Var("a")))))
            right = lam("b", App(builtin("j2"), App(rr, _p(E, Var("b")))))
            return lam("x", app(V, left, right))
        if isinstance(f, Imp):
            rl, rr = P(self.element(f.left, ctx)), P(self.element(f.right, ctx))
            flipped = tuple_term([App(P(c.sigma), t) for t in comp], self.alg.top)
            body = App(rr, _p(E, App(V, App(rl, _p(flipped, Var("z"))))))
            return lam("x z", body)
        if isinstance(f, (Exists, Forall)):
            if f.var in ctx:
                raise InvalidArgument(f"bound variable {f.var} clashes with context {list(ctx)}")
            inner_ctx = ctx + (f.var,)
            rb = P(self.element(f.body, inner_ctx))
            extended = tuple_term(comp + [P(c.rho)], self.alg.top)
            if isinstance(f, Exists):
                return lam("x", App(V, lam("w", App(builtin("e"), App(rb, _p(extended, Var("w")))))))
            return lam("x", App(rb, _p(extended, V)))
        if isinstance(f, (BExists, BForall)):
            return self.term(expand(f), ctx)
        raise InvalidArgument(f"not a formula: {f!r}")


_subst_cache: "weakref.WeakKeyDictionary[ImplicativeAlgebra, SubstitutionRealizers]" = weakref.WeakKeyDictionary()


def substitution_realizers(alg: ImplicativeAlgebra) -> SubstitutionRealizers:
    hit = _subst_cache.get(alg)
    if hit is None:
        hit = _subst_cache[alg] = SubstitutionRealizers(alg)
    return hit


def substitution_bound(cf: ContextedFormula, U: Universe, realizer: int) -> BoundCheck:
    alg = U.algebra
    imp, conj = alg.imp_table, alg.conj_table
    it = interpreter(U, "direct")
    n = cf.arity
    values = {args: it.evaluate(cf, args) for args in argument_tuples(U, n)}

    def cases():
        for xs in values:
            for ys in values:
                yield xs + ys, imp[conj[tuple_eq_value(U, xs, ys)][values[xs]]][values[ys]]

    return check_bound(f"substitution for {cf}", realizer, cases(), alg)


def subst_realizer(cf: ContextedFormula, U: Universe, verify: bool = True) -> int:
    """The substitution realizer for ``cf``, checked over ``W_N^n x W_N^n`` when ``verify``."""
    r = substitution_realizers(U.algebra).element(expand(cf.formula), cf.context)
    if verify:
        check = substitution_bound(cf, U, r)
        if not check.ok:
            raise VerificationFailure(check.name, check.witness, f"realizer {U.algebra.label(r)}")
        if r not in U.algebra.separator:
            raise VerificationFailure(f"substitution realizer for {cf} in separator", None,
                                      U.algebra.label(r))
    return r


# -- bounded quantifiers --------------------------------------------------------

@dataclass
class BoundedEquivalence:
    formula: str
    forward: BoundCheck          # direct -> bounded form
    backward: BoundCheck         # bounded form -> direct
    entails_forward: bool        # separator entailment, independent of the realizers
    entails_backward: bool
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.forward.ok and self.backward.ok and self.entails_forward and self.entails_backward)


def bounded_form_value(cf: ContextedFormula, args, U: Universe) -> int:
    """Top-level bounded quantifier read over the graph of its bound; the body is direct."""
    f = cf.formula
    if not isinstance(f, (BExists, BForall)):
        raise InvalidArgument("outermost construct is not a bounded quantifier")
    alg = U.algebra
    it = interpreter(U, "direct")
    env = dict(zip(cf.context, args))
    bound = env[f.bound]
    vals = []
    for u, w in U.graph(bound):
        env[f.var] = u
        body = it.value(f.body, env)
        vals.append(alg.conj_table[w][body] if isinstance(f, BExists) else alg.imp_table[w][body])
    return alg.uexists(vals) if isinstance(f, BExists) else alg.uforall(vals)


def bounded_quantifier_terms(cf: ContextedFormula, alg: ImplicativeAlgebra) -> tuple[Term, Term]:
    """(direct -> bounded, bounded -> direct) realizer terms for a bounded quantifier."""
    f = cf.formula
    if not isinstance(f, (BExists, BForall)):
        raise InvalidArgument("outermost construct is not a bounded quantifier")
    core = encode_core_realizers(alg)
    inner_ctx = cf.context + (f.var,)
    r = Param(substitution_realizers(alg).element(expand(f.body), inner_ctx))
    rho, sigma, j = Param(core.rho), Param(core.sigma), Param(core.j)
    x, y, z = Var("x"), Var("y"), Var("z")
    e = builtin("e")
    m = cf.arity
    if isinstance(f, BExists):
        l = _p(tuple_term([rho] * m + [App(sigma, _p2(z))], alg.top), _p2(y))
        forward = lam("x", App(x, lam("y", App(_p1(y), lam("z", App(e, _p(_p1(z), App(r, l))))))))
        backward = lam("x", App(x, lam("y", App(e, _p(App(e, _p(_p1(y), rho)), _p2(y))))))
    else:
        forward = lam("x y", App(x, App(j, y)))
        eqs = tuple_term([rho] * m + [_p2(z)], alg.top)
        backward = lam("x y", App(y, lam("z", App(r, _p(eqs, App(x, _p1(z)))))))
    return forward, backward


def bounded_quantifier_equiv(cf: ContextedFormula, U: Universe) -> BoundedEquivalence:
    alg = U.algebra
    imp = alg.imp_table
    it = interpreter(U, "direct")
    fwd_t, bwd_t = bounded_quantifier_terms(cf, alg)
    fwd, bwd = encode(fwd_t, alg), encode(bwd_t, alg)
    pairs = [(args, it.evaluate(cf, args), bounded_form_value(cf, args, U))
             for args in argument_tuples(U, cf.arity)]
    forward = check_bound("direct -> bounded", fwd, ((a, imp[d][b]) for a, d, b in pairs), alg)
    backward = check_bound("bounded -> direct", bwd, ((a, imp[b][d]) for a, d, b in pairs), alg)
    sep = alg.separator
    ent_f = alg.uforall(imp[d][b] for _, d, b in pairs) in sep
    ent_b = alg.uforall(imp[b][d] for _, d, b in pairs) in sep
    notes = []
    if fwd not in sep or bwd not in sep:
        notes.append("a realizer lies outside the separator")
        forward.ok = forward.ok and fwd in sep
        backward.ok = backward.ok and bwd in sep
    return BoundedEquivalence(str(cf), forward, backward, ent_f, ent_b, notes)
