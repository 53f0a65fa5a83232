"""Independent two-valued evaluator for the B2 universe truncated at depth N.

Sets are frozensets of (member, bit) pairs built level by level; membership
and equality are the classical extensional readings, computed without any
code from the package except the formula AST.
"""
from functools import lru_cache
from itertools import product

from implicative.izf.formula import And, BExists, BForall, Bot, Eq, Exists, Forall, Imp, Mem, Or


def hierarchy(depth):
    universe = [frozenset()]  # W_1 holds only the empty function
    for _ in range(depth - 1):
        prev = list(universe)
        nxt = []
        for choice in product((None, 0, 1), repeat=len(prev)):
            nxt.append(frozenset((u, b) for u, b in zip(prev, choice) if b is not None))
        universe = nxt
    return universe


@lru_cache(maxsize=None)
def member(a, b):
    return any(bit == 1 and equal(t, a) for t, bit in b)


@lru_cache(maxsize=None)
def subset(a, b):
    return all(bit == 0 or member(t, b) for t, bit in a)


@lru_cache(maxsize=None)
def equal(a, b):
    return subset(a, b) and subset(b, a)


def truth(f, env, universe):
    if isinstance(f, Bot):
        return False
    if isinstance(f, Mem):
        return member(env[f.left], env[f.right])
    if isinstance(f, Eq):
        return equal(env[f.left], env[f.right])
    if isinstance(f, And):
        return truth(f.left, env, universe) and truth(f.right, env, universe)
    if isinstance(f, Or):
        return truth(f.left, env, universe) or truth(f.right, env, universe)
    if isinstance(f, Imp):
        return (not truth(f.left, env, universe)) or truth(f.right, env, universe)
    if isinstance(f, (Exists, Forall)):
        results = (truth(f.body, {**env, f.var: a}, universe) for a in universe)
        return any(results) if isinstance(f, Exists) else all(results)
    if isinstance(f, (BExists, BForall)):
        bound = env[f.bound]
        results = (truth(f.body, {**env, f.var: a}, universe) for a in universe if member(a, bound))
        return any(results) if isinstance(f, BExists) else all(results)
    raise TypeError(f)


def holds(cf, depth):
    universe = hierarchy(depth)
    return all(truth(cf.formula, dict(zip(cf.context, args)), universe)
               for args in product(universe, repeat=cf.arity))


EXTRA_SENTENCES = (
    "forall x. x = x",
    "forall x. ~(x in x)",
    "exists x. exists y. x in y",
    "forall x. forall y. x in y -> ~(y in x)",
    "exists x. forall y. y in x",
    "forall x. exists y. x in y",
    "forall x. forall y. x = y -> y = x",
    "forall x. forall y. forall z. x = y /\\ y in z -> x in z",
    "exists x. exists y. ~(x = y) /\\ sub(x,y)",
    "forall x. forall y in x. exists z in x. z = y",
    "forall x. exists y in x. True",
    "forall x. (exists y in x. True) \\/ forall y in x. False",
    "exists x. forall y in x. forall z in y. False",
    "forall x. forall y. sub(x,y) \\/ ~sub(x,y)",
    "exists u. forall x in u. exists y in u. x in y",
    "forall x. forall y. exists z. forall w in z. w = x \\/ w = y",
)


def corpus():
    """Closed sentences: the axiom bodies, schema instances and a few extras."""
    from implicative.izf import axiom_formula, parse_formula
    from implicative.izf.axioms import AXIOM_TEXT, DEFAULT_INSTANCES

    sentences = [parse_formula(t) for t in (*AXIOM_TEXT.values(), *EXTRA_SENTENCES)]
    for name in ("Sep", "Ind", "Col"):
        sentences += [axiom_formula(name, parse_formula(t)) for t in DEFAULT_INSTANCES[name]]
    return sentences
