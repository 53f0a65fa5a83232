"""Seeded random λ-terms for property checks."""
from __future__ import annotations

import random
from typing import Sequence

from .terms import Abs, App, Param, Term, Var


def random_term(rng: random.Random, depth: int, scope: Sequence[str] = (),
                params: Sequence[int] = (), leaf_weight: float = 0.25) -> Term:
    """A term of depth at most ``depth`` whose free variables lie in ``scope``.

    Leaves are variables from ``scope`` or parameters from ``params``. When
    neither exists a leaf is replaced by an identity abstraction, so the depth
    bound can be exceeded by one in that corner.
    """
    leaves = [Var(v) for v in scope] + [Param(a) for a in params]
    if depth <= 0 or (leaves and rng.random() < leaf_weight):
        if not leaves:
            return Abs("v0", Var("v0"))
        return rng.choice(leaves)
    if rng.random() < 0.55:
        return App(random_term(rng, depth - 1, scope, params, leaf_weight),
                   random_term(rng, depth - 1, scope, params, leaf_weight))
    var = f"v{len(scope)}"
    return Abs(var, random_term(rng, depth - 1, [*scope, var], params, leaf_weight))


def random_closed_term(rng: random.Random, depth: int, params: Sequence[int] = ()) -> Term:
    return random_term(rng, depth, (), params)


def random_pure_term(rng: random.Random, depth: int) -> Term:
    return random_term(rng, depth, (), ())
