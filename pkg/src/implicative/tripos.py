"""The implicative tripos restricted to finite index sets.

Predicates over a finite set ``I`` are maps ``I -> A`` preordered by
separator entailment. The posetal reflection is never materialized: mutual
entailment plays the role of equality.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .algebra import ImplicativeAlgebra
from .errors import InvalidArgument


@dataclass(frozen=True)
class Predicate:
    index: tuple
    values: tuple

    def __post_init__(self):
        if len(self.index) != len(self.values):
            raise InvalidArgument("predicate must be total on its index set")

    @classmethod
    def from_map(cls, index: Sequence[Hashable], fn) -> "Predicate":
        index = tuple(index)
        if callable(fn):
            return cls(index, tuple(fn(i) for i in index))
        return cls(index, tuple(fn[i] for i in index))

    @classmethod
    def constant(cls, index, value: int) -> "Predicate":
        index = tuple(index)
        return cls(index, (value,) * len(index))

    def __call__(self, i):
        return self.values[self.index.index(i)]

    def as_dict(self) -> dict:
        return dict(zip(self.index, self.values))


@dataclass(frozen=True)
class FiniteFunction:
    source: tuple
    target: tuple
    images: tuple  # images[k] is the image of source[k]

    def __post_init__(self):
        if len(self.images) != len(self.source):
            raise InvalidArgument("function must be total on its source")
        tgt = set(self.target)
        if any(y not in tgt for y in self.images):
            raise InvalidArgument("function maps outside its target")

    @classmethod
    def from_map(cls, source, target, fn) -> "FiniteFunction":
        source, target = tuple(source), tuple(target)
        return cls(source, target, tuple(fn(x) if callable(fn) else fn[x] for x in source))

    @classmethod
    def identity(cls, index) -> "FiniteFunction":
        index = tuple(index)
        return cls(index, index, index)

    def __call__(self, x):
        return self.images[self.source.index(x)]

    def fiber(self, y) -> list:
        return [x for x, fx in zip(self.source, self.images) if fx == y]


def _same_index(phi, psi):
    if phi.index != psi.index:
        raise InvalidArgument("predicates live over different index sets")


def entailment_value(phi: Predicate, psi: Predicate, alg: ImplicativeAlgebra) -> int:
    _same_index(phi, psi)
    imp = alg.imp_table
    return alg.meet(imp[a][b] for a, b in zip(phi.values, psi.values))


def entails(phi: Predicate, psi: Predicate, alg: ImplicativeAlgebra) -> bool:
    return entailment_value(phi, psi, alg) in alg.separator


def equivalent(phi: Predicate, psi: Predicate, alg: ImplicativeAlgebra) -> bool:
    return entails(phi, psi, alg) and entails(psi, phi, alg)


def _pointwise(op, phi, psi):
    _same_index(phi, psi)
    return Predicate(phi.index, tuple(op(a, b) for a, b in zip(phi.values, psi.values)))


def pred_imp(phi, psi, alg):
    return _pointwise(alg.imp, phi, psi)


def pred_conj(phi, psi, alg):
    return _pointwise(alg.conj, phi, psi)


def pred_disj(phi, psi, alg):
    return _pointwise(alg.disj, phi, psi)


def pred_forall(phi: Predicate, alg) -> int:
    return alg.uforall(phi.values)


def pred_exists(phi: Predicate, alg) -> int:
    return alg.uexists(phi.values)


def reindex(f: FiniteFunction, psi: Predicate) -> Predicate:
    if f.target != psi.index:
        raise InvalidArgument("reindexing function does not land in the predicate's index set")
    lookup = psi.as_dict()
    return Predicate(f.source, tuple(lookup[y] for y in f.images))


def _along(f, phi, quantifier):
    if f.source != phi.index:
        raise InvalidArgument("predicate is not over the function's source")
    fibers = {y: [] for y in f.target}
    for v, y in zip(phi.values, f.images):
        fibers[y].append(v)
    return Predicate(f.target, tuple(quantifier(fibers[y]) for y in f.target))


def exists_along(f: FiniteFunction, phi: Predicate, alg) -> Predicate:
    return _along(f, phi, alg.uexists)


def forall_along(f: FiniteFunction, phi: Predicate, alg) -> Predicate:
    return _along(f, phi, alg.uforall)


def generic_predicate(alg: ImplicativeAlgebra) -> Predicate:
    return Predicate(tuple(alg.elements), tuple(alg.elements))


def classifying_map(phi: Predicate, alg) -> FiniteFunction:
    """The map ``I -> A`` whose reindexing of the generic predicate is ``phi``."""
    return FiniteFunction(phi.index, tuple(alg.elements), phi.values)


def pullback(f: FiniteFunction, g: FiniteFunction):
    """Canonical pullback of the cospan ``f: I -> K <- J: g``."""
    if f.target != g.target:
        raise InvalidArgument("not a cospan: targets differ")
    apex = tuple((i, j) for i, fi in zip(f.source, f.images)
                 for j, gj in zip(g.source, g.images) if fi == gj)
    p1 = FiniteFunction(apex, f.source, tuple(i for i, _ in apex))
    p2 = FiniteFunction(apex, g.source, tuple(j for _, j in apex))
    return apex, p1, p2


def beck_chevalley_check(f: FiniteFunction, g: FiniteFunction, phi: Predicate, alg) -> bool:
    """Both quantifiers commute with reindexing across the pullback of ``f`` and ``g``."""
    _, p1, p2 = pullback(f, g)
    ok_exists = equivalent(reindex(g, exists_along(f, phi, alg)),
                           exists_along(p2, reindex(p1, phi), alg), alg)
    ok_forall = equivalent(reindex(g, forall_along(f, phi, alg)),
                           forall_along(p2, reindex(p1, phi), alg), alg)
    return ok_exists and ok_forall


# -- law suite --------------------------------------------------------------

@dataclass
class LawResult:
    name: str
    cases: int = 0
    failures: int = 0
    witnesses: list = field(default_factory=list)

    MAX_WITNESSES = 10

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, holds: bool, witness) -> None:
        self.cases += 1
        if not holds:
            self.failures += 1
            if len(self.witnesses) < self.MAX_WITNESSES:
                self.witnesses.append(witness)


def _index_sets(size_bound):
    return [tuple(range(k)) for k in range(size_bound + 1)]


def _all_predicates(index, alg):
    for values in itertools.product(alg.elements, repeat=len(index)):
        yield Predicate(index, values)


def _all_functions(source, target):
    for images in itertools.product(target, repeat=len(source)):
        yield FiniteFunction(source, target, images)


def run_law_suite(alg: ImplicativeAlgebra, size_bound: int = 3, *, exhaustive: bool = True,
                  samples: int = 500, seed: int = 0) -> list[LawResult]:
    """Preorder, Heyting prealgebra, adjunction and Beck-Chevalley laws.

    Exhaustive mode enumerates every predicate and function over index sets of
    size at most ``size_bound``; sampled mode draws ``samples`` seeded cases per law.
    """
    rng = random.Random(seed)
    sets = _index_sets(size_bound)
    A = tuple(alg.elements)

    def rand_pred(index):
        return Predicate(index, tuple(rng.choice(A) for _ in index))

    def rand_fun(source, target):
        return FiniteFunction(source, target, tuple(rng.choice(target) for _ in source))

    def preds(index, k):
        if exhaustive:
            return itertools.product(list(_all_predicates(index, alg)), repeat=k)
        return (tuple(rand_pred(index) for _ in range(k)) for _ in range(samples))

    results = []
    preorder = LawResult("preorder")
    heyting = LawResult("heyting-prealgebra")
    strict = LawResult("reindex-preserves-operations")
    for index in sets:
        top, bot = Predicate.constant(index, alg.top), Predicate.constant(index, alg.bottom)
        for phi, psi, chi in preds(index, 3):
            preorder.record(entails(phi, phi, alg), ("refl", phi))
            if entails(phi, psi, alg) and entails(psi, chi, alg):
                preorder.record(entails(phi, chi, alg), ("trans", phi, psi, chi))
            heyting.record(
                entails(chi, pred_conj(phi, psi, alg), alg) == (entails(chi, phi, alg) and entails(chi, psi, alg)),
                ("conj", chi, phi, psi))
            heyting.record(
                entails(pred_disj(phi, psi, alg), chi, alg) == (entails(phi, chi, alg) and entails(psi, chi, alg)),
                ("disj", phi, psi, chi))
            heyting.record(
                entails(chi, pred_imp(phi, psi, alg), alg) == entails(pred_conj(chi, phi, alg), psi, alg),
                ("imp", chi, phi, psi))
            heyting.record(entails(phi, top, alg) and entails(bot, phi, alg), ("bounds", phi))
    for src in sets:
        for tgt in sets:
            if not tgt and src:
                continue
            funs = list(_all_functions(src, tgt)) if exhaustive else [rand_fun(src, tgt) for _ in range(4)]
            for f in funs:
                for phi, psi in preds(tgt, 2):
                    for op in (pred_conj, pred_disj, pred_imp):
                        strict.record(reindex(f, op(phi, psi, alg)) == op(reindex(f, phi), reindex(f, psi), alg),
                                      (op.__name__, f, phi, psi))
    results += [preorder, heyting, strict]

    adj_exists = LawResult("exists-left-adjoint")
    adj_forall = LawResult("forall-right-adjoint")
    for src in sets:
        for tgt in sets:
            if not tgt and src:
                continue
            funs = list(_all_functions(src, tgt)) if exhaustive else [rand_fun(src, tgt) for _ in range(4)]
            for f in funs:
                if exhaustive:
                    pairs = itertools.product(list(_all_predicates(src, alg)), list(_all_predicates(tgt, alg)))
                else:
                    pairs = ((rand_pred(src), rand_pred(tgt)) for _ in range(max(1, samples // 16)))
                for phi, psi in pairs:
                    adj_exists.record(
                        entails(exists_along(f, phi, alg), psi, alg) == entails(phi, reindex(f, psi), alg),
                        (f, phi, psi))
                    adj_forall.record(
                        entails(reindex(f, psi), phi, alg) == entails(psi, forall_along(f, phi, alg), alg),
                        (f, phi, psi))
    results += [adj_exists, adj_forall]

    bc = LawResult("beck-chevalley")
    for I in sets:
        for J in sets:
            for K in sets:
                if not K and (I or J):
                    continue
                if exhaustive:
                    cospans = itertools.product(list(_all_functions(I, K)), list(_all_functions(J, K)))
                    for f, g in cospans:
                        for phi in _all_predicates(I, alg):
                            bc.record(beck_chevalley_check(f, g, phi, alg), (f, g, phi))
                else:
                    for _ in range(max(1, samples // 32)):
                        f, g, phi = rand_fun(I, K), rand_fun(J, K), rand_pred(I)
                        bc.record(beck_chevalley_check(f, g, phi, alg), (f, g, phi))
    results.append(bc)

    generic = LawResult("generic-predicate")
    G = generic_predicate(alg)
    for index in sets:
        for (phi,) in preds(index, 1):
            generic.record(reindex(classifying_map(phi, alg), G) == phi, (phi,))
    results.append(generic)
    return results
