import itertools

import pytest

from implicative.errors import InvalidArgument
from implicative.tripos import (FiniteFunction, Predicate, beck_chevalley_check, entails, equivalent, exists_along,
                                forall_along, generic_predicate, pred_conj, pred_exists, pred_imp, pullback, reindex,
                                run_law_suite)

I2 = (0, 1)


def test_entailment_examples(b2):
    phi, psi = Predicate(I2, (1, 0)), Predicate(I2, (1, 1))
    assert entails(phi, phi, b2)
    assert entails(phi, psi, b2) and not entails(psi, phi, b2)
    bot = Predicate.constant(I2, b2.bottom)
    assert all(entails(bot, Predicate(I2, v), b2) for v in itertools.product(b2.elements, repeat=2))


def test_index_mismatch(b2):
    with pytest.raises(InvalidArgument):
        entails(Predicate((0,), (1,)), Predicate(I2, (1, 1)), b2)


def test_pointwise_operations(c3_half):
    alg = c3_half
    for values in itertools.product(alg.elements, repeat=2):
        phi = Predicate(I2, values)
        assert equivalent(pred_conj(phi, phi, alg), phi, alg)
        assert equivalent(pred_imp(Predicate.constant(I2, alg.top), phi, alg), phi, alg)


def test_reindex_examples(c3):
    psi = Predicate(("a", "b"), (0, 2))
    assert reindex(FiniteFunction.identity(psi.index), psi) == psi
    const = FiniteFunction((0, 1, 2), psi.index, ("b", "b", "b"))
    assert reindex(const, psi).values == (2, 2, 2)
    collapse = FiniteFunction(I2, ("*",), ("*", "*"))
    assert reindex(collapse, Predicate(("*",), (1,))).values == (1, 1)


def test_quantifiers_along_maps(b2, c3):
    phi = Predicate(I2, (1, 0))
    ident = FiniteFunction.identity(I2)
    assert equivalent(exists_along(ident, phi, b2), phi, b2)
    assert equivalent(forall_along(ident, phi, b2), phi, b2)
    to_point = FiniteFunction(I2, ("*",), ("*", "*"))
    assert exists_along(to_point, phi, c3).values == (pred_exists(phi, c3),)
    # adjunction over every predicate pair for I={0,1} -> J={*}
    for pv in itertools.product(b2.elements, repeat=2):
        for qv in b2.elements:
            p, q = Predicate(I2, pv), Predicate(("*",), (qv,))
            assert entails(exists_along(to_point, p, b2), q, b2) == entails(p, reindex(to_point, q), b2)


def test_empty_fibers(c3):
    f = FiniteFunction((), ("*",), ())
    phi = Predicate((), ())
    assert exists_along(f, phi, c3).values == (c3.uexists([]),)
    assert forall_along(f, phi, c3).values == (c3.top,)


def test_generic_predicate(b2):
    G = generic_predicate(b2)
    assert G.values == (0, 1)
    for values in itertools.product(b2.elements, repeat=3):
        chi = Predicate((0, 1, 2), values)
        classify = FiniteFunction((0, 1, 2), G.index, values)
        assert reindex(classify, G) == chi


def test_beck_chevalley(b2, c3_half):
    square_f = FiniteFunction((0, 1), ("*",), ("*", "*"))
    square_g = FiniteFunction((0, 1, 2), ("*",), ("*",) * 3)
    for alg in (b2, c3_half):
        for values in itertools.product(alg.elements, repeat=2):
            assert beck_chevalley_check(square_f, square_g, Predicate((0, 1), values), alg)
    ident = FiniteFunction.identity(I2)
    assert beck_chevalley_check(ident, ident, Predicate(I2, (0, 1)), b2)
    P, _, _ = pullback(square_f, square_g)
    assert len(P) == 6


def test_law_suite_small(c3_weak):
    results = run_law_suite(c3_weak, 2, exhaustive=False, samples=64, seed=4)
    assert all(r.ok for r in results)
