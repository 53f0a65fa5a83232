import pytest

from implicative.errors import InvalidArgument
from implicative.izf import check_entailment, interpret, modes_equivalent, parse_formula, satisfies
from implicative.izf.interp import Interpreter
from implicative.terms import encode, parse_term
from implicative.universe import build_universe

CORPUS = [
    "[x] |- x = x", "[x, y] |- x in y", "[x, y] |- sub(x, y)", "[x] |- exists y in x. y = y",
    "[x] |- forall y in x. False", "[x, y] |- exists z in y. z in x \\/ x = z",
    "[x, y] |- (forall z in x. z in y) -> exists w. w = x",
]


def test_clauses(w_b2_2):
    U = w_b2_2
    e = U.empty()
    one, zero = U.intern([(e, 1)]), U.intern([(e, 0)])
    refl = parse_formula("[x] |- x = x")
    assert all(interpret(refl, (a,), U) == U.eq_value(a, a) for a in U.elements)
    inhabited = parse_formula("[x] |- exists y. y in x")
    assert interpret(inhabited, (one,), U) == 1
    assert interpret(inhabited, (zero,), U) == 0
    alg = U.algebra
    assert alg.leq(encode(parse_term(r"\x.x"), alg), interpret(parse_formula("[] |- False -> False"), (), U))


def test_arity_and_mode_errors(w_b2_2):
    with pytest.raises(InvalidArgument):
        interpret(parse_formula("[x] |- x = x"), (), w_b2_2)
    with pytest.raises(InvalidArgument):
        Interpreter(w_b2_2, "lazy")


@pytest.mark.parametrize("name", ["b2", "c3_half", "m2", "c3_weak"])
def test_reflexivity_holds_everywhere(name):
    from implicative.io import shipped_algebra
    U = build_universe(shipped_algebra(name), 2)
    assert satisfies(parse_formula("[x] |- x = x"), U).holds
    assert not satisfies(parse_formula("[] |- False"), U).holds


def test_extensionality_on_b2(w_b2_3):
    ext = parse_formula("[] |- forall x. forall y. sub(x,y) /\\ sub(y,x) -> x = y")
    assert satisfies(ext, w_b2_3).holds


def test_entailment_examples(w_c3_2):
    U = w_c3_2
    phi = parse_formula("[x] |- x = x")
    both = parse_formula("[x] |- x = x /\\ x in x")
    assert check_entailment(phi, phi, U)
    assert check_entailment(both, phi, U)
    assert check_entailment(parse_formula("[x, y] |- x = y"), parse_formula("[x, y] |- y = x"), U)
    with pytest.raises(InvalidArgument):
        check_entailment(phi, parse_formula("[y] |- y = y"), U)


@pytest.mark.parametrize("text", CORPUS)
def test_modes_agree_up_to_separator(text, w_b2_2, w_c3_2, w_weak_2):
    cf = parse_formula(text)
    for U in (w_b2_2, w_c3_2, w_weak_2):
        assert modes_equivalent(cf, U)


def test_heyting_conjunction_matches_meet(w_c3_2):
    from implicative.tripos import Predicate, equivalent
    from implicative.izf.interp import predicate
    U = w_c3_2
    alg = U.algebra
    phi, psi = parse_formula("[x, y] |- x in y"), parse_formula("[x, y] |- y = x")
    both = predicate(parse_formula("[x, y] |- x in y /\\ y = x"), U)
    p, q = predicate(phi, U), predicate(psi, U)
    meet = Predicate(p.index, tuple(alg.meet([a, b]) for a, b in zip(p.values, q.values)))
    assert equivalent(both, meet, alg)
