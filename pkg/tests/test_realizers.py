import pytest

from implicative.algebra import ImplicativeAlgebra, validate_algebra
from implicative.errors import VerificationFailure
from implicative.izf import bounded_quantifier_equiv, core_realizers, parse_formula, subst_realizer, verify_core_realizers
from implicative.izf.realizers import core_terms, encode_core_realizers, substitution_bound, substitution_realizers
from implicative.lattice import build_powerset
from implicative.terms import App, Var, alpha_equal, app, builtin, normalize, parse_term
from implicative.universe import build_universe

SUBST_CORPUS = [
    "[x] |- x = x", "[x, y] |- x in y", "[] |- False", "[x, y] |- x in y /\\ y in x",
    "[x, y] |- x in y \\/ x = y", "[x, y] |- x in y -> y = x", "[x] |- exists y. y in x",
    "[x] |- forall y. y in x", "[x, y] |- sub(x, y)", "[x] |- exists y in x. y = y",
    "[x, y] |- forall z in y. z in x \\/ False",
]


@pytest.fixture(scope="module")
def noncommutative():
    """A realizability-style algebra on the 4-element Boolean lattice whose product is not commutative."""
    alg = ImplicativeAlgebra(build_powerset(2), [[3, 3, 3, 3], [2, 3, 2, 3], [1, 1, 3, 3], [0, 0, 2, 3]], [2, 3],
                             name="noncommutative")
    assert validate_algebra(alg).ok
    assert any(alg.conj(a, b) != alg.conj(b, a) for a in alg.elements for b in alg.elements)
    return alg


def test_b2_core_realizers_are_top(w_b2_3):
    core = core_realizers(w_b2_3)
    assert set(core.as_dict().values()) == {1}


def test_core_realizers_on_c3_half(c3_half):
    U = build_universe(c3_half, 2)
    checks = verify_core_realizers(U)
    assert all(c.ok for c in checks)
    assert {c.name.split(":")[0] for c in checks} >= {"rho", "j", "sigma", "s1", "s2", "s3"}


def test_core_realizers_on_non_heyting(w_weak_2):
    core = core_realizers(w_weak_2)
    alg = w_weak_2.algebra
    assert all(v in alg.separator for v in core.as_dict().values())


def test_core_realizers_on_noncommutative(noncommutative):
    U = build_universe(noncommutative, 2)
    assert all(c.ok for c in verify_core_realizers(U))


def test_core_terms_are_closed_and_pure():
    for name, t in core_terms().items():
        assert t.closed, name


def test_sigma_swaps_pairs():
    sigma = core_terms()["sigma"]
    swapped = normalize(App(sigma, app(builtin("p"), Var("u"), Var("v"))), 50)
    assert alpha_equal(swapped, normalize(app(builtin("p"), Var("v"), Var("u")), 50))
    # the unrepaired reading rebuilds the pair unchanged
    literal = parse_term(r"\x. p (p1 x) (p2 x)")
    same = normalize(App(literal, app(builtin("p"), Var("u"), Var("v"))), 50)
    assert alpha_equal(same, normalize(app(builtin("p"), Var("u"), Var("v")), 50))


def test_a_wrong_realizer_is_caught(w_c3_2):
    from implicative.izf.realizers import check_bound
    alg = w_c3_2.algebra
    U = w_c3_2
    check = check_bound("too strong", alg.top, (((a,), U.mem_value(a, a)) for a in U.elements), alg)
    assert not check.ok and check.witness is not None


@pytest.mark.parametrize("text", SUBST_CORPUS)
def test_substitution_realizers(text, w_b2_2, w_c3_2, w_weak_2):
    cf = parse_formula(text)
    for U in (w_b2_2, w_c3_2, w_weak_2):
        r = subst_realizer(cf, U)
        assert r in U.algebra.separator


def test_bottom_substitution_realizer_is_second_projection(c3):
    r = substitution_realizers(c3).element(parse_formula("[] |- False").formula, ())
    from implicative.terms import encode
    assert r == encode(parse_term(r"\x. p2 x"), c3)


def test_substitution_bound_reports_failure(w_weak_2):
    cf = parse_formula("[x, y] |- x in y")
    check = substitution_bound(cf, w_weak_2, w_weak_2.algebra.top)
    assert not check.ok and len(check.witness) == 4


@pytest.mark.parametrize("text", ["[y] |- exists z in y. z = z", "[y] |- forall z in y. False",
                                  "[x, y] |- sub(x, y)", "[x, y] |- exists z in y. z in x"])
def test_bounded_quantifiers(text, w_b2_2, w_c3_2):
    for U in (w_b2_2, w_c3_2):
        result = bounded_quantifier_equiv(parse_formula(text), U)
        assert result.ok, result


def test_subset_agrees_with_inclusion_valuation(w_b2_3):
    from implicative.izf.interp import predicate
    from implicative.tripos import Predicate, equivalent
    U = w_b2_3
    sub = predicate(parse_formula("[x, y] |- sub(x, y)"), U)
    val = Predicate(sub.index, tuple(U.subseteq_value(a, b) for a, b in sub.index))
    assert equivalent(sub, val, U.algebra)


def test_failed_verification_raises(monkeypatch, w_weak_2):
    import implicative.izf.realizers as R
    alg = w_weak_2.algebra
    broken = R.CoreRealizers(**{**encode_core_realizers(alg).as_dict(), "rho": alg.top})
    monkeypatch.setattr(R, "encode_core_realizers", lambda _alg: broken)
    with pytest.raises(VerificationFailure, match="rho"):
        R.core_realizers(w_weak_2)
