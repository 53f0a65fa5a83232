import pytest

from implicative.errors import InvalidArgument
from implicative.izf import AXIOMS, AxiomOptions, axiom_formula, check_axiom, parse_formula, run_axiom_suite
from implicative.izf.axioms import AXIOM_TEXT, DEFAULT_INSTANCES
from implicative.universe import build_universe


@pytest.fixture(scope="module")
def b2_suite(w_b2_3):
    return run_axiom_suite(w_b2_3)


def test_every_axiom_verified_on_b2(b2_suite):
    assert {r.name for r in b2_suite} == set(AXIOMS)
    failed = [(r.name, r.instance, r.status) for r in b2_suite if not r.verdict]
    assert not failed


def test_realizers_in_separator(b2_suite, b2):
    for r in b2_suite:
        if r.realizer is not None:
            assert r.realizer in b2.separator


def test_truncation_notes_on_inf_and_col(b2_suite):
    for r in b2_suite:
        if r.name in ("Inf", "Col"):
            assert r.notes, r.name


def test_emp_and_pair_examples(w_b2_3):
    emp = check_axiom("Emp", w_b2_3)
    assert emp.verdict and emp.realizer == 1
    pair = check_axiom("Pair", w_b2_3)
    assert pair.verdict
    assert any(c.cases == 9 for c in pair.checks)


def test_inf_with_small_bound(w_b2_3):
    rep = check_axiom("Inf", w_b2_3, options=AxiomOptions(inf_bound=2))
    assert rep.verdict
    assert any("cut at 2" in n for n in rep.notes)


@pytest.mark.parametrize("name", ["c3", "c3_half", "c3_weak", "m2", "magma1"])
def test_suite_on_other_algebras(name):
    from implicative.io import shipped_algebra
    U = build_universe(shipped_algebra(name), 2)
    reports = run_axiom_suite(U, options=AxiomOptions(full_model=False))
    assert all(r.verdict for r in reports), [(r.name, r.instance) for r in reports if not r.verdict]


def test_raising_depth_keeps_witness_checks_passing(b2):
    low = {(r.name, r.instance): r.verdict for r in run_axiom_suite(build_universe(b2, 2))}
    high = {(r.name, r.instance): r.verdict for r in run_axiom_suite(build_universe(b2, 3))}
    assert all(high[k] for k, v in low.items() if v)


def test_schema_sentences():
    sep = axiom_formula("Sep", parse_formula(DEFAULT_INSTANCES["Sep"][1]))
    assert sep.arity == 0
    ind = axiom_formula("Ind", parse_formula("[x] |- x = x"))
    assert "forall" in str(ind)
    with pytest.raises(InvalidArgument):
        check_axiom("Choice", build_universe(__import__("implicative").shipped_algebra("b2"), 1))


def test_axiom_sentences_parse():
    for text in AXIOM_TEXT.values():
        assert parse_formula(text).arity == 0


def test_budget_is_reported_not_failed(b2):
    U = build_universe(b2, 3, budget=30)
    rep = check_axiom("Pow", U)
    assert rep.status in ("verified", "budget")


def test_report_serialisation_uses_labels(w_c3_2):
    rep = check_axiom("Ext", w_c3_2)
    d = rep.as_dict(w_c3_2.algebra)
    assert d["verdict"] == "verified"
    labels = set(w_c3_2.algebra.lattice.labels)
    for c in d["checks"]:
        if "realizer" in c:
            assert c["realizer"] in labels
