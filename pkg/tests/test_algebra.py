import pytest

from implicative.algebra import heyting_algebra, heyting_implication, powerset_of_magma, validate_algebra
from implicative.errors import NotHeytingAlgebra
from implicative.lattice import build_chain, build_from_order


def test_b2_is_classical_and_valid(b2):
    assert validate_algebra(b2).ok
    assert [[b2.imp(a, b) for b in (0, 1)] for a in (0, 1)] == [[1, 1], [0, 1]]
    assert b2.classical


def test_c3_heyting_implication_and_half_separator():
    c3 = build_chain(3, ["0", "h", "1"])
    imp = heyting_implication(c3)
    for a in c3.elements:
        for b in c3.elements:
            assert imp[a][b] == (c3.top if a <= b else b)
    alg = heyting_algebra(c3, ["h", "1"])
    assert validate_algebra(alg).ok
    assert alg.K == alg.S == alg.top


def test_degenerate_separator_is_valid():
    assert validate_algebra(heyting_algebra(build_chain(2), "all")).ok


def test_m3_is_not_heyting():
    m3 = build_from_order([("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])
    with pytest.raises(NotHeytingAlgebra) as info:
        heyting_implication(m3)
    assert info.value.witness is not None


def test_one_element_magma():
    alg = powerset_of_magma(["e"], [[0]])
    assert validate_algebra(alg).ok
    assert alg.K == alg.S == 1
    # empty antecedent: vacuous, so the whole carrier
    assert all(alg.imp(0, b) == 1 for b in alg.elements)


def test_left_projection_magma_reports_its_failures():
    alg = powerset_of_magma(["a", "b"], [[0, 0], [1, 1]])
    report = validate_algebra(alg)
    assert report.ok == (not report.violations)
    for law, witness in report.violations:
        assert isinstance(law, str) and witness is not None


def test_non_upward_closed_separator_is_reported():
    alg = heyting_algebra(build_chain(3, ["0", "h", "1"]), ["h"])
    laws = {law for law, _ in validate_algebra(alg).violations}
    assert "separator-upward-closed" in laws


@pytest.mark.parametrize("name", ["b2", "c3", "c3_half", "m2", "magma1", "c3_weak"])
def test_shipped_algebras_validate(name):
    from implicative.io import shipped_algebra
    alg = shipped_algebra(name)
    assert validate_algebra(alg).ok
    assert alg.K in alg.separator and alg.S in alg.separator


def test_top_implication_is_identity_on_heyting(c3, m2):
    for alg in (c3, m2):
        assert all(alg.imp(alg.top, a) == a for a in alg.elements)


def test_c3_weak_is_not_heyting_but_valid(c3_weak):
    assert validate_algebra(c3_weak).ok
    h = c3_weak.element("h")
    assert c3_weak.imp(c3_weak.top, c3_weak.top) == c3_weak.top
    assert c3_weak.K == h
