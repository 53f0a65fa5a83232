import itertools

import pytest

from implicative.errors import InvalidArgument
from implicative.lattice import CompleteLattice, build_chain, build_from_order, build_powerset, validate_lattice


def test_meet_and_join_on_chains():
    b2 = build_chain(2)
    assert b2.meet([0, 1]) == 0
    assert b2.meet([]) == 1
    assert b2.join([0, 1]) == 1
    assert b2.join([]) == 0
    c3 = build_chain(3, ["0", "h", "1"])
    h = c3.element("h")
    assert c3.meet([h, c3.top]) == h
    assert c3.join([c3.bottom, h]) == h


def test_foreign_element_is_rejected():
    with pytest.raises(InvalidArgument):
        build_chain(2).meet([5])


def test_antichain_without_top_is_invalid():
    report = validate_lattice(["a", "b"], [[True, False], [False, True]])
    assert not report.ok
    assert ("join-missing", (0, 1)) in report.violations


def test_diamond_from_order():
    m2 = build_from_order([("a", "c"), ("b", "c"), ("bot", "a"), ("bot", "b")])
    assert m2.size == 4
    a, b = m2.element("a"), m2.element("b")
    assert m2.meet([a, b]) == m2.element("bot")
    assert m2.join([a, b]) == m2.element("c")


def test_cyclic_order_is_rejected():
    with pytest.raises(InvalidArgument):
        build_from_order([("a", "b"), ("b", "a")])


def test_powerset_is_boolean():
    p2 = build_powerset(2)
    assert p2.size == 4
    assert p2.leq(0b01, 0b11) and not p2.leq(0b01, 0b10)
    assert p2.meet([0b01, 0b10]) == 0 and p2.join([0b01, 0b10]) == 0b11


@pytest.mark.parametrize("lat", [build_chain(3), build_powerset(2),
                                 build_from_order([("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])])
def test_meet_is_greatest_lower_bound(lat):
    E = lat.elements
    for a, b, c in itertools.product(E, E, E):
        m = lat.meet([a, b])
        assert lat.leq(m, a) and lat.leq(m, b)
        if lat.leq(c, a) and lat.leq(c, b):
            assert lat.leq(c, m)


@pytest.mark.parametrize("lat", [build_chain(3), build_powerset(2)])
def test_meet_and_join_split_over_unions(lat):
    subsets = [s for k in range(lat.size + 1) for s in itertools.combinations(lat.elements, k)]
    for S in subsets:
        for T in subsets:
            assert lat.meet(S + T) == lat.meet([lat.meet(S), lat.meet(T)])
            assert lat.join(S + T) == lat.join([lat.join(S), lat.join(T)])


def test_order_extraction_round_trip():
    for lat in (build_chain(3), build_powerset(2)):
        again = build_from_order(lat.order_pairs(), lat.labels)
        assert again.leq_table == lat.leq_table


def test_unvalidated_construction_can_be_checked_later():
    lat = CompleteLattice(["0", "1"], [[True, True], [False, True]])
    assert lat.top == 1 and lat.bottom == 0
