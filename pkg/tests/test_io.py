import json
import random

import pytest

from implicative.algebra import ImplicativeAlgebra, validate_algebra
from implicative.errors import ParseError
from implicative.io import (SHIPPED, InvalidAlgebra, algebra_from_dict, dump_algebra, fingerprint,
                            load_algebra, shipped_algebra)


@pytest.mark.parametrize("name", SHIPPED)
def test_shipped_algebras_validate(name):
    alg = shipped_algebra(name)
    assert validate_algebra(alg).ok


@pytest.mark.parametrize("name", SHIPPED)
def test_round_trip_preserves_fingerprint(name, tmp_path):
    alg = shipped_algebra(name)
    path = tmp_path / f"{name}.json"
    dump_algebra(alg, path)
    again = load_algebra(path)
    assert fingerprint(again) == fingerprint(alg)
    assert again.imp_table == alg.imp_table


def test_random_chain_round_trip():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(2, 5)
        labels = [f"e{i}" for i in range(n)]
        spec = {"elements": labels, "order": "chain", "separator": rng.sample(labels[1:], 1) + [labels[-1]]}
        alg = algebra_from_dict(spec)
        assert fingerprint(load_algebra(dump_algebra(alg))) == fingerprint(alg)


def test_fingerprint_ignores_name():
    a = algebra_from_dict({"name": "one", "elements": ["0", "1"], "order": "chain"})
    b = algebra_from_dict({"name": "two", "elements": ["0", "1"], "order": "chain"})
    assert fingerprint(a) == fingerprint(b)
    c = algebra_from_dict({"elements": ["0", "1"], "order": "chain", "separator": "all"})
    assert fingerprint(a) != fingerprint(c)


def test_powerset_order():
    alg = algebra_from_dict({"order": "powerset:2"})
    assert alg.lattice.labels == ("{}", "{0}", "{1}", "{0,1}")
    assert not alg.lattice.leq(1, 2) and alg.lattice.join([1, 2]) == 3


@pytest.mark.parametrize("spec", [
    {"elements": ["0", "1"], "order": "chain", "separator": ["2"]},
    {"elements": ["0", "1"], "order": "chain", "implication": [["1"]]},
    {"elements": ["0", "1"], "order": "chain", "implication": [["1", "x"], ["0", "1"]]},
    {"elements": ["0", "1"], "order": [["0", "q"]]},
    {"order": "tree"},
    {"order": "powerset:9"},
    [1, 2],
])
def test_malformed_definitions(spec):
    with pytest.raises(ParseError):
        algebra_from_dict(spec)


def test_bad_json_and_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_algebra("{not json")
    with pytest.raises(ParseError):
        load_algebra(tmp_path / "missing.json")


def test_antichain_is_not_a_lattice():
    with pytest.raises(InvalidAlgebra) as info:
        algebra_from_dict({"elements": ["a", "b"], "order": []})
    assert not info.value.report.ok


def test_json_string_source():
    alg = load_algebra(json.dumps({"elements": ["0", "1"], "order": "chain"}))
    assert isinstance(alg, ImplicativeAlgebra) and alg.size == 2
