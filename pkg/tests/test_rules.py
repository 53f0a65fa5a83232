import random

import pytest

from implicative.rules import RULES, check_rule, instantiate
from implicative.terms import check_sequent


def test_seventeen_rules():
    assert len(RULES) == 17


@pytest.mark.parametrize("rule", RULES)
def test_rule_is_sound_on_c3_half(rule, c3_half):
    result = check_rule(rule, c3_half, trials=40, seed=1)
    assert result.ok, result


@pytest.mark.parametrize("rule", RULES)
def test_rule_is_sound_on_non_heyting(rule, c3_weak):
    assert check_rule(rule, c3_weak, trials=40, seed=2).ok


def test_premises_are_generated_true(m2):
    rng = random.Random(3)
    for rule in RULES:
        inst = instantiate(rule, rng, m2)
        assert all(check_sequent(j, m2) for j in inst.premises)


def test_an_unsound_rule_would_be_caught(b2):
    # weakening downwards is not a rule; the checker must be able to refute it
    rng = random.Random(0)
    refuted = False
    for _ in range(50):
        inst = instantiate("top", rng, b2)
        premise = inst.premises[0]
        lowered = type(premise)(premise.context, premise.term, b2.bottom)
        if not check_sequent(lowered, b2):
            refuted = True
    assert refuted
