import pytest

from implicative.errors import InvalidArgument, ParseError
from implicative.izf.formula import (And, BExists, BForall, Bot, ContextedFormula, Eq, Exists, Forall, Imp, Mem,
                                     Or, expand, parse_formula, show, substitute, top)


def test_subset_sugar():
    cf = parse_formula("[x,y] |- sub(x,y)")
    assert cf.context == ("x", "y")
    assert cf.formula == BForall("z", "x", Mem("z", "y"))


def test_emptyset_axiom():
    cf = parse_formula("[] |- exists x. forall y in x. False")
    assert cf.formula == Exists("x", BForall("y", "x", Bot()))


def test_equality_and_precedence():
    assert parse_formula("[x] |- x = x").formula == Eq("x", "x")
    f = parse_formula("[a,b] |- a in b /\\ b in a \\/ a = b -> False").formula
    assert f == Imp(Or(And(Mem("a", "b"), Mem("b", "a")), Eq("a", "b")), Bot())
    assert parse_formula("[] |- True").formula == top()
    assert parse_formula("[a] |- ~a in a").formula == Imp(Mem("a", "a"), Bot())


def test_implication_is_right_associative():
    f = parse_formula("[] |- False -> False -> False").formula
    assert f == Imp(Bot(), Imp(Bot(), Bot()))


def test_errors():
    with pytest.raises(ParseError):
        parse_formula("[x] |- x in y")
    with pytest.raises(ParseError):
        parse_formula("[x] |- x in")
    with pytest.raises(ParseError) as info:
        parse_formula("[x] |- x $ x")
    assert info.value.position is not None
    with pytest.raises(InvalidArgument):
        ContextedFormula(Mem("x", "x"), ("x", "x"))


def test_bound_variables_are_freshened_away_from_context():
    cf = parse_formula("[y] |- exists y. y in y")
    assert isinstance(cf.formula, Exists) and cf.formula.var != "y"


def test_round_trip_printing():
    for text in ["[x, y] |- forall z in x. z in y", "[] |- exists u. (exists x in u. False) /\\ True",
                 "[x] |- ~x in x \\/ x = x", "[a, b] |- (a in b -> b in a) -> a = b"]:
        cf = parse_formula(text)
        assert parse_formula(str(cf)) == cf


def test_expand_and_substitute():
    f = BExists("z", "y", Eq("z", "x"))
    assert expand(f) == Exists("z", And(Mem("z", "y"), Eq("z", "x")))
    g = substitute(Forall("y", Mem("x", "y")), "x", "y")
    assert isinstance(g, Forall) and g.var != "y" and g.body.left == "y"
    assert show(BForall("z", "x", Bot())) == "forall z in x. False"
