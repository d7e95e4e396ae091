import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combproof.formula import (
    AND, OR, And, Bin, Formula, FormulaSyntaxError, Literal, Not, Or, Var, assignments,
    evaluate, is_tautology, leaves, lit, meet, parse_input, to_nnf, to_text,
)

from conftest import formulas, trees

P, Q, R = Var("P"), Var("Q"), Var("R")


def test_parse_peirce():
    assert parse_input("((P -> Q) -> P) -> P") == Bin("->", Bin("->", Bin("->", P, Q), P), P)


def test_parse_atom():
    assert parse_input("P") == P


def test_parse_error_offset():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_input("P & (Q |")
    assert info.value.offset == 8


@pytest.mark.parametrize("text, expected", [
    ("P -> Q -> R", Bin("->", P, Bin("->", Q, R))),
    ("P | Q | R", Bin("|", Bin("|", P, Q), R)),
    ("P & Q | R", Bin("|", Bin("&", P, Q), R)),
    ("~P & !Q", Bin("&", Not(P), Not(Q))),
    ("P | Q -> R & P", Bin("->", Bin("|", P, Q), Bin("&", R, P))),
    ("  x_1&(y2)  ", Bin("&", Var("x_1"), Var("y2"))),
])
def test_parse_precedence(text, expected):
    assert parse_input(text) == expected


@pytest.mark.parametrize("text, offset", [("", 0), ("P &", 3), ("P Q", 2), ("P $ Q", 2), ("(P", 2),
                                          ("P)", 1), ("P - Q", 2)])
def test_parse_errors(text, offset):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_input(text)
    assert info.value.offset == offset


def test_nnf_peirce():
    nnf = to_nnf(parse_input("((P -> Q) -> P) -> P"))
    assert nnf == Or(And(Or(lit("P", True), lit("Q")), lit("P", True)), lit("P"))


def test_nnf_small_cases():
    assert to_nnf(parse_input("~~P")) == lit("P")
    assert to_nnf(parse_input("~(P & Q)")) == Or(lit("P", True), lit("Q", True))
    assert to_nnf(parse_input("~(P -> Q)")) == And(lit("P"), lit("Q", True))


def test_print():
    assert to_text(Formula(lit("P"))) == "P"
    assert to_text(Formula(And(lit("P"), Or(lit("Q"), lit("R"))))) == "P & (Q | R)"
    assert to_text(Formula.parse("((P -> Q) -> P) -> P")) == "((~P | Q) & ~P) | P"


def test_print_right_nested_same_connective():
    t = Or(lit("P"), Or(lit("Q"), lit("R")))
    assert to_text(t) == "P | (Q | R)"
    assert to_nnf(parse_input(to_text(t))) == t


def test_leaves(peirce):
    assert leaves(peirce) == [(0, Literal("P", True)), (1, Literal("Q")), (2, Literal("P", True)),
                              (3, Literal("P"))]
    assert leaves(Formula(lit("Q", True))) == [(0, Literal("Q", True))]
    assert leaves(Formula.parse("P & P")) == [(0, Literal("P")), (1, Literal("P"))]


def test_meet(peirce):
    assert meet(peirce, 0, 1) == OR
    assert meet(peirce, 0, 2) == AND
    assert meet(peirce, 2, 3) == OR
    assert meet(Formula.parse("P & Q"), 0, 1) == AND


def test_meet_errors(peirce):
    with pytest.raises(ValueError):
        meet(peirce, 1, 1)
    with pytest.raises(IndexError):
        meet(peirce, 0, 4)


def test_node_ids_are_preorder(peirce):
    assert peirce.kinds == ("or", "and", "or", "leaf", "leaf", "leaf", "leaf")
    assert peirce.leaf_nodes == (3, 4, 5, 6)
    assert peirce.parents == (-1, 0, 1, 2, 2, 1, 0)


def test_evaluate():
    assert evaluate(Formula.parse("P | ~P"), {"P": False})
    assert not evaluate(Formula.parse("P & ~P"), {"P": True})
    assert evaluate(Formula.parse("((P -> Q) -> P) -> P"), {"P": False, "Q": True})
    with pytest.raises(KeyError):
        evaluate(Formula.parse("P & Q"), {"P": True})


def test_is_tautology():
    assert is_tautology(Formula.parse("((P -> Q) -> P) -> P"))
    assert not is_tautology(Formula.parse("P"))
    assert is_tautology(Formula.parse("(~P | P) & (~Q | Q)"))


def test_truth_table_cap():
    wide = Formula.parse(" | ".join(f"X{i}" for i in range(5)))
    with pytest.raises(ValueError):
        is_tautology(wide, max_vars=4)


@given(trees())
def test_bitwise_truth_table_matches_row_by_row(t):
    f = Formula(t)
    by_rows = all(evaluate(f, a) for a in assignments(f.variables))
    assert is_tautology(f) == by_rows


@given(trees())
def test_print_parse_round_trip(t):
    assert to_nnf(parse_input(to_text(t))) == t


@given(trees())
def test_nnf_idempotent(t):
    assert to_nnf(t) == t


@given(formulas(), st.data())
def test_meet_symmetric(f, data):
    if f.n_leaves < 2:
        return
    a, b = data.draw(st.lists(st.integers(0, f.n_leaves - 1), min_size=2, max_size=2, unique=True))
    assert meet(f, a, b) == meet(f, b, a) == f.meet_table[a][b]


def input_formulas():
    return st.recursive(
        st.sampled_from([P, Q, R]),
        lambda sub: st.one_of(st.builds(Not, sub),
                              st.builds(Bin, st.sampled_from(["&", "|", "->"]), sub, sub)),
        max_leaves=8,
    )


def surface_value(g, a):
    if isinstance(g, Var):
        return a[g.name]
    if isinstance(g, Not):
        return not surface_value(g.arg, a)
    x, y = surface_value(g.left, a), surface_value(g.right, a)
    return {"&": x and y, "|": x or y, "->": (not x) or y}[g.op]


@settings(max_examples=200)
@given(input_formulas())
def test_nnf_preserves_meaning_and_negation(g):
    for a in assignments(["P", "Q", "R"]):
        assert evaluate(to_nnf(g), a) == surface_value(g, a)
        assert evaluate(to_nnf(Not(g)), a) == (not surface_value(g, a))


@given(trees())
def test_nnf_invariants(t):
    f = Formula(t)
    assert [i for i, _ in leaves(f)] == list(range(f.n_leaves))
    for nid, kind in enumerate(f.kinds):
        assert (f.children[nid] is None) == (kind == "leaf")
    assert f.size == 2 * f.n_leaves - 1
