import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combproof.formula import Formula
from combproof.generate import random_linked_formula, random_net
from combproof.net import (
    Linking, LinkingError, dr_check_exhaustive, dr_check_fast, first_bad_switching, graph_defect,
    switch_graph, switchings, validate_linking,
)


def edge_set(g):
    return {frozenset(e) for e in g.edges}


def test_validate_linking():
    f = Formula.parse("~P | P")
    validate_linking(f, Linking([(0, 1)]))
    with pytest.raises(LinkingError, match="leaf 0 unlinked"):
        validate_linking(f, Linking([]))
    with pytest.raises(LinkingError, match="not dual"):
        validate_linking(Formula.parse("P | P"), Linking([(0, 1)]))


@pytest.mark.parametrize("pairs, message", [
    ([(0, 1), (1, 2)], "two pairs"),
    ([(0, 0)], "itself"),
    ([(0, 5)], "out of range"),
])
def test_validate_linking_errors(pairs, message):
    with pytest.raises(LinkingError, match=message):
        validate_linking(Formula.parse("(~P | P) & (~P | P)"), Linking(pairs))


def test_linking_normalises_pairs():
    assert Linking([(3, 0), (2, 1)]).pairs == ((0, 3), (1, 2))
    with pytest.raises(ValueError):
        Linking([(1, 2, 3)])


def test_switch_graph_tensor_is_a_triangle():
    g = switch_graph(Formula.parse("~P & P"), Linking([(0, 1)]), {})
    assert g.n_vertices == 3
    assert edge_set(g) == {frozenset(e) for e in [(0, 1), (0, 2), (1, 2)]}


def test_switch_graph_par_is_a_path():
    g = switch_graph(Formula.parse("~P | P"), Linking([(0, 1)]), {0: 0})
    assert edge_set(g) == {frozenset(e) for e in [(0, 1), (1, 2)]}


def test_single_leaf_has_no_linking():
    f = Formula.parse("P")
    with pytest.raises(LinkingError):
        validate_linking(f, Linking([]))


def test_switch_graph_needs_total_switching(peirce_upper):
    with pytest.raises(ValueError):
        switch_graph(peirce_upper, Linking([(0, 3), (1, 2)]), {0: 0})


@pytest.mark.parametrize("pairs", [[(0, 3), (1, 2)], [(0, 2), (1, 3)]])
def test_peirce_upper_nets(peirce_upper, pairs):
    l = Linking(pairs)
    validate_linking(peirce_upper, l)
    for check in (dr_check_exhaustive, dr_check_fast):
        assert check(peirce_upper, l, False)
        assert check(peirce_upper, l, True)


def test_peirce_upper_switchings_are_trees(peirce_upper):
    l = Linking([(0, 3), (1, 2)])
    graphs = [switch_graph(peirce_upper, l, s) for s in switchings(peirce_upper)]
    assert len(graphs) == 4
    assert all(graph_defect(g.n_vertices, g.edges, mix=False) is None for g in graphs)


def test_mix_separation():
    f, l = Formula.parse("(~P | P) | (~Q | Q)"), Linking([(0, 1), (2, 3)])
    for check in (dr_check_exhaustive, dr_check_fast):
        assert not check(f, l, False)
        assert check(f, l, True)
    assert first_bad_switching(f, l, False)[1] == "disconnected"


def test_tensor_of_dual_pair_is_cyclic():
    f, l = Formula.parse("~P & P"), Linking([(0, 1)])
    for check in (dr_check_exhaustive, dr_check_fast):
        assert not check(f, l, False)
        assert not check(f, l, True)
    assert first_bad_switching(f, l, True) == ({}, "cycle")


def test_nested_mix_subnet():
    # two crossed axiom pairs under pars: acyclic, but only with MIX
    f = Formula.parse("((~R | R | (~R | R)) & ~P) | (P & (~Q | (Q & (~P | ~P | (P | P)))))")
    l = Linking([(0, 3), (1, 2), (4, 5), (6, 7), (8, 11), (9, 10)])
    assert dr_check_exhaustive(f, l, True) and dr_check_fast(f, l, True)
    assert not dr_check_exhaustive(f, l, False) and not dr_check_fast(f, l, False)


def instances(seed, count, max_leaves=12):
    rng = random.Random(seed)
    for i in range(count):
        if i % 2:
            yield random_linked_formula(rng, 2 * rng.randint(1, max_leaves // 2), rng.randint(1, 3))
        else:
            yield random_net(rng, max_leaves // 2, rng.randint(1, 3), mix=rng.random() < 0.5)


def test_fast_matches_exhaustive_on_random_instances():
    seen = {False: 0, True: 0}
    for f, l in instances(11, 3000):
        validate_linking(f, l)
        for mix in (False, True):
            verdict = dr_check_exhaustive(f, l, mix)
            assert dr_check_fast(f, l, mix) == verdict, (str(f), l.pairs, mix)
            seen[mix] += verdict
    # both verdicts occur in both modes
    assert 0 < seen[False] < seen[True] < 6000


def test_correct_nets_are_accepted():
    for seed in range(200):
        f, l = random_net(seed, 6, 3)
        assert dr_check_fast(f, l, False) and dr_check_exhaustive(f, l, False)


@settings(max_examples=200)
@given(st.integers(0, 10**9), st.integers(1, 7), st.integers(1, 3))
def test_switch_graph_properties(seed, pairs, n_vars):
    f, l = random_linked_formula(seed, 2 * pairs, n_vars)
    expected_edges = 2 * len(f.and_nodes) + len(f.or_nodes) + len(l)
    strict = dr_check_exhaustive(f, l, False)
    for s in list(switchings(f))[:16]:
        g = switch_graph(f, l, s)
        assert len(g.edges) == expected_edges
        if strict:
            assert graph_defect(g.n_vertices, g.edges, mix=False) is None
            assert len(g.edges) == g.n_vertices - 1
    if strict:
        assert dr_check_exhaustive(f, l, True)
