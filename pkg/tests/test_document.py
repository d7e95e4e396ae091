import json
import random

import pydot
import pytest

from dot_grammar import is_dot

from combproof.document import SchemaError, emit_figure, load_proof, parse_document, save_proof
from combproof.formula import Formula
from combproof.generate import random_formula
from combproof.harness import mutate_proof, random_document_proof
from combproof.net import Linking
from combproof.proof import CombinatorialProof
from combproof.sequent import prove_combinatorial

PEIRCE_DOC = """{
  "lower": "((P -> Q) -> P) -> P",
  "upper": "(~P & ~P) | (P | P)",
  "links": [[0, 3], [1, 2]],
  "map": [0, 2, 3, 3]
}"""


def doc(**changes):
    data = json.loads(PEIRCE_DOC)
    data.update(changes)
    return json.dumps(data)


def test_load_peirce(peirce_proof):
    document = parse_document(PEIRCE_DOC)
    assert document.proof == peirce_proof
    assert document.mix is False


@pytest.mark.parametrize("text, path", [
    (doc(map=[0, 2, 3]), "$.map"),
    (doc(links=[[0, 4], [1, 2]]), "$.links[0][1]"),
    (doc(links=[[0, 3, 1]]), "$.links[0]"),
    (doc(map=[0, 2, 3, 9]), "$.map[3]"),
    (doc(map=[0, 2, 3, True]), "$.map[3]"),
    (doc(extra=1), "$.extra"),
    (doc(mix="yes"), "$.mix"),
    (doc(lower="P &"), "$.lower"),
    (json.dumps({"upper": "P"}), "$.lower"),
    ("[1, 2]", "$"),
    ("{not json", "$"),
])
def test_schema_errors(text, path):
    with pytest.raises(SchemaError) as info:
        parse_document(text)
    assert info.value.path == path


def test_peirce_round_trip_is_byte_stable(peirce_proof):
    once = save_proof(load_proof(PEIRCE_DOC))
    assert save_proof(load_proof(once)) == once
    assert load_proof(once) == peirce_proof


def test_trivial_round_trip():
    p = prove_combinatorial(Formula.parse("~P | P"))
    assert load_proof(save_proof(p)) == p


def test_random_round_trips():
    rng = random.Random(4)
    for _ in range(300):
        p = random_document_proof(rng)
        if rng.random() < 0.5:
            p = mutate_proof(rng, p)
        assert load_proof(save_proof(p)) == p


def figure_counts(text):
    (graph,) = pydot.graph_from_dot_data(text)
    nodes, edges = set(), []

    def walk(g):
        for n in g.get_nodes():
            if n.get_name() not in ("node", "edge", "graph"):
                nodes.add(n.get_name())
        edges.extend(g.get_edges())
        for sub in g.get_subgraphs():
            walk(sub)

    walk(graph)
    links = [e for e in edges if e.get("class") == "link"]
    maps = [e for e in edges if e.get("class") == "map"]
    return len(nodes), len(links), len(maps)


def test_peirce_figure(peirce_proof):
    assert figure_counts(emit_figure(peirce_proof)) == (8, 2, 4)


def test_excluded_middle_figure():
    p = prove_combinatorial(Formula.parse("~P | P"))
    assert figure_counts(emit_figure(p)) == (4, 1, 2)


def test_figures_parse():
    rng = random.Random(9)
    for i in range(300):
        p = prove_combinatorial(random_formula(rng, 7, 3)) or random_document_proof(rng)
        text = emit_figure(p)
        assert is_dot(text)
        if i < 3:
            assert pydot.graph_from_dot_data(text) is not None


@pytest.mark.parametrize("text", [
    "graph { a -- ; }",
    "graph { a -> b }",
    "digraph { a -- b }",
    "graph { a [label=] }",
    "graph { a; ",
    'graph { "unterminated }',
])
def test_dot_recognizer_rejects(text):
    assert not is_dot(text)


@pytest.mark.parametrize("text", [
    "graph { a -- b -- c [color=red, style=bold]; }",
    'strict digraph G { rank=same; subgraph cluster_x { label="\\"x\\""; a } -> b; node [shape=box] }',
    "graph { { rank=same; a; b; } /* c */ a -- { b c } }",
])
def test_dot_recognizer_accepts(text):
    assert is_dot(text)
    assert pydot.graph_from_dot_data(text) is not None


def test_mix_flag_round_trip():
    f = Formula.parse("(~P | P) | (~Q | Q)")
    p = CombinatorialProof(f, f, Linking([(0, 1), (2, 3)]), (0, 1, 2, 3))
    document = parse_document(save_proof(p, mix=True))
    assert document.mix and document.proof == p
