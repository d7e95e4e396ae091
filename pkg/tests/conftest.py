import itertools

import pytest
from hypothesis import strategies as st

from combproof.formula import And, Formula, Lit, Literal, Or, LEAF
from combproof.net import Linking
from combproof.proof import CombinatorialProof

ACCEPTANCE_LINES = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


PEIRCE_TEXT = "((P -> Q) -> P) -> P"
PEIRCE_UPPER_TEXT = "(~P & ~P) | (P | P)"


@pytest.fixture
def peirce():
    return Formula.parse(PEIRCE_TEXT)


@pytest.fixture
def peirce_upper():
    return Formula.parse(PEIRCE_UPPER_TEXT)


@pytest.fixture
def peirce_proof(peirce, peirce_upper):
    return CombinatorialProof(peirce, peirce_upper, Linking([(0, 3), (1, 2)]), (0, 2, 3, 3))


literals = st.builds(Literal, st.sampled_from(["P", "Q", "R"]), st.booleans())


def trees(max_leaves=10):
    return st.recursive(
        st.builds(Lit, literals),
        lambda sub: st.one_of(st.builds(And, sub, sub), st.builds(Or, sub, sub)),
        max_leaves=max_leaves,
    )


def formulas(max_leaves=10):
    return trees(max_leaves).map(Formula)


def brute_force_cliques(f: Formula) -> set:
    """Leaf sets reached by choosing a child at every Or node, surviving or not."""
    found = set()
    for choice in itertools.product((0, 1), repeat=len(f.or_nodes)):
        pick = dict(zip(f.or_nodes, choice))
        out, stack = [], [0]
        while stack:
            nid = stack.pop()
            if f.kinds[nid] == LEAF:
                out.append(f.node_leaf[nid])
            elif nid in pick:
                stack.append(f.children[nid][pick[nid]])
            else:
                stack.extend(f.children[nid])
        found.add(frozenset(out))
    return found
