"""Seeded random formulas, linkings and nets for fuzzing."""
from __future__ import annotations

import random

from .formula import And, Formula, Lit, Literal, Or, Tree, or_chain
from .net import Linking

VARIABLE_NAMES = ("P", "Q", "R", "S", "T", "U")


def variable_name(i: int) -> str:
    return VARIABLE_NAMES[i] if i < len(VARIABLE_NAMES) else f"V{i}"


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_shape(rng: random.Random, leaves: list[Tree], p_and: float = 0.5) -> Tree:
    """Combine the given leaves, in order, under a random binary tree of random connectives."""
    if len(leaves) == 1:
        return leaves[0]
    cut = rng.randint(1, len(leaves) - 1)
    left = random_shape(rng, leaves[:cut], p_and)
    right = random_shape(rng, leaves[cut:], p_and)
    return And(left, right) if rng.random() < p_and else Or(left, right)


def random_formula(seed, max_leaves: int, max_vars: int) -> Formula:
    """Deterministic for a fixed integer seed; at most ``max_leaves`` leaves."""
    if max_leaves < 1:
        raise ValueError("max_leaves must be at least 1")
    rng = _rng(seed)
    n = rng.randint(1, max_leaves)
    k = max(1, max_vars)
    leaves = [Lit(Literal(variable_name(rng.randrange(k)), rng.random() < 0.5))
              for _ in range(n)]
    return Formula(random_shape(rng, leaves))


def random_linked_formula(seed, n_leaves: int, max_vars: int) -> tuple[Formula, Linking]:
    """A random formula on ``n_leaves`` (even) leaves with a random valid linking."""
    if n_leaves < 2 or n_leaves % 2:
        raise ValueError("a linking needs a positive even number of leaves")
    rng = _rng(seed)
    order = list(range(n_leaves))
    rng.shuffle(order)
    literals: list[Literal | None] = [None] * n_leaves
    pairs = []
    for a, b in zip(order[::2], order[1::2]):
        lit = Literal(variable_name(rng.randrange(max(1, max_vars))), rng.random() < 0.5)
        literals[a], literals[b] = lit, lit.dual()
        pairs.append((a, b))
    f = Formula(random_shape(rng, [Lit(x) for x in literals]))
    return f, Linking(pairs)


def random_net(seed, max_pairs: int, max_vars: int, mix: bool = False) -> tuple[Formula, Linking]:
    """A correct net built bottom-up by the sequent rules of multiplicative logic.

    A conclusion list of trees is grown from axioms by par (two conclusions of
    one component), tensor (one conclusion from each of two components) and, when
    ``mix`` is set, juxtaposition of components. The conclusions are finally
    joined by par.
    """
    rng = _rng(seed)
    n_pairs = rng.randint(1, max_pairs)
    # token ids stand for leaves until the final formula fixes their positions
    components: list[list[tuple[Tree, list[int]]]] = []
    token_lits: list[Literal] = []
    for _ in range(n_pairs):
        lit = Literal(variable_name(rng.randrange(max(1, max_vars))), rng.random() < 0.5)
        a, b = len(token_lits), len(token_lits) + 1
        token_lits += [lit, lit.dual()]
        components.append([(_token_leaf(a), [a]), (_token_leaf(b), [b])])
    while len(components) > 1:
        i, j = rng.sample(range(len(components)), 2)
        ci, cj = components[i], components[j]
        if mix and rng.random() < 0.25:
            merged = ci + cj
        else:
            ti, ui = ci.pop(rng.randrange(len(ci)))
            tj, uj = cj.pop(rng.randrange(len(cj)))
            merged = ci + cj + [(And(ti, tj), ui + uj)]
        components = [c for k, c in enumerate(components) if k not in (i, j)] + [merged]
        _random_pars(rng, merged)
    (conclusions,) = components
    _random_pars(rng, conclusions)
    tree = or_chain(t for t, _ in conclusions)
    tokens = [u for _, us in conclusions for u in us]
    position = {u: i for i, u in enumerate(tokens)}
    tree = _relabel(tree, token_lits)
    pairs = [(position[2 * k], position[2 * k + 1]) for k in range(n_pairs)]
    return Formula(tree), Linking(pairs)


def _random_pars(rng: random.Random, conclusions: list) -> None:
    while len(conclusions) > 1 and rng.random() < 0.4:
        i, j = rng.sample(range(len(conclusions)), 2)
        (ti, ui), (tj, uj) = conclusions[i], conclusions[j]
        rest = [c for k, c in enumerate(conclusions) if k not in (i, j)]
        conclusions[:] = rest + [(Or(ti, tj), ui + uj)]


def _token_leaf(token: int) -> Tree:
    return Lit(Literal(f"_{token}"))


def _relabel(t: Tree, token_lits: list[Literal]) -> Tree:
    if isinstance(t, Lit):
        return Lit(token_lits[int(t.literal.variable[1:])])
    cls = type(t)
    return cls(_relabel(t.left, token_lits), _relabel(t.right, token_lits))
