"""One-sided cut-free sequent calculus, proof search, and translation to combinatorial proofs.

Sequents are tuples of NNF trees, read disjunctively. Rules, as (premises) / conclusion:

``ax``        / L, dual(L)
``or i``      G[:i], A, B, G[i+1:] / G[:i], A | B, G[i+1:]
``and i``     G, A  and  D, B / (G + D) with A & B inserted at position i
``contract i j``  G with G[i] == G[j], i < j / G without position j
``weaken i``  G / G with any formula inserted at position i
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterator

from .cliques import cliques, is_clique
from .formula import And, Formula, Lit, Or, Tree, leaf_count, or_chain
from .net import Linking
from .proof import CombinatorialProof

Sequent = tuple  # tuple[Tree, ...]

RULES = ("ax", "or", "and", "contract", "weaken")


class SequentProofError(ValueError):
    def __init__(self, node: int, message: str):
        super().__init__(f"node {node}: {message}")
        self.node = node


@dataclass(frozen=True)
class SequentProof:
    conclusion: Sequent
    rule: str
    premises: tuple[SequentProof, ...] = ()
    args: tuple[int, ...] = ()

    def nodes(self) -> Iterator[SequentProof]:
        """Preorder; node numbers in error messages refer to this order."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.premises))


def _expected(node: SequentProof) -> Sequent | str:
    """The conclusion the rule yields from the premises, or a complaint."""
    rule, args, prem = node.rule, node.args, node.premises
    arity = {"ax": 0, "or": 1, "and": 2, "contract": 1, "weaken": 1}.get(rule)
    if arity is None:
        return f"unknown rule {rule!r}"
    if len(prem) != arity:
        return f"{rule} takes {arity} premises, got {len(prem)}"
    if rule == "ax":
        c = node.conclusion
        if (len(c) == 2 and all(isinstance(x, Lit) for x in c)
                and c[0].literal.is_dual(c[1].literal)):
            return c
        return "axiom conclusion must be two dual literals"
    if rule == "or":
        (g,) = (p.conclusion for p in prem)
        (i,) = args
        if not 0 <= i < len(g) - 1:
            return f"or position {i} out of range"
        return g[:i] + (Or(g[i], g[i + 1]),) + g[i + 2:]
    if rule == "and":
        g, d = (p.conclusion for p in prem)
        (i,) = args
        if not g or not d:
            return "and premises must be nonempty"
        rest = g[:-1] + d[:-1]
        if not 0 <= i <= len(rest):
            return f"and position {i} out of range"
        return rest[:i] + (And(g[-1], d[-1]),) + rest[i:]
    if rule == "contract":
        (g,) = (p.conclusion for p in prem)
        i, j = args
        if not 0 <= i < j < len(g):
            return f"contract positions {i}, {j} invalid"
        if g[i] != g[j]:
            return f"contract of non-identical formulas at {i} and {j}"
        return g[:j] + g[j + 1:]
    (g,) = (p.conclusion for p in prem)
    (i,) = args
    c = node.conclusion
    if not 0 <= i < len(c):
        return f"weaken position {i} out of range"
    if c[:i] + c[i + 1:] != g:
        return "weaken premise does not match"
    return c


def check_sequent_proof(p: SequentProof) -> None:
    for k, node in enumerate(p.nodes()):
        try:
            expected = _expected(node)
        except ValueError as e:  # wrong number of rule arguments
            expected = f"malformed arguments {node.args}: {e}"
        if isinstance(expected, str):
            raise SequentProofError(k, expected)
        if expected != node.conclusion:
            raise SequentProofError(k, f"{node.rule} does not yield the stated conclusion")


# Proof search


def prove_sequent(gamma: Sequent) -> SequentProof | None:
    gamma = tuple(gamma)
    for i, t in enumerate(gamma):
        if isinstance(t, Or):
            sub = prove_sequent(gamma[:i] + (t.left, t.right) + gamma[i + 1:])
            return None if sub is None else SequentProof(gamma, "or", (sub,), (i,))

    for i, t in enumerate(gamma):
        if not isinstance(t, Lit):
            continue
        for j in range(i + 1, len(gamma)):
            u = gamma[j]
            if isinstance(u, Lit) and t.literal.is_dual(u.literal):
                return _weaken_into(SequentProof((t, u), "ax"), gamma, i, j)

    for i, t in enumerate(gamma):
        if isinstance(t, And):
            rest = gamma[:i] + gamma[i + 1:]
            left = prove_sequent(rest + (t.left,))
            if left is None:
                return None
            right = prove_sequent(rest + (t.right,))
            if right is None:
                return None
            m = len(rest)
            node = SequentProof(_insert(rest + rest, i, t), "and", (left, right), (i,))
            # the second copy of the context starts at m + 1
            for k in range(m):
                first = k if k < i else k + 1
                node = SequentProof(node.conclusion[:m + 1] + node.conclusion[m + 2:], "contract",
                                    (node,), (first, m + 1))
            return node
    return None


def _insert(seq: Sequent, i: int, t: Tree) -> Sequent:
    return seq[:i] + (t,) + seq[i:]


def _weaken_into(p: SequentProof, gamma: Sequent, i: int, j: int) -> SequentProof:
    kept = [i, j]
    for k in range(len(gamma)):
        if k in (i, j):
            continue
        kept.append(k)
        kept.sort()
        pos = kept.index(k)
        concl = tuple(gamma[x] for x in kept)
        p = SequentProof(concl, "weaken", (p,), (pos,))
    return p


def prove(f: Formula | Tree) -> SequentProof | None:
    tree = f.tree if isinstance(f, Formula) else f
    return prove_sequent((tree,))


# Translation


@dataclass
class _Upper:
    tree: Tree
    tokens: list[int]  # leaf tokens, left to right
    tag: int  # position of the lower member this formula maps into


@dataclass
class TaggedUpper:
    """Translation state for one node: upper formulas over a lower sequent."""

    lower: Sequent
    uppers: list[_Upper]
    links: list[tuple[int, int]]
    target: dict[int, tuple[int, int]]  # token -> (lower member, leaf index inside it)


def _remap(state: TaggedUpper, lower: Sequent, member_map, leaf_shift=None) -> TaggedUpper:
    """Move every member ``m`` to ``member_map[m]``, shifting leaf indices by ``leaf_shift[m]``."""
    leaf_shift = leaf_shift or {}
    target = {u: (member_map[m], k + leaf_shift.get(m, 0)) for u, (m, k) in state.target.items()}
    uppers = [_Upper(x.tree, x.tokens, member_map[x.tag]) for x in state.uppers]
    return TaggedUpper(lower, uppers, state.links, target)


def translate(p: SequentProof, check_invariants: bool = False) -> CombinatorialProof:
    """Translate a checked sequent proof into a combinatorial proof of the disjunction of its conclusion."""
    tokens = count()
    state = _translate(p, tokens, check_invariants)
    lower = Formula(or_chain(state.lower))
    upper_tree = or_chain(x.tree for x in state.uppers)
    order = [u for x in state.uppers for u in x.tokens]
    position = {u: i for i, u in enumerate(order)}
    offsets = [0]
    for t in state.lower:
        offsets.append(offsets[-1] + leaf_count(t))
    leaf_map = []
    for u in order:
        m, k = state.target[u]
        leaf_map.append(offsets[m] + k)
    linking = Linking((position[a], position[b]) for a, b in state.links)
    return CombinatorialProof(lower, Formula(upper_tree), linking, tuple(leaf_map))


def _translate(p: SequentProof, tokens, check: bool) -> TaggedUpper:
    rule, c = p.rule, p.conclusion
    if rule == "ax":
        a, b = next(tokens), next(tokens)
        state = TaggedUpper(c, [_Upper(c[0], [a], 0), _Upper(c[1], [b], 1)], [(a, b)],
                            {a: (0, 0), b: (1, 0)})
    elif rule == "or":
        (prem,) = p.premises
        (i,) = p.args
        s = _translate(prem, tokens, check)
        g = prem.conclusion
        member_map = {m: (m if m <= i else m - 1) for m in range(len(g))}
        state = _remap(s, c, member_map, {i + 1: leaf_count(g[i])})
    elif rule == "contract":
        (prem,) = p.premises
        i, j = p.args
        s = _translate(prem, tokens, check)
        member_map = {m: (i if m == j else m if m < j else m - 1)
                      for m in range(len(prem.conclusion))}
        state = _remap(s, c, member_map)
    elif rule == "weaken":
        (prem,) = p.premises
        (i,) = p.args
        s = _translate(prem, tokens, check)
        member_map = {m: (m if m < i else m + 1) for m in range(len(prem.conclusion))}
        state = _remap(s, c, member_map)
    elif rule == "and":
        state = _translate_and(p, tokens, check)
    else:
        raise ValueError(f"unknown rule {rule!r}")
    if check:
        _check_tagged(state)
    return state


def _translate_and(p: SequentProof, tokens, check: bool) -> TaggedUpper:
    p1, p2 = p.premises
    (i,) = p.args
    c = p.conclusion
    s1 = _translate(p1, tokens, check)
    s2 = _translate(p2, tokens, check)
    g, d = p1.conclusion, p2.conclusion
    na, nb = len(g) - 1, len(d) - 1

    def pos(k: int) -> int:
        return k if k < i else k + 1

    map1 = {m: pos(m) for m in range(na)}
    map1[na] = i
    map2 = {m: pos(na + m) for m in range(nb)}
    map2[nb] = i
    shift2 = {nb: leaf_count(g[-1])}

    if not any(x.tag == na for x in s1.uppers):
        return _remap(s1, c, map1)
    if not any(x.tag == nb for x in s2.uppers):
        return _remap(s2, c, map2, shift2)

    # after remapping, exactly the uppers of the two active formulas carry tag i
    r1 = _remap(s1, c, map1)
    r2 = _remap(s2, c, map2, shift2)
    us = [x for x in r1.uppers if x.tag == i]
    vs = [x for x in r2.uppers if x.tag == i]
    tensor = _Upper(
        And(or_chain(x.tree for x in us), or_chain(x.tree for x in vs)),
        [u for x in us + vs for u in x.tokens],
        i,
    )
    others = [x for x in r1.uppers + r2.uppers if x.tag != i]
    return TaggedUpper(c, others + [tensor], r1.links + r2.links, {**r1.target, **r2.target})


def _check_tagged(state: TaggedUpper) -> None:
    """Each upper formula maps into its tagged member, cliques onto cliques."""
    for x in state.uppers:
        member = Formula(state.lower[x.tag])
        upper = Formula(x.tree)
        local = []
        for k, u in enumerate(x.tokens):
            m, leaf = state.target[u]
            if m != x.tag:
                raise AssertionError(f"upper leaf token {u} maps into member {m}, tagged {x.tag}")
            if upper.leaf_literal(k) != member.leaf_literal(leaf):
                raise AssertionError(f"upper leaf token {u} changes label")
            local.append(leaf)
        for cl in cliques(upper):
            if not is_clique(member, {local[k] for k in cl}):
                raise AssertionError(f"clique {sorted(cl)} of {x.tree} not preserved")


def prove_combinatorial(f: Formula | Tree) -> CombinatorialProof | None:
    p = prove(f)
    return None if p is None else translate(p)
