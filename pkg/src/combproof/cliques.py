"""Disjunction resolutions of a formula and the cliques they determine.

A resolution picks one child of every disjunction that survives the choices made
above it. Its leaf set is a clique. Cliques can also be recognised without
enumeration: a nonempty leaf set is a clique exactly when every pair of members
meets at a conjunction and no outside leaf meets every member at a conjunction.
The two descriptions are checked against each other in the test suite.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .formula import AND, LEAF, LEFT, OR, RIGHT, Formula

Resolution = Mapping[int, int]  # surviving Or node id -> LEFT | RIGHT
Clique = frozenset


def _resolutions_at(f: Formula, nid: int) -> Iterator[tuple[dict[int, int], list[int]]]:
    kind = f.kinds[nid]
    if kind == LEAF:
        yield {}, [f.node_leaf[nid]]
        return
    left, right = f.children[nid]
    if kind == OR:
        for side, child in ((LEFT, left), (RIGHT, right)):
            for choice, ls in _resolutions_at(f, child):
                yield {nid: side, **choice}, ls
        return
    right_all = list(_resolutions_at(f, right))
    for lc, ll in _resolutions_at(f, left):
        for rc, rl in right_all:
            yield {**lc, **rc}, ll + rl


def enumerate_resolutions(f: Formula) -> list[dict[int, int]]:
    """All resolutions, depth first with the left child tried before the right."""
    return [choice for choice, _ in _resolutions_at(f, 0)]


def count_resolutions(f: Formula) -> int:
    counts = [0] * f.size
    for nid in range(f.size - 1, -1, -1):
        kind = f.kinds[nid]
        if kind == LEAF:
            counts[nid] = 1
        else:
            l, r = f.children[nid]
            counts[nid] = counts[l] + counts[r] if kind == OR else counts[l] * counts[r]
    return counts[0]


def resolution_leaves(f: Formula, r: Resolution) -> frozenset[int]:
    """Leaf set of a resolution. The choice map must cover exactly the surviving Or nodes."""
    out: list[int] = []
    used = 0
    stack = [0]
    while stack:
        nid = stack.pop()
        kind = f.kinds[nid]
        if kind == LEAF:
            out.append(f.node_leaf[nid])
        elif kind == AND:
            stack.extend(f.children[nid])
        else:
            side = r.get(nid)
            if side not in (LEFT, RIGHT):
                raise ValueError(f"resolution has no valid choice for surviving Or node {nid}")
            used += 1
            stack.append(f.children[nid][side])
    if used != len(r):
        extra = sorted(set(r) - _surviving(f, r))
        raise ValueError(f"resolution chooses at non-surviving nodes {extra}")
    return frozenset(out)


def _surviving(f: Formula, r: Resolution) -> set[int]:
    seen = set()
    stack = [0]
    while stack:
        nid = stack.pop()
        kind = f.kinds[nid]
        if kind == AND:
            stack.extend(f.children[nid])
        elif kind == OR:
            seen.add(nid)
            if r.get(nid) in (LEFT, RIGHT):
                stack.append(f.children[nid][r[nid]])
    return seen


def cliques(f: Formula) -> list[frozenset[int]]:
    """Leaf sets of all resolutions, in resolution enumeration order."""
    family: list[list[tuple[int, ...]]] = [[] for _ in range(f.size)]
    for nid in range(f.size - 1, -1, -1):
        kind = f.kinds[nid]
        if kind == LEAF:
            family[nid] = [(f.node_leaf[nid],)]
            continue
        l, r = f.children[nid]
        if kind == OR:
            family[nid] = family[l] + family[r]
        else:
            family[nid] = [x + y for x in family[l] for y in family[r]]
        family[l] = family[r] = []
    return [frozenset(c) for c in family[0]]


def is_clique(f: Formula, s: Iterable[int]) -> bool:
    members = sorted(set(s))
    n = f.n_leaves
    for a in members:
        if not 0 <= a < n:
            raise IndexError(f"leaf {a} out of range for a formula with {n} leaves")
    if not members:
        return False
    table = f.meet_table
    for i, a in enumerate(members):
        row = table[a]
        for b in members[i + 1:]:
            if row[b] != AND:
                return False
    inside = set(members)
    for x in range(n):
        if x in inside:
            continue
        row = table[x]
        if all(row[a] == AND for a in members):
            return False
    return True
