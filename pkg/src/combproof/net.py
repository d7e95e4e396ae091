"""Axiom linkings on a formula read multiplicatively, and proof-net correctness.

Conjunction is tensor and disjunction is par. A linking is correct when every
switching graph (each par keeps one of its two child edges) is acyclic and, unless
MIX is allowed, connected.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .formula import AND, LEAF, OR, Formula


class LinkingError(ValueError):
    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Linking:
    """Axiom pairs, normalised to sorted ``(low, high)`` tuples in sorted order."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[Iterable[int]] = ()):
        norm = []
        for p in pairs:
            p = tuple(p)
            if len(p) != 2:
                raise ValueError(f"axiom link {p} does not have two ends")
            a, b = p
            norm.append((a, b) if a <= b else (b, a))
        object.__setattr__(self, "pairs", tuple(sorted(norm)))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class SwitchGraph:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]


def validate_linking(f: Formula, l: Linking) -> None:
    """Raise :class:`LinkingError` unless the pairs partition the leaves into dual literals."""
    n = f.n_leaves
    owner: dict[int, tuple[int, int]] = {}
    for pair in l:
        a, b = pair
        for x in pair:
            if not 0 <= x < n:
                raise LinkingError(f"pair {pair} refers to leaf {x}, out of range", pair)
        if a == b:
            raise LinkingError(f"pair {pair} links leaf {a} to itself", pair)
        for x in pair:
            if x in owner:
                raise LinkingError(f"leaf {x} is in two pairs {owner[x]} and {pair}", pair)
            owner[x] = pair
        la, lb = f.leaf_literal(a), f.leaf_literal(b)
        if not la.is_dual(lb):
            raise LinkingError(f"pair {pair} not dual: {la} with {lb}", pair)
    for x in range(n):
        if x not in owner:
            raise LinkingError(f"leaf {x} unlinked", x)


def _fixed_edges(f: Formula, l: Linking) -> list[tuple[int, int]]:
    edges = []
    for nid in f.and_nodes:
        left, right = f.children[nid]
        edges.append((nid, left))
        edges.append((nid, right))
    for a, b in l:
        edges.append((f.leaf_nodes[a], f.leaf_nodes[b]))
    return edges


def switch_graph(f: Formula, l: Linking, s: Mapping[int, int]) -> SwitchGraph:
    missing = [nid for nid in f.or_nodes if s.get(nid) not in (0, 1)]
    if missing:
        raise ValueError(f"switching has no choice for Or nodes {missing}")
    edges = _fixed_edges(f, l)
    for nid in f.or_nodes:
        edges.append((nid, f.children[nid][s[nid]]))
    return SwitchGraph(f.size, tuple(edges))


def switchings(f: Formula) -> Iterator[dict[int, int]]:
    """Every switching, in lexicographic order over Or nodes in preorder."""
    ors = f.or_nodes
    for choice in itertools.product((0, 1), repeat=len(ors)):
        yield dict(zip(ors, choice))


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def graph_defect(n_vertices: int, edges: Iterable[tuple[int, int]], mix: bool) -> str | None:
    """``"cycle"``, ``"disconnected"`` or ``None`` for a forest (tree without MIX)."""
    uf = _UnionFind(n_vertices)
    components = n_vertices
    for a, b in edges:
        if not uf.union(a, b):
            return "cycle"
        components -= 1
    if not mix and components != 1:
        return "disconnected"
    return None


def first_bad_switching(f: Formula, l: Linking, mix: bool = False) -> tuple[dict[int, int], str] | None:
    """The first switching (in :func:`switchings` order) whose graph fails, with the defect."""
    fixed = _fixed_edges(f, l)
    base = _UnionFind(f.size)
    components = f.size
    for a, b in fixed:
        if not base.union(a, b):
            # the cycle lives in the fixed edges, so every switching has it
            return next(switchings(f)), "cycle"
        components -= 1
    ors = f.or_nodes
    children = f.children
    for choice in itertools.product((0, 1), repeat=len(ors)):
        uf = _UnionFind.__new__(_UnionFind)
        uf.parent = list(base.parent)
        comps = components
        defect = None
        for nid, side in zip(ors, choice):
            if not uf.union(nid, children[nid][side]):
                defect = "cycle"
                break
            comps -= 1
        if defect is None and not mix and comps != 1:
            defect = "disconnected"
        if defect is not None:
            return dict(zip(ors, choice)), defect
    return None


def dr_check_exhaustive(f: Formula, l: Linking, mix: bool = False) -> bool:
    """Enumerate all switchings. Exponential in the number of Or nodes; this is the oracle."""
    return first_bad_switching(f, l, mix) is None


def dr_check_fast(f: Formula, l: Linking, mix: bool = False) -> bool:
    """Decide correctness without enumerating switchings.

    Without MIX the paired graph is contracted: unpaired edges (tensor premises,
    axiom links) merge their ends, and a par whose two child edges reach the same
    vertex is absorbed into it. A loop at any point is a cycle in some switching.
    The net is correct iff everything contracts to one vertex.

    With MIX, see :func:`_acyclic_by_splitting`.
    """
    if mix:
        return _acyclic_by_splitting(f, l)
    uf = _UnionFind(f.size)
    components = f.size
    for a, b in _fixed_edges(f, l):
        if not uf.union(a, b):
            return False
        components -= 1
    pending = list(f.or_nodes)
    children = f.children
    progress = True
    while pending and progress:
        progress = False
        rest = []
        for nid in pending:
            x = uf.find(nid)
            left, right = children[nid]
            yl, yr = uf.find(left), uf.find(right)
            if yl == x or yr == x:
                return False
            if yl == yr:
                uf.union(x, yl)
                components -= 1
                progress = True
            else:
                rest.append(nid)
        pending = rest
    return not pending and components == 1


def _acyclic_by_splitting(f: Formula, l: Linking) -> bool:
    """Every switching acyclic, decided by taking the structure apart from its conclusions.

    A terminal par is pendant in every switching and can be removed. Parts of the
    structure that are not connected at all are judged separately. Otherwise some
    terminal tensor must separate its two premises, and both sides are judged.
    """
    partner = {}
    for a, b in l:
        na, nb = f.leaf_nodes[a], f.leaf_nodes[b]
        partner[na], partner[nb] = nb, na
    kinds, children = f.kinds, f.children

    def parts(conclusions: list[int]) -> list[list[int]]:
        # group conclusions by connectivity of their subtrees through axiom links
        owner: dict[int, int] = {}
        uf = _UnionFind(len(conclusions))
        for i, c in enumerate(conclusions):
            stack = [c]
            while stack:
                nid = stack.pop()
                owner[nid] = i
                if kinds[nid] == LEAF:
                    other = owner.get(partner[nid])
                    if other is not None:
                        uf.union(i, other)
                else:
                    stack.extend(children[nid])
        groups: dict[int, list[int]] = {}
        for i, c in enumerate(conclusions):
            groups.setdefault(uf.find(i), []).append(c)
        return list(groups.values())

    def acyclic(conclusions: list[int]) -> bool:
        stack = list(conclusions)
        conclusions = []
        while stack:
            c = stack.pop()
            if kinds[c] == OR:
                stack.extend(children[c])
            else:
                conclusions.append(c)
        groups = parts(conclusions)
        if len(groups) > 1:
            return all(acyclic(g) for g in groups)
        if all(kinds[c] == LEAF for c in conclusions):
            return len(conclusions) == 2
        for t in conclusions:
            if kinds[t] != AND:
                continue
            left, right = children[t]
            rest = [c for c in conclusions if c != t]
            sides = parts(rest + [left, right])
            if len(sides) == 2:
                return all(acyclic(side) for side in sides)
        return False

    return acyclic([0])
