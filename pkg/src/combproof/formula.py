"""Classical propositional formulas: surface syntax, negation normal form, evaluation.

Two tree families live here. The surface syntax (``Var``, ``Not``, ``Bin``) is what
the parser produces. Negation normal form trees (``Lit``, ``And``, ``Or``) are what
every other module consumes; a :class:`Formula` wraps one and indexes its nodes.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Union

AND = "and"
OR = "or"
LEAF = "leaf"

LEFT = 0
RIGHT = 1

DEFAULT_MAX_VARS = 16


class FormulaSyntaxError(ValueError):
    """Malformed surface text. ``offset`` is the character position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True, order=True)
class Literal:
    variable: str
    negated: bool = False

    def dual(self) -> Literal:
        return Literal(self.variable, not self.negated)

    def is_dual(self, other: Literal) -> bool:
        return self.variable == other.variable and self.negated != other.negated

    def __str__(self) -> str:
        return ("~" if self.negated else "") + self.variable


# Surface syntax


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Not:
    arg: "InputFormula"


@dataclass(frozen=True)
class Bin:
    op: str  # "&", "|" or "->"
    left: "InputFormula"
    right: "InputFormula"


InputFormula = Union[Var, Not, Bin]


# Negation normal form trees


@dataclass(frozen=True)
class Lit:
    literal: Literal


@dataclass(frozen=True)
class And:
    left: "Tree"
    right: "Tree"


@dataclass(frozen=True)
class Or:
    left: "Tree"
    right: "Tree"


Tree = Union[Lit, And, Or]


def lit(name: str, negated: bool = False) -> Lit:
    return Lit(Literal(name, negated))


def or_chain(trees) -> Tree:
    """Left-associated disjunction of a nonempty sequence of trees."""
    it = iter(trees)
    acc = next(it)
    for t in it:
        acc = Or(acc, t)
    return acc


def and_chain(trees) -> Tree:
    it = iter(trees)
    acc = next(it)
    for t in it:
        acc = And(acc, t)
    return acc


def leaf_count(t: Tree) -> int:
    n = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Lit):
            n += 1
        else:
            stack.append(node.left)
            stack.append(node.right)
    return n


def tree_literals(t: Tree) -> list[Literal]:
    out: list[Literal] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Lit):
            out.append(node.literal)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return out


class Formula:
    """An NNF tree together with a node index.

    Node ids are preorder positions (root is 0). Leaf ids are left-to-right
    positions among the leaves. Both are fixed by the tree shape alone.
    """

    def __init__(self, tree: Tree):
        self.tree = tree
        kinds: list[str] = []
        children: list[tuple[int, int] | None] = []
        parents: list[int] = []
        depths: list[int] = []
        literals: list[Literal | None] = []
        leaf_nodes: list[int] = []
        node_leaf: list[int] = []

        # preorder; children are patched in once their ids are known
        stack: list[tuple[Tree, int, int, int]] = [(tree, -1, 0, LEFT)]
        while stack:
            node, parent, depth, side = stack.pop()
            nid = len(kinds)
            parents.append(parent)
            depths.append(depth)
            children.append(None)
            if parent >= 0:
                pc = children[parent]
                if side == LEFT:
                    children[parent] = (nid, -1)
                else:
                    children[parent] = (pc[0], nid)
            if isinstance(node, Lit):
                kinds.append(LEAF)
                literals.append(node.literal)
                node_leaf.append(len(leaf_nodes))
                leaf_nodes.append(nid)
            else:
                kinds.append(AND if isinstance(node, And) else OR)
                literals.append(None)
                node_leaf.append(-1)
                stack.append((node.right, nid, depth + 1, RIGHT))
                stack.append((node.left, nid, depth + 1, LEFT))

        self.kinds = tuple(kinds)
        self.children = tuple(children)
        self.parents = tuple(parents)
        self.depths = tuple(depths)
        self.literals = tuple(literals)
        self.leaf_nodes = tuple(leaf_nodes)
        self.node_leaf = tuple(node_leaf)

    @classmethod
    def parse(cls, text: str) -> Formula:
        return cls(to_nnf(parse_input(text)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Formula) and self.tree == other.tree

    def __hash__(self) -> int:
        return hash(self.tree)

    def __repr__(self) -> str:
        return f"Formula({to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)

    @property
    def size(self) -> int:
        return len(self.kinds)

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_nodes)

    def leaf_literal(self, leaf: int) -> Literal:
        return self.literals[self.leaf_nodes[leaf]]

    @cached_property
    def or_nodes(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.kinds) if k == OR)

    @cached_property
    def and_nodes(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.kinds) if k == AND)

    @cached_property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted({self.literals[n].variable for n in self.leaf_nodes}))

    @cached_property
    def meet_table(self) -> tuple[tuple[str | None, ...], ...]:
        """``meet_table[a][b]`` is the connective at the meet of leaves a and b."""
        n = self.n_leaves
        table = [[None] * n for _ in range(n)]
        # leaves below each node, bottom-up over reversed preorder
        below: list[list[int]] = [[] for _ in range(self.size)]
        for nid in range(self.size - 1, -1, -1):
            ch = self.children[nid]
            if ch is None:
                below[nid] = [self.node_leaf[nid]]
                continue
            left, right = below[ch[0]], below[ch[1]]
            kind = self.kinds[nid]
            for a in left:
                row = table[a]
                for b in right:
                    row[b] = kind
                    table[b][a] = kind
            below[nid] = left + right
        return tuple(tuple(r) for r in table)


# Parsing

_TOKEN = re.compile(r"\s*(?:(?P<atom>[A-Za-z][A-Za-z0-9_]*)|(?P<op>->|[~!&|()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise FormulaSyntaxError(f"unexpected character {text[offset]!r}", offset)
        if m.group("atom") is not None:
            tokens.append(("atom", m.group("atom"), m.start("atom")))
        else:
            op = m.group("op")
            tokens.append(("~" if op == "!" else op, op, m.start("op")))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, what: str):
        kind, value, offset = self.tokens[self.i]
        found = "end of input" if kind == "eof" else repr(value)
        raise FormulaSyntaxError(f"expected {what}, found {found}", offset)

    def implication(self) -> InputFormula:
        left = self.disjunction()
        if self.peek() == "->":
            self.take()
            return Bin("->", left, self.implication())
        return left

    def disjunction(self) -> InputFormula:
        acc = self.conjunction()
        while self.peek() == "|":
            self.take()
            acc = Bin("|", acc, self.conjunction())
        return acc

    def conjunction(self) -> InputFormula:
        acc = self.unary()
        while self.peek() == "&":
            self.take()
            acc = Bin("&", acc, self.unary())
        return acc

    def unary(self) -> InputFormula:
        kind = self.peek()
        if kind == "~":
            self.take()
            return Not(self.unary())
        if kind == "atom":
            return Var(self.take()[1])
        if kind == "(":
            self.take()
            inner = self.implication()
            if self.peek() != ")":
                self.fail("')'")
            self.take()
            return inner
        self.fail("a formula")


def parse_input(text: str) -> InputFormula:
    """Parse surface text. Precedence ``~`` > ``&`` > ``|`` > ``->``; ``->`` is right-associative."""
    p = _Parser(text)
    result = p.implication()
    if p.peek() != "eof":
        p.fail("end of input")
    return result


def to_nnf(f: InputFormula | Tree) -> Tree:
    """Desugar implications and push negations to the atoms."""

    def go(g, positive: bool) -> Tree:
        if isinstance(g, Var):
            return Lit(Literal(g.name, not positive))
        if isinstance(g, Not):
            return go(g.arg, not positive)
        if isinstance(g, Lit):
            return g if positive else Lit(g.literal.dual())
        if isinstance(g, (And, Or)):
            conj = isinstance(g, And) == positive
            l, r = go(g.left, positive), go(g.right, positive)
            return And(l, r) if conj else Or(l, r)
        if g.op == "->":
            l, r = go(g.left, not positive), go(g.right, positive)
            return Or(l, r) if positive else And(l, r)
        l, r = go(g.left, positive), go(g.right, positive)
        conj = (g.op == "&") == positive
        return And(l, r) if conj else Or(l, r)

    return go(f, True)


# Printing


def tree_text(t: Tree) -> str:
    if isinstance(t, Lit):
        return str(t.literal)
    op = " & " if isinstance(t, And) else " | "
    parts = []
    for side, child in ((LEFT, t.left), (RIGHT, t.right)):
        s = tree_text(child)
        # a left child with the same connective chains without parentheses
        if not isinstance(child, Lit) and not (side == LEFT and type(child) is type(t)):
            s = f"({s})"
        parts.append(s)
    return op.join(parts)


def to_text(f: Formula | Tree) -> str:
    return tree_text(f.tree if isinstance(f, Formula) else f)


# Queries


def leaves(f: Formula) -> list[tuple[int, Literal]]:
    return [(i, f.literals[n]) for i, n in enumerate(f.leaf_nodes)]


def _check_leaf(f: Formula, a: int) -> None:
    if not 0 <= a < f.n_leaves:
        raise IndexError(f"leaf {a} out of range for a formula with {f.n_leaves} leaves")


def meet(f: Formula, a: int, b: int) -> str:
    """Connective (``AND`` or ``OR``) labelling the least common ancestor of two leaves."""
    _check_leaf(f, a)
    _check_leaf(f, b)
    if a == b:
        raise ValueError("meet of a leaf with itself is undefined")
    x, y = f.leaf_nodes[a], f.leaf_nodes[b]
    depths, parents = f.depths, f.parents
    while depths[x] > depths[y]:
        x = parents[x]
    while depths[y] > depths[x]:
        y = parents[y]
    while x != y:
        x, y = parents[x], parents[y]
    return f.kinds[x]


def evaluate(f: Formula | Tree, assignment: Mapping[str, bool]) -> bool:
    tree = f.tree if isinstance(f, Formula) else f

    def go(t: Tree) -> bool:
        if isinstance(t, Lit):
            try:
                value = assignment[t.literal.variable]
            except KeyError:
                raise KeyError(f"no value for variable {t.literal.variable!r}") from None
            return value != t.literal.negated
        if isinstance(t, And):
            return go(t.left) and go(t.right)
        return go(t.left) or go(t.right)

    return go(tree)


def assignments(variables) -> Iterator[dict[str, bool]]:
    variables = list(variables)
    for row in itertools.product((False, True), repeat=len(variables)):
        yield dict(zip(variables, row))


def is_tautology(f: Formula | Tree, max_vars: int = DEFAULT_MAX_VARS) -> bool:
    """Exhaustive truth table.

    Every row is evaluated at once: each variable is an integer whose bit ``r``
    is its value in row ``r`` of the table.
    """
    tree = f.tree if isinstance(f, Formula) else f
    variables = sorted({l.variable for l in tree_literals(tree)})
    k = len(variables)
    if k > max_vars:
        raise ValueError(f"{k} variables exceeds the truth-table cap of {max_vars}")
    rows = 1 << k
    full = (1 << rows) - 1
    columns = {}
    for i, v in enumerate(variables):
        bits = 0
        for r in range(rows):
            if (r >> i) & 1:
                bits |= 1 << r
        columns[v] = bits

    def go(t: Tree) -> int:
        if isinstance(t, Lit):
            bits = columns[t.literal.variable]
            return full & ~bits if t.literal.negated else bits
        if isinstance(t, And):
            return go(t.left) & go(t.right)
        return go(t.left) | go(t.right)

    return go(tree) == full
