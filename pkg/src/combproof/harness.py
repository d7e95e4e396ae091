"""Differential and exhaustive cross-checks tying the prover, the verifier and the oracles together."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .document import load_proof, save_proof
from .formula import And, Formula, Lit, Literal, Or, Tree, is_tautology
from .generate import random_formula, random_linked_formula, random_net, random_shape, variable_name
from .net import Linking, dr_check_exhaustive, dr_check_fast
from .proof import CombinatorialProof, verify
from .sequent import prove_combinatorial

NetChecker = Callable[[Formula, Linking, bool], bool]

# switchings double with every par; beyond this the oracle is skipped
EXHAUSTIVE_OR_CAP = 16


@dataclass
class DifferentialReport:
    formulas: int = 0
    tautologies: int = 0
    proofs_accepted: int = 0
    net_instances: int = 0
    mutants: int = 0
    mutants_accepted: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        return (f"formulas={self.formulas} tautologies={self.tautologies} "
                f"proofs_accepted={self.proofs_accepted} net_instances={self.net_instances} "
                f"mutants={self.mutants} mutants_accepted={self.mutants_accepted} "
                f"violations={len(self.violations)}")


def _mutate_tree(rng: random.Random, t: Tree, variables: list[str]) -> Tree:
    """Flip one connective or replace one literal; leaf count is preserved."""
    nodes: list[Tree] = []
    stack = [t]
    while stack:
        node = stack.pop()
        nodes.append(node)
        if not isinstance(node, Lit):
            stack += [node.left, node.right]
    target = rng.randrange(len(nodes))

    def go(node: Tree, counter: list[int]) -> Tree:
        here = counter[0]
        counter[0] += 1
        if here == target:
            if isinstance(node, Lit):
                lit = node.literal
                if rng.random() < 0.5:
                    return Lit(lit.dual())
                return Lit(Literal(rng.choice(variables), lit.negated))
            swapped = Or if isinstance(node, And) else And
            return swapped(node.left, node.right)
        if isinstance(node, Lit):
            return node
        # preorder numbering must match the walk above: right is pushed last, popped first
        right = go(node.right, counter)
        left = go(node.left, counter)
        return type(node)(left, right)

    return go(t, [0])


def mutate_proof(rng: random.Random, p: CombinatorialProof) -> CombinatorialProof:
    """Perturb one of: the lower formula, the upper formula, the linking, the leaf map."""
    kind = rng.randrange(4)
    variables = list(p.lower.variables) + [variable_name(len(p.lower.variables))]
    if kind == 0:
        lower = Formula(_mutate_tree(rng, p.lower.tree, variables))
        return CombinatorialProof(lower, p.upper, p.linking, p.leaf_map)
    if kind == 1:
        upper = Formula(_mutate_tree(rng, p.upper.tree, variables))
        return CombinatorialProof(p.lower, upper, p.linking, p.leaf_map)
    if kind == 2 and len(p.linking) >= 2:
        pairs = [list(x) for x in p.linking]
        i, j = rng.sample(range(len(pairs)), 2)
        a, b = rng.randrange(2), rng.randrange(2)
        pairs[i][a], pairs[j][b] = pairs[j][b], pairs[i][a]
        return CombinatorialProof(p.lower, p.upper, Linking(pairs), p.leaf_map)
    leaf_map = list(p.leaf_map)
    x = rng.randrange(len(leaf_map))
    same = [y for y in range(p.lower.n_leaves) if p.lower.leaf_literal(y) == p.upper.leaf_literal(x)]
    leaf_map[x] = rng.choice(same) if same and rng.random() < 0.8 else rng.randrange(p.lower.n_leaves)
    return CombinatorialProof(p.lower, p.upper, p.linking, tuple(leaf_map))


def random_document_proof(rng: random.Random, max_pairs: int = 6, max_vars: int = 3) -> CombinatorialProof:
    """A proof candidate not produced by the prover: a random net mapped into a random lower formula.

    Each upper leaf goes to a lower leaf with the same literal when one exists, so
    that the later stages get exercised rather than failing at the labels.
    """
    if rng.random() < 0.5:
        upper, linking = random_net(rng, max_pairs, max_vars, mix=rng.random() < 0.3)
    else:
        upper, linking = random_linked_formula(rng, 2 * rng.randint(1, max_pairs), max_vars)
    # lower: a random formula over some of the upper literals, with a few extra leaves
    lits = [upper.leaf_literal(i) for i in range(upper.n_leaves)]
    chosen = rng.sample(lits, rng.randint(1, len(lits)))
    chosen += [Literal(variable_name(rng.randrange(max_vars)), rng.random() < 0.5)
               for _ in range(rng.randint(0, 2))]
    rng.shuffle(chosen)
    lower = Formula(random_shape(rng, [Lit(x) for x in chosen]))
    leaf_map = []
    for x in lits:
        same = [y for y in range(lower.n_leaves) if lower.leaf_literal(y) == x]
        leaf_map.append(rng.choice(same) if same else rng.randrange(lower.n_leaves))
    return CombinatorialProof(lower, upper, linking, tuple(leaf_map))


def soundness_corpus(n: int, seed: int, max_leaves: int = 7, max_vars: int = 3) -> Iterator[str]:
    """``n`` serialized proof documents: mutated prover output and random candidates."""
    rng = random.Random(seed)
    produced = 0
    while produced < n:
        if rng.random() < 0.3:
            p = random_document_proof(rng)
        else:
            f = random_formula(rng, max_leaves, max_vars)
            p = prove_combinatorial(f)
            if p is None:
                continue
            for _ in range(rng.randint(0, 3)):
                p = mutate_proof(rng, p)
        yield save_proof(p, mix=rng.random() < 0.5)
        produced += 1


def run_differential(n: int, seed: int, max_leaves: int = 8, max_vars: int = 3,
                     fast_checker: NetChecker = dr_check_fast) -> DifferentialReport:
    """Fuzz both directions of soundness and completeness on ``n`` random formulas.

    Per formula: prover success must match the truth table; every translated proof
    must verify without MIX and survive a save/load round trip; the fast net
    checker must agree with the exhaustive one on the proof's net and on a random
    linking; a mutant of each proof that still verifies must prove a tautology.
    """
    rng = random.Random(seed)
    report = DifferentialReport()

    def compare_nets(f: Formula, l: Linking, where: str) -> None:
        if len(f.or_nodes) > EXHAUSTIVE_OR_CAP:
            return
        for mix in (False, True):
            report.net_instances += 1
            fast, slow = fast_checker(f, l, mix), dr_check_exhaustive(f, l, mix)
            if fast != slow:
                report.violations.append(
                    f"{where}: net checkers disagree (fast={fast}, exhaustive={slow}, mix={mix}) "
                    f"on {f} with links {list(l)}")

    for i in range(n):
        f = random_formula(rng, max_leaves, max_vars)
        report.formulas += 1
        valid = is_tautology(f)
        report.tautologies += valid
        p = prove_combinatorial(f)
        if (p is not None) != valid:
            report.violations.append(f"#{i}: prover {'found' if p else 'missed'} a proof of {f}, "
                                     f"truth table says {'valid' if valid else 'invalid'}")
        if p is not None:
            verdict = verify(p, mix=False)
            if verdict.accepted:
                report.proofs_accepted += 1
            else:
                report.violations.append(f"#{i}: translated proof of {f} rejected: {verdict.line()}")
            if load_proof(save_proof(p)) != p:
                report.violations.append(f"#{i}: proof of {f} does not round-trip")
            compare_nets(p.upper, p.linking, f"#{i} proof net")
            mutant = mutate_proof(rng, p)
            report.mutants += 1
            for mix in (False, True):
                if verify(mutant, mix).accepted:
                    report.mutants_accepted += 1
                    if not is_tautology(mutant.lower):
                        report.violations.append(
                            f"#{i}: mutant accepted (mix={mix}) for non-tautology {mutant.lower}")
        g, l = random_linked_formula(rng, 2 * rng.randint(1, max(1, max_leaves // 2)), max_vars)
        compare_nets(g, l, f"#{i} random linking")
    return report


# Exhaustive enumeration


def _shapes(n: int) -> Iterator[Callable[[list[Tree], list[type]], Tree]]:
    """Binary tree shapes with ``n`` leaves, as builders from leaves and connectives (preorder)."""
    if n == 1:
        yield lambda leaves, ops: leaves.pop()
        return
    for k in range(1, n):
        for left in list(_shapes(k)):
            for right in list(_shapes(n - k)):
                def build(leaves, ops, left=left, right=right):
                    op = ops.pop()
                    return op(left(leaves, ops), right(leaves, ops))
                yield build


def _literal_patterns(n: int, n_vars: int) -> Iterator[tuple[Literal, ...]]:
    """Literal sequences with variables numbered by first appearance (one per renaming class)."""

    def go(prefix: list[Literal], used: int) -> Iterator[tuple[Literal, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(min(used + 1, n_vars)):
            for neg in (False, True):
                yield from go(prefix + [Literal(variable_name(v), neg)], max(used, v + 1))

    yield from go([], 0)


def enumerate_formulas(max_leaves: int, n_vars: int) -> Iterator[Tree]:
    """Every NNF tree with at most ``max_leaves`` leaves over ``n_vars`` variables, up to renaming."""
    for n in range(1, max_leaves + 1):
        patterns = list(_literal_patterns(n, n_vars))
        shapes = list(_shapes(n))
        for shape in shapes:
            for ops in _connective_choices(n - 1):
                for lits in patterns:
                    leaves = [Lit(x) for x in reversed(lits)]
                    yield shape(leaves, list(reversed(ops)))


def _connective_choices(k: int) -> Iterator[tuple[type, ...]]:
    if k == 0:
        yield ()
        return
    for rest in _connective_choices(k - 1):
        yield rest + (And,)
        yield rest + (Or,)


def count_formulas(max_leaves: int, n_vars: int) -> int:
    """Size of :func:`enumerate_formulas` without enumerating it."""
    from math import comb

    def catalan(m: int) -> int:
        return comb(2 * m, m) // (m + 1)

    def stirling2(n: int, k: int) -> int:
        row = [1] + [0] * k
        for i in range(1, n + 1):
            row = [0] + [row[j - 1] + j * row[j] for j in range(1, k + 1)]
        return row[k]

    total = 0
    for n in range(1, max_leaves + 1):
        patterns = sum(stirling2(n, k) for k in range(1, n_vars + 1)) * 2 ** n
        total += catalan(n - 1) * 2 ** (n - 1) * patterns
    return total


@dataclass
class TheoremReport:
    checked: int = 0
    tautologies: int = 0
    discrepancies: list[str] = field(default_factory=list)
    complete: bool = False
    seconds: float = 0.0


def check_theorem(formulas: Iterator[Tree], deadline: float | None = None) -> TheoremReport:
    """Prover success must match the truth table, and every proof must verify without MIX.

    Stops early once ``deadline`` (a ``time.monotonic`` value) passes; ``complete``
    tells whether the whole stream was consumed.
    """
    report = TheoremReport()
    start = time.monotonic()
    for t in formulas:
        if deadline is not None and report.checked % 256 == 0 and time.monotonic() > deadline:
            break
        f = Formula(t)
        valid = is_tautology(f)
        p = prove_combinatorial(f)
        report.checked += 1
        report.tautologies += valid
        if (p is not None) != valid:
            report.discrepancies.append(f"prover/truth table disagree on {f}")
        elif p is not None and not verify(p, mix=False).accepted:
            report.discrepancies.append(f"proof of {f} rejected: {verify(p).line()}")
    else:
        report.complete = True
    report.seconds = time.monotonic() - start
    return report
