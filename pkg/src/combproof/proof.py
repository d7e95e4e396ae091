"""Combinatorial proofs: a proof net on an upper formula plus a leaf map down to the proved formula."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cliques import cliques, is_clique
from .formula import Formula
from .net import Linking, LinkingError, dr_check_fast, first_bad_switching, validate_linking

# Stages in the order verify runs them.
STAGES = ("linking", "net", "map", "labels", "cliques")

_WITNESS_SWITCHING_CAP = 20


class LeafMapError(ValueError):
    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class CombinatorialProof:
    lower: Formula
    upper: Formula
    linking: Linking
    leaf_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "leaf_map", tuple(self.leaf_map))


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    stage: str | None = None
    reason: str = ""
    witness: object = None

    def __bool__(self) -> bool:
        return self.accepted

    def line(self) -> str:
        if self.accepted:
            return "ACCEPTED"
        return f"REJECTED: {self.stage}: {_witness_text(self.witness)}"


def _witness_text(w) -> str:
    if isinstance(w, dict):
        return "{" + ", ".join(f"{k}: {'L' if v == 0 else 'R'}" for k, v in sorted(w.items())) + "}"
    if isinstance(w, (set, frozenset)):
        return "{" + ", ".join(str(x) for x in sorted(w)) + "}"
    if isinstance(w, tuple):
        return "(" + ", ".join(str(x) for x in w) + ")"
    return str(w)


def check_map_shape(upper: Formula, lower: Formula, leaf_map: Sequence[int]) -> None:
    if len(leaf_map) != upper.n_leaves:
        raise LeafMapError(f"map has {len(leaf_map)} entries for {upper.n_leaves} upper leaves",
                           len(leaf_map))
    for x, y in enumerate(leaf_map):
        if not 0 <= y < lower.n_leaves:
            raise LeafMapError(f"upper leaf {x} maps to {y}, outside the lower formula", x)


def check_labels(upper: Formula, lower: Formula, leaf_map: Sequence[int]) -> None:
    for x, y in enumerate(leaf_map):
        a, b = upper.leaf_literal(x), lower.leaf_literal(y)
        if a != b:
            raise LeafMapError(f"upper leaf {x} ({a}) maps to lower leaf {y} ({b})", x)


def check_cliques(upper: Formula, lower: Formula, leaf_map: Sequence[int]) -> None:
    """Every clique of the upper formula must land on exactly a clique of the lower one."""
    checked: set[frozenset[int]] = set()
    for c in cliques(upper):
        image = frozenset(leaf_map[x] for x in c)
        if image in checked:
            continue
        if not is_clique(lower, image):
            raise LeafMapError(
                f"clique {sorted(c)} of the upper formula maps to {sorted(image)}, "
                f"not a clique of the lower formula", c)
        checked.add(image)


def verify(p: CombinatorialProof, mix: bool = False) -> Verdict:
    try:
        validate_linking(p.upper, p.linking)
    except LinkingError as e:
        return Verdict(False, "linking", str(e), e.witness)

    if not dr_check_fast(p.upper, p.linking, mix):
        witness = None
        if len(p.upper.or_nodes) <= _WITNESS_SWITCHING_CAP:
            bad = first_bad_switching(p.upper, p.linking, mix)
            if bad is not None:
                witness = bad[0]
                reason = f"switching graph has a {'cycle' if bad[1] == 'cycle' else 'second component'}"
            else:
                reason = "net rejected"
        else:
            reason = "net rejected"
        return Verdict(False, "net", reason, witness)

    for stage, check in (("map", check_map_shape), ("labels", check_labels),
                         ("cliques", check_cliques)):
        try:
            check(p.upper, p.lower, p.leaf_map)
        except LeafMapError as e:
            return Verdict(False, stage, str(e), e.witness)
    return Verdict(True)
