"""JSON proof documents and DOT figures."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .formula import AND, LEAF, Formula, FormulaSyntaxError, to_text
from .net import Linking
from .proof import CombinatorialProof

FIELDS = ("lower", "upper", "links", "map", "mix")
REQUIRED = ("lower", "upper", "links", "map")


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class ProofDocument:
    proof: CombinatorialProof
    mix: bool = False


def _int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(path, f"expected an integer, got {value!r}")
    return value


def _formula(value, path: str) -> Formula:
    if not isinstance(value, str):
        raise SchemaError(path, f"expected a formula string, got {value!r}")
    try:
        return Formula.parse(value)
    except FormulaSyntaxError as e:
        raise SchemaError(path, str(e)) from None


def parse_document(text: str) -> ProofDocument:
    """Parse and structurally validate. Duality, net and clique checks are left to verify."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("$", f"invalid JSON: {e}") from None
    if not isinstance(data, dict):
        raise SchemaError("$", "expected a JSON object")
    unknown = sorted(set(data) - set(FIELDS))
    if unknown:
        raise SchemaError(f"$.{unknown[0]}", "unknown field")
    for key in REQUIRED:
        if key not in data:
            raise SchemaError(f"$.{key}", "missing field")

    lower = _formula(data["lower"], "$.lower")
    upper = _formula(data["upper"], "$.upper")

    links = data["links"]
    if not isinstance(links, list):
        raise SchemaError("$.links", "expected a list of pairs")
    pairs = []
    for i, pair in enumerate(links):
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(f"$.links[{i}]", "expected a pair [a, b]")
        for j, x in enumerate(pair):
            x = _int(x, f"$.links[{i}][{j}]")
            if not 0 <= x < upper.n_leaves:
                raise SchemaError(f"$.links[{i}][{j}]",
                                  f"leaf {x} out of range for {upper.n_leaves} upper leaves")
        pairs.append(tuple(pair))

    leaf_map = data["map"]
    if not isinstance(leaf_map, list):
        raise SchemaError("$.map", "expected a list of lower leaf indices")
    if len(leaf_map) != upper.n_leaves:
        raise SchemaError("$.map", f"has {len(leaf_map)} entries for {upper.n_leaves} upper leaves")
    for i, y in enumerate(leaf_map):
        y = _int(y, f"$.map[{i}]")
        if not 0 <= y < lower.n_leaves:
            raise SchemaError(f"$.map[{i}]", f"leaf {y} out of range for {lower.n_leaves} lower leaves")

    mix = data.get("mix", False)
    if not isinstance(mix, bool):
        raise SchemaError("$.mix", f"expected a boolean, got {mix!r}")
    return ProofDocument(CombinatorialProof(lower, upper, Linking(pairs), tuple(leaf_map)), mix)


def load_proof(text: str) -> CombinatorialProof:
    return parse_document(text).proof


def save_proof(p: CombinatorialProof, mix: bool = False) -> str:
    data = {
        "lower": to_text(p.lower),
        "upper": to_text(p.upper),
        "links": [list(pair) for pair in p.linking],
        "map": list(p.leaf_map),
        "mix": mix,
    }
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}" for k, v in data.items())
    return "{\n" + body + "\n}\n"


# Figures


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _literal_label(lit) -> str:
    return ("¬" if lit.negated else "") + lit.variable


def _subtree(lines: list[str], f: Formula, prefix: str, nid: int, depth: int) -> None:
    indent = "  " * depth
    if f.kinds[nid] == LEAF:
        leaf = f.node_leaf[nid]
        lines.append(f"{indent}{prefix}{leaf} [label={_quote(_literal_label(f.literals[nid]))}];")
        return
    op = "∧" if f.kinds[nid] == AND else "∨"
    lines.append(f"{indent}subgraph cluster_{prefix}{nid} {{")
    lines.append(f"{indent}  label={_quote(op)};")
    for child in f.children[nid]:
        _subtree(lines, f, prefix, child, depth + 1)
    lines.append(f"{indent}}}")


def emit_figure(p: CombinatorialProof) -> str:
    """DOT text: upper leaves on one rank, lower leaves below, links as arcs, the map as straight edges."""
    lines = [
        "graph combinatorial_proof {",
        "  newrank=true;",
        "  node [shape=plaintext];",
    ]
    _subtree(lines, p.upper, "u", 0, 1)
    _subtree(lines, p.lower, "l", 0, 1)
    lines.append("  { rank=same; " + " ".join(f"u{i};" for i in range(p.upper.n_leaves)) + " }")
    lines.append("  { rank=same; " + " ".join(f"l{i};" for i in range(p.lower.n_leaves)) + " }")
    for a, b in p.linking:
        lines.append(f"  u{a} -- u{b} [style=bold, constraint=false, class=link];")
    for x, y in enumerate(p.leaf_map):
        lines.append(f"  u{x} -- l{y} [class=map];")
    lines.append("}")
    return "\n".join(lines) + "\n"
