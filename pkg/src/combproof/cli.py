"""Command-line entry point.

Exit codes: 0 accepted/valid, 1 rejected/invalid, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cliques import cliques
from .document import SchemaError, emit_figure, parse_document, save_proof
from .formula import Formula, FormulaSyntaxError, is_tautology
from .harness import run_differential
from .net import LinkingError, dr_check_fast, first_bad_switching, validate_linking
from .proof import Verdict
from .proof import verify as verify_proof
from .sequent import prove_combinatorial

EXIT_OK, EXIT_REJECTED, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _formula(text: str) -> Formula:
    return Formula.parse(text)


def _document(path: str):
    return parse_document(Path(path).read_text())


def cmd_taut(args) -> int:
    f = _formula(args.formula)
    valid = is_tautology(f, max_vars=args.max_vars)
    print("VALID" if valid else "INVALID")
    return EXIT_OK if valid else EXIT_REJECTED


def cmd_prove(args) -> int:
    f = _formula(args.formula)
    p = prove_combinatorial(f)
    if p is None:
        print(f"no proof: {f} is not a tautology", file=sys.stderr)
        return EXIT_REJECTED
    text = save_proof(p)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _report(verdict: Verdict) -> int:
    print(verdict.line())
    if not verdict.accepted:
        print(verdict.reason, file=sys.stderr)
    return EXIT_OK if verdict.accepted else EXIT_REJECTED


def cmd_check(args) -> int:
    doc = _document(args.file)
    return _report(verify_proof(doc.proof, mix=args.mix or doc.mix))


def cmd_net_check(args) -> int:
    doc = _document(args.file)
    p, mix = doc.proof, args.mix or doc.mix
    try:
        validate_linking(p.upper, p.linking)
    except LinkingError as e:
        return _report(Verdict(False, "linking", str(e), e.witness))
    if dr_check_fast(p.upper, p.linking, mix):
        return _report(Verdict(True))
    bad = first_bad_switching(p.upper, p.linking, mix) if len(p.upper.or_nodes) <= 20 else None
    return _report(Verdict(False, "net", "switching criterion fails", bad[0] if bad else None))


def cmd_cliques(args) -> int:
    f = _formula(args.formula)
    for c in cliques(f):
        print(" ".join(str(x) for x in sorted(c)))
    return EXIT_OK


def cmd_dot(args) -> int:
    sys.stdout.write(emit_figure(_document(args.file).proof))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    report = run_differential(args.n, args.seed, args.max_leaves, args.max_vars)
    print(report.summary())
    for v in report.violations:
        print(v, file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_REJECTED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="combproof", description="Combinatorial proofs for classical propositional logic.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("taut", help="truth-table validity")
    p.add_argument("formula")
    p.add_argument("--max-vars", type=int, default=16)
    p.set_defaults(func=cmd_taut)

    p = sub.add_parser("prove", help="prove a tautology and print its combinatorial proof")
    p.add_argument("formula")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("check", help="verify a proof document")
    p.add_argument("file")
    p.add_argument("--mix", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cliques", help="list the cliques of a formula")
    p.add_argument("formula")
    p.set_defaults(func=cmd_cliques)

    p = sub.add_parser("net-check", help="check only the linking and proof net of a document")
    p.add_argument("file")
    p.add_argument("--mix", action="store_true")
    p.set_defaults(func=cmd_net_check)

    p = sub.add_parser("dot", help="emit a DOT figure of a proof document")
    p.add_argument("file")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("fuzz", help="differential fuzzing of prover, verifier and net checkers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-leaves", type=int, default=8)
    p.add_argument("--max-vars", type=int, default=3)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormulaSyntaxError, SchemaError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
