"""Verifier and prover for combinatorial proofs of classical propositional logic."""
from .cliques import cliques, count_resolutions, enumerate_resolutions, is_clique, resolution_leaves
from .formula import Formula, Literal, evaluate, is_tautology, leaves, meet, parse_input, to_nnf, to_text
from .net import Linking, dr_check_exhaustive, dr_check_fast, switch_graph, validate_linking
from .proof import CombinatorialProof, Verdict, check_cliques, check_labels, verify
from .sequent import SequentProof, check_sequent_proof, prove, prove_combinatorial, translate

__all__ = [
    "CombinatorialProof", "Formula", "Linking", "Literal", "SequentProof", "Verdict",
    "check_cliques", "check_labels", "check_sequent_proof", "cliques", "count_resolutions",
    "dr_check_exhaustive", "dr_check_fast", "enumerate_resolutions", "evaluate", "is_clique",
    "is_tautology", "leaves", "meet", "parse_input", "prove", "prove_combinatorial",
    "resolution_leaves", "switch_graph", "to_nnf", "to_text", "translate", "validate_linking",
    "verify",
]
