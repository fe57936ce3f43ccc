"""Weighted dual graphs of curve configurations, exact arithmetic."""

from ._bdg import (
    Graph,
    InputError,
    InvariantViolation,
    apply_moves,
    blow_down,
    blow_up_at_edge,
    blow_up_on_curve,
    build_z,
    canonical_form,
    classify_k,
    comb_decompose,
    coprime_check,
    corpus_entry,
    corpus_names,
    d_sharp,
    determinant_d,
    emit_graph_text,
    enumerate_boundaries,
    fundamental_cycle,
    is_negative_definite,
    is_rational,
    max_pa_bounded,
    pa_genus,
    pairing,
    parse_graph_file,
    parse_graph_text,
    peel_step,
    reduce_to_trivial,
    seed_graph,
    split_determinants,
    validate_boundary,
    verify_paper,
)

__all__ = [
    "Graph",
    "InputError",
    "InvariantViolation",
    "apply_moves",
    "blow_down",
    "blow_up_at_edge",
    "blow_up_on_curve",
    "build_z",
    "canonical_form",
    "classify_k",
    "comb_decompose",
    "coprime_check",
    "corpus_entry",
    "corpus_names",
    "d_sharp",
    "determinant_d",
    "emit_graph_text",
    "enumerate_boundaries",
    "fundamental_cycle",
    "is_negative_definite",
    "is_rational",
    "max_pa_bounded",
    "pa_genus",
    "pairing",
    "parse_graph_file",
    "parse_graph_text",
    "peel_step",
    "reduce_to_trivial",
    "seed_graph",
    "split_determinants",
    "validate_boundary",
    "verify_paper",
]
