"""AND-optimal XOR-AND circuits for all n monomials of degree n-1."""

from ._core import (
    Anf,
    Circuit,
    Construction,
    ParseError,
    check_exhaustive,
    check_lemma_suite,
    check_sampled,
    circuit_from_json,
    degree_lower_bound,
    expected_and_count,
    import_bristol,
    reference_f,
    stage_and_counts,
    synthesize,
)

__all__ = [
    "Anf",
    "Circuit",
    "Construction",
    "ParseError",
    "check_exhaustive",
    "check_lemma_suite",
    "check_sampled",
    "circuit_from_json",
    "degree_lower_bound",
    "expected_and_count",
    "import_bristol",
    "reference_f",
    "stage_and_counts",
    "synthesize",
]
