"""Chromatic numbers and chromatic spectra of signed graphs under switching."""

from .core import (
    NEGATIVE,
    POSITIVE,
    BalanceWitness,
    Graph,
    Signature,
    SignedGraph,
    TheoremViolationError,
    are_equivalent,
    canonical_form,
    circuit_sign,
    delete_vertex,
    induced_subgraph,
    is_antibalanced,
    is_balanced,
    spanning_forest,
    switch,
)
from .coloring import (
    CYCLIC,
    MODELS,
    SYMMETRIC,
    Coloring,
    Palette,
    chromatic_number,
    find_coloring,
    oracle_chromatic_number,
    validate_coloring,
)
from .spectrum import (
    SpectrumReport,
    chromatic_spectrum,
    min_chromatic_shortcut,
    signature_class_representatives,
)
from .critical import (
    CriticalityCertificate,
    classify_small_critical,
    extract_critical_subgraph,
    is_critical,
)
from .constructions import extend_coloring, lift_signature
from .formats import (
    CorpusEntry,
    FormatError,
    emit_graph6,
    emit_report,
    emit_signed_edgelist,
    load_corpus,
    parse_graph6,
    parse_sign_string,
    parse_signed_edgelist,
    sign_string,
)
from .verify import EntryVerification, ModelSummary, verify_corpus, verify_entry

__version__ = "0.1.0"

__all__ = [
    "BalanceWitness",
    "Coloring",
    "CorpusEntry",
    "CriticalityCertificate",
    "CYCLIC",
    "EntryVerification",
    "FormatError",
    "Graph",
    "MODELS",
    "ModelSummary",
    "NEGATIVE",
    "POSITIVE",
    "Palette",
    "Signature",
    "SignedGraph",
    "SpectrumReport",
    "SYMMETRIC",
    "TheoremViolationError",
    "are_equivalent",
    "canonical_form",
    "chromatic_number",
    "chromatic_spectrum",
    "circuit_sign",
    "classify_small_critical",
    "delete_vertex",
    "emit_graph6",
    "emit_report",
    "emit_signed_edgelist",
    "extend_coloring",
    "extract_critical_subgraph",
    "find_coloring",
    "induced_subgraph",
    "is_antibalanced",
    "is_balanced",
    "is_critical",
    "lift_signature",
    "load_corpus",
    "min_chromatic_shortcut",
    "oracle_chromatic_number",
    "parse_graph6",
    "parse_sign_string",
    "parse_signed_edgelist",
    "sign_string",
    "signature_class_representatives",
    "spanning_forest",
    "switch",
    "validate_coloring",
    "verify_corpus",
    "verify_entry",
]
