"""Exact pattern matching in node-labeled graphs, and compilers that turn
orthogonal-vectors instances into hardness-style benchmark graphs whose
pattern matches exactly when the instance has an orthogonal pair."""

from .alphabets import ALPHABETS, BASE4, BINARY, ZIGZAG6, Alphabet, get_alphabet
from .errors import (
    AlphabetMismatchError,
    FormatError,
    OracleBudgetError,
    PmlgError,
    TriviallyOrthogonalError,
)
from .graph import (
    DegreeStats,
    LabeledGraph,
    NodeAnnotation,
    degree_stats,
    expand_labels,
    is_acyclic,
    is_deterministic,
    validate_graph,
)
from .graph_io import read_graph, read_pattern, write_graph, write_pattern
from .harness import (
    ScalingRow,
    VerificationReport,
    bench_scaling,
    build_artifact,
    save_artifact,
    verify_reduction,
)
from .matching import (
    MatchOccurrence,
    Pattern,
    find_matches,
    match_exists,
    oracle_match_exists,
)
from .ov import (
    GENERATOR_MODES,
    OvInstance,
    dot,
    gen_ov_instance,
    read_ov,
    solve_ov_bruteforce,
    write_ov,
)
from .reductions import (
    ENC_ONE,
    ENC_ZERO,
    JOLLY_CHAIN,
    VARIANTS,
    ZERO_ONLY_CHAIN,
    Fragment,
    ReductionArtifact,
    assemble_undirected,
    assemble_zigzag,
    build_deterministic_dag,
    build_gu,
    build_gw,
    build_lgu,
    build_lgw,
    build_pattern,
    build_zigzag_patterns,
    encode_binary,
    orient_to_dag,
)

__all__ = [name for name in dir() if not name.startswith("_")]
