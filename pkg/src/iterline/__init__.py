"""Exact computation of inner metric parameters and integer sequences of
iterated line digraphs."""

from .digraph import (
    Digraph,
    build,
    converse,
    from_text,
    induced_subgraph,
    is_isomorphic,
    line,
    line_iterate,
    longest_path_length,
    scc,
    to_text,
)
from .exactla import (
    EquitablePartition,
    IntMatrix,
    LinearRecurrence,
    MonicPolynomial,
    adjacency_matrix,
    coarsest_equitable_partition,
    minimal_polynomial,
    minimal_recurrence,
    verify_regular,
    walk_count,
)
from .families import (
    cyclic_kautz,
    de_bruijn,
    kautz,
    pendant_cycle,
    radii_digraph,
    square_free,
    star_cycle,
    sub_kautz,
    unicyclic,
)
from .metrics import (
    Behavior,
    BehaviorKind,
    DistanceTable,
    MetricReport,
    classify_behavior,
    distances,
    inner_diameter_sequence,
    mean_inner_distance,
    metric_report,
)
from .oeis import OeisMatch, match_local, search_remote
from .sequences import (
    ForbiddenWordSpec,
    SequenceReport,
    ck4_closed_form,
    count_avoiding_words,
    forbidden_word_digraph,
    inner_diameter_report,
    order_sequence,
    strip_forbidden,
)

__version__ = "0.1.0"
