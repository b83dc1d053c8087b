"""Sweep map on generalized Dyck paths, with linear-time inversion.

The sweep map reorders a path's steps by their starting levels.  This
package computes it for four families of paths -- plain rise-vector paths,
their plus/minus variants with fractional rises, and rational paths -- and
inverts it in linear time for the first three via a fill/rank/walk
pipeline.  An exhaustive oracle certifies bijectivity on small instances.
"""

from .oracle import (
    BijectionReport,
    FamilyEnumeration,
    OracleError,
    brute_invert,
    certify_bijection,
    enumerate_family,
    random_path,
)
from .paths import (
    Diagnostic,
    FamilySpec,
    PathError,
    RankSequence,
    StepSequence,
    SWWord,
    dyck_diagnostic,
    emit_steps,
    from_minus,
    from_plus,
    infer_family,
    parse_steps,
    path_from_json,
    path_to_json,
    ranks,
    to_minus,
    to_plus,
    validate,
)
from .ranking import RankCounts, RankTableau, rank_counts, rank_tableau
from .render import path_ascii, path_svg, rank_ascii, tableau_ascii, tableau_svg
from .sweep import SweepOrder, sweep, sweep_order
from .tableau import (
    Tableau,
    TableauError,
    TableauPlus,
    extend_plus,
    fill,
    from_top_row,
    is_minus_admissible,
    tableau_to_word,
    validate_tableau,
)
from .walking import (
    RankDigraph,
    SweepPermutation,
    WalkError,
    build_rank_digraph,
    invert,
    sigma_to_preimage,
    walk,
    walk_graph,
    walk_minus,
    walk_plus,
)

__version__ = "0.1.0"

__all__ = [
    "BijectionReport",
    "Diagnostic",
    "FamilyEnumeration",
    "FamilySpec",
    "OracleError",
    "PathError",
    "RankCounts",
    "RankDigraph",
    "RankSequence",
    "RankTableau",
    "StepSequence",
    "SWWord",
    "SweepOrder",
    "SweepPermutation",
    "Tableau",
    "TableauError",
    "TableauPlus",
    "WalkError",
    "brute_invert",
    "build_rank_digraph",
    "certify_bijection",
    "dyck_diagnostic",
    "emit_steps",
    "enumerate_family",
    "extend_plus",
    "fill",
    "from_minus",
    "from_plus",
    "from_top_row",
    "infer_family",
    "invert",
    "is_minus_admissible",
    "parse_steps",
    "path_ascii",
    "path_from_json",
    "path_svg",
    "path_to_json",
    "rank_ascii",
    "rank_counts",
    "rank_tableau",
    "random_path",
    "ranks",
    "sigma_to_preimage",
    "sweep",
    "sweep_order",
    "tableau_ascii",
    "tableau_svg",
    "tableau_to_word",
    "to_minus",
    "to_plus",
    "validate",
    "validate_tableau",
    "walk",
    "walk_graph",
    "walk_minus",
    "walk_plus",
]
