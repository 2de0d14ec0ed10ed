"""Discrete Frechet distance under translation.

Exact decision and additive-epsilon value computation for the minimum
discrete Frechet distance over all planar translations of one curve, plus a
benchmark harness.
"""

from .arrangement import (
    ContributionReport,
    DifferenceIndex,
    TestDistanceInterval,
    candidate_translations,
    count_contributing_annuli,
    count_contributing_circles,
    local_arrangement_decide,
    size_bound,
)
from .bench import (
    BenchRecord,
    QueryRecord,
    estimate_arrangement_size,
    gen_queries,
    run_bench,
)
from .curves import (
    Curve,
    CurveFormatError,
    CurveStats,
    TranslatedView,
    curve_stats,
    load_curve,
    load_manifest,
    translate_view,
)
from .decider import (
    BoxNode,
    DeciderParams,
    DeciderTrace,
    decide_translation,
    initial_search_box,
)
from .frechet import (
    BracketError,
    FrechetQueryCounter,
    decide_frechet,
    frechet_value_exact,
    frechet_value_search,
)
from .geometry import (
    Annulus,
    AxisBox,
    Circle,
    Point2,
    Translation,
    annulus_intersects_box,
    circle_box_boundary_intersections,
    circle_circle_intersections,
    circle_contributes,
    disks_intersection_box,
)
from .value import (
    PrioritizedBox,
    ValueParams,
    ValueTrace,
    binary_search_value,
    initial_estimates,
    lipschitz_only_value,
    lmf_value,
)

__version__ = "0.1.0"
