"""Spectral-radius extremality verification over maximal outerplanar graphs.

Enumerates the isomorphism classes of maximal outerplanar graphs order by
order (as convex-polygon triangulations), computes certified enclosures of
each spectral radius, and checks that the fan K1 v P(n-1) wins everywhere
except at the single exceptional order 6.
"""

from .bounds import (
    claim1_lower,
    claim5_threshold,
    inequality4_coefficient,
    planar_bound_catalog,
    shu_hong,
)
from .graphs import (
    GraphError,
    SmallGraph,
    fan_graph,
    from_graph6,
    to_graph6,
    wheel_graph,
)
from .outerplanarity import (
    K4,
    K23,
    NotMaximalOuterplanarError,
    has_minor,
    is_outerplanar,
    outer_hamilton_cycle,
)
from .spectral import (
    Comparison,
    ConvergenceError,
    SpectralEnclosure,
    SpectralError,
    charpoly,
    compare_radii,
    exact_compare,
    perron_enclosure,
)
from .triangulations import (
    Triangulation,
    TriangulationError,
    canonical_code,
    count_classes_burnside,
    enumerate_classes,
    extend_by_ear,
    fan_triangulation,
    incremental_class_codes,
    to_graph,
    triangulations,
)
from .verifier import (
    ExtremalStructure,
    NReport,
    VerificationError,
    analyze_extremal,
    emit_reports,
    verify_n,
    verify_range,
)

__all__ = [
    "Comparison",
    "ConvergenceError",
    "ExtremalStructure",
    "GraphError",
    "K23",
    "K4",
    "NReport",
    "NotMaximalOuterplanarError",
    "SmallGraph",
    "SpectralEnclosure",
    "SpectralError",
    "Triangulation",
    "TriangulationError",
    "VerificationError",
    "analyze_extremal",
    "canonical_code",
    "charpoly",
    "claim1_lower",
    "claim5_threshold",
    "compare_radii",
    "count_classes_burnside",
    "emit_reports",
    "enumerate_classes",
    "exact_compare",
    "extend_by_ear",
    "fan_graph",
    "fan_triangulation",
    "from_graph6",
    "has_minor",
    "incremental_class_codes",
    "inequality4_coefficient",
    "is_outerplanar",
    "outer_hamilton_cycle",
    "perron_enclosure",
    "planar_bound_catalog",
    "shu_hong",
    "to_graph",
    "to_graph6",
    "triangulations",
    "verify_n",
    "verify_range",
    "wheel_graph",
]
