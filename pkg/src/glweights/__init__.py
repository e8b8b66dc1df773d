"""Exact top-weight gl(N) weight-system evaluation on open Jacobi diagrams."""

from .casimir import CasimirPoly, as_monomial, poly_from_json, poly_to_json, term_sort_key
from .diagram import (
    BState,
    Diagram,
    Face,
    InvalidDiagramError,
    SurfaceTrace,
    boundary_monomial,
    diagram_from_json,
    diagram_to_json,
    is_connected,
    load_diagram,
    save_diagram,
    trace_surface,
    validate,
)
from .families import (
    PontNeufParams,
    enumerate_params,
    pont_neuf,
    pont_neuf_cd_closed_form,
    wheel,
    wheel_closed_form,
)
from .genfunc import (
    k1_dimension,
    k2_dimension,
    k3_conjecture_coefficients,
    k3_lower_bound_coefficients,
    series_coefficients,
)
from .linalg import IndependenceReport, coefficient_matrix, independence_check, rank_exact
from .partitions import (
    admissible_count,
    ascending_partitions,
    conjugate_partition,
    count_weight_monomials,
    dimension_bound_report,
    estimate_partition_count,
    estimate_partition_count_min2,
    is_admissible,
    lower_bound_count,
    partition_count,
    partition_count_min2,
    to_admissible,
)
from .weights import (
    DEFAULT_STATE_CAP,
    StateCapError,
    ZeroWeightError,
    gl_weight,
    gl_weight_top,
    gl_weight_top_fast,
    proper_vertices,
)

__version__ = "0.1.0"

__all__ = [
    "BState",
    "CasimirPoly",
    "DEFAULT_STATE_CAP",
    "Diagram",
    "Face",
    "IndependenceReport",
    "InvalidDiagramError",
    "PontNeufParams",
    "StateCapError",
    "SurfaceTrace",
    "ZeroWeightError",
    "admissible_count",
    "as_monomial",
    "ascending_partitions",
    "boundary_monomial",
    "coefficient_matrix",
    "conjugate_partition",
    "count_weight_monomials",
    "diagram_from_json",
    "diagram_to_json",
    "dimension_bound_report",
    "enumerate_params",
    "estimate_partition_count",
    "estimate_partition_count_min2",
    "gl_weight",
    "gl_weight_top",
    "gl_weight_top_fast",
    "independence_check",
    "is_admissible",
    "is_connected",
    "k1_dimension",
    "k2_dimension",
    "k3_conjecture_coefficients",
    "k3_lower_bound_coefficients",
    "load_diagram",
    "lower_bound_count",
    "partition_count",
    "partition_count_min2",
    "pont_neuf",
    "pont_neuf_cd_closed_form",
    "poly_from_json",
    "poly_to_json",
    "proper_vertices",
    "rank_exact",
    "save_diagram",
    "series_coefficients",
    "term_sort_key",
    "to_admissible",
    "trace_surface",
    "validate",
    "wheel",
    "wheel_closed_form",
]
