"""Floating-point side: sampled varieties, row maps, homotopies, reflections, winding."""

from .kernels import BACKEND, USE_NUMBA
from .maps import (
    Circle,
    Explicit,
    MapTrace,
    Sphere2,
    VarietySample,
    circle_ring,
    elementary_path_check,
    eval_row_map,
    normalize_to_sphere,
    sample_variety,
    sphere_ring,
    straight_line_homotopy_check,
    trace_to_csv,
    trace_to_json,
    vector_field_report,
)
from .reflections import reflection, reflection_matrix, rotation_between, vaserstein_midpoint
from .winding import elementary_action_preserves_winding, winding_number, winding_report

__all__ = [
    "BACKEND",
    "USE_NUMBA",
    "Circle",
    "Explicit",
    "MapTrace",
    "Sphere2",
    "VarietySample",
    "circle_ring",
    "elementary_action_preserves_winding",
    "elementary_path_check",
    "eval_row_map",
    "normalize_to_sphere",
    "reflection",
    "reflection_matrix",
    "rotation_between",
    "sample_variety",
    "sphere_ring",
    "straight_line_homotopy_check",
    "trace_to_csv",
    "trace_to_json",
    "vaserstein_midpoint",
    "vector_field_report",
    "winding_number",
    "winding_report",
]
