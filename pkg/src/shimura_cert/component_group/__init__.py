from .hypotheses import SmoothModelHypotheses, smooth_model_hypotheses
from .laplacian import (
    BoundaryMaps,
    ComponentGroup,
    FlowProblem,
    FlowReport,
    boundary_maps,
    component_group,
    is_killed_by,
    laplacian,
    verify_flow,
)
from .snf import SmithForm, smith_normal_form

__all__ = [
    "BoundaryMaps",
    "ComponentGroup",
    "FlowProblem",
    "FlowReport",
    "SmithForm",
    "SmoothModelHypotheses",
    "boundary_maps",
    "component_group",
    "is_killed_by",
    "laplacian",
    "smith_normal_form",
    "smooth_model_hypotheses",
    "verify_flow",
]
