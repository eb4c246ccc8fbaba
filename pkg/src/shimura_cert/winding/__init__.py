from .cycles import CycleFailure, CyclePath, CycleShape, cycle_shape_report, find_cycle_combination
from .gross import (
    EisensteinVector,
    GrossVector,
    boundary,
    eisenstein_vector,
    gross_vector,
    gross_vectors,
    lift_to_desingularized,
    push_vertices,
)

__all__ = [
    "CycleFailure",
    "CyclePath",
    "CycleShape",
    "EisensteinVector",
    "GrossVector",
    "boundary",
    "cycle_shape_report",
    "eisenstein_vector",
    "find_cycle_combination",
    "gross_vector",
    "gross_vectors",
    "lift_to_desingularized",
    "push_vertices",
]
