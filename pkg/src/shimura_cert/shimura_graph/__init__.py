from .genus import genus_and_gonality, genus_formula
from .graph import V1, V2, DualGraph, Edge, Graph, Vertex, build_graph, label_vertices_by_j
from .involutions import ALAction, InvolutionError, atkin_lehner
from .modular import LabelingError, modular_polynomial
from .pipeline import GraphBundle, analyse_graph
from .quotient import (
    ExceptionalComponentError,
    QuotientGraph,
    UnsupportedCaseError,
    degree_checks,
    descend,
    desingularize,
    exceptional_component,
    quotient_by,
)
from .reports import connectivity_report, equidistribution_report, to_dot, to_json

__all__ = [
    "ALAction",
    "DualGraph",
    "Edge",
    "ExceptionalComponentError",
    "Graph",
    "GraphBundle",
    "InvolutionError",
    "LabelingError",
    "QuotientGraph",
    "UnsupportedCaseError",
    "V1",
    "V2",
    "Vertex",
    "analyse_graph",
    "atkin_lehner",
    "build_graph",
    "connectivity_report",
    "degree_checks",
    "descend",
    "desingularize",
    "equidistribution_report",
    "exceptional_component",
    "genus_and_gonality",
    "genus_formula",
    "label_vertices_by_j",
    "modular_polynomial",
    "quotient_by",
    "to_dot",
    "to_json",
]
