from .algebra import Quaternion, QuaternionAlgebra, build_algebra, hilbert_symbol
from .atkin_lehner import atkin_lehner_ideal, class_permutation, identify_class
from .brandt import BrandtMatrix, brandt_matrices, brandt_matrix, eisenstein_weights
from .classes import (
    ClassSetError,
    RightIdealClass,
    eichler_classes,
    eichler_order,
    maximal_classes,
    right_ideal_classes,
)
from .embeddings import embedding_counts, optimal_embedding_count, optimal_embeddings
from .order import Lattice, OrderLattice, maximal_order

__all__ = [
    "BrandtMatrix",
    "ClassSetError",
    "Lattice",
    "OrderLattice",
    "Quaternion",
    "QuaternionAlgebra",
    "RightIdealClass",
    "atkin_lehner_ideal",
    "brandt_matrices",
    "brandt_matrix",
    "build_algebra",
    "class_permutation",
    "eichler_classes",
    "eichler_order",
    "eisenstein_weights",
    "embedding_counts",
    "hilbert_symbol",
    "identify_class",
    "maximal_classes",
    "maximal_order",
    "optimal_embedding_count",
    "optimal_embeddings",
    "right_ideal_classes",
]
