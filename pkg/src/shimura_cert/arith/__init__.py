from .fields import PrimeFieldElem, QuadExtElem, smallest_nonresidue
from .poly import PolyFq, poly_roots_in_Fq2
from .quadratic import (
    QuadDiscriminant,
    class_number,
    field_discriminant,
    fundamental_part,
    kronecker,
    principal_form_represents,
    reduced_forms,
)
from .supersingular import (
    SupersingularPolynomial,
    expected_supersingular_count,
    hasse_polynomial,
    supersingular_j_invariants,
    supersingular_polynomial,
)

__all__ = [
    "PrimeFieldElem",
    "QuadExtElem",
    "smallest_nonresidue",
    "PolyFq",
    "poly_roots_in_Fq2",
    "QuadDiscriminant",
    "class_number",
    "field_discriminant",
    "fundamental_part",
    "kronecker",
    "principal_form_represents",
    "reduced_forms",
    "SupersingularPolynomial",
    "expected_supersingular_count",
    "hasse_polynomial",
    "supersingular_j_invariants",
    "supersingular_polynomial",
]
