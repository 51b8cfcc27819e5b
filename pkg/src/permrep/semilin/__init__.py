"""Semilinear representations, Hilbert 90, and morphisms of semilinear generators."""

from .bisym import (
    BiSymFunction,
    WeightedElement,
    WeightError,
    hom_apply,
    hom_compose,
    random_monomial_bisym,
    symmetrized_monomial,
)
from .cocycle import (
    ActionField,
    BudgetExhausted,
    CocycleCheck,
    CocycleError,
    H90Result,
    SemilinRep,
    coboundary_from,
    cocycle_check,
    find_cyclic_vector,
    fixed_vectors,
    h90_trivialize,
    load_cocycle,
    orbit_rank,
    random_invertible,
)
from .findim import FindimError, FindimResult, trivialize_findim
from .weight1 import (
    GeneratorVerdict,
    Q2Verdict,
    determinant_D,
    generator_test_weight1,
    q2_corpus,
    q2_surjectivity,
    weight1_image_matrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
