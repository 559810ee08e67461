"""Decide admissibility and tame admissibility of finite groups over number fields."""

from .engine import (
    Budgets,
    Certificate,
    ConsistencyError,
    Status,
    Verdict,
    all_metacyclic_tame_predicate,
    decide,
    replay,
)
from .numberfield import (
    IndexObstruction,
    NumberField,
    PrimeDecomposition,
    decompose_prime,
    field_from_coeffs,
    is_galois,
    rationals,
)
from .groups import (
    FiniteGroup,
    build_from_metacyclic,
    build_from_permutations,
    direct_product,
)

__version__ = "0.1.0"

__all__ = [
    "Budgets", "Certificate", "ConsistencyError", "Status", "Verdict",
    "all_metacyclic_tame_predicate", "decide", "replay",
    "IndexObstruction", "NumberField", "PrimeDecomposition", "decompose_prime",
    "field_from_coeffs", "is_galois", "rationals",
    "FiniteGroup", "build_from_metacyclic", "build_from_permutations", "direct_product",
]
