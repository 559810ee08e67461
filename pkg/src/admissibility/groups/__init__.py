from .group import (
    DEFAULT_ORDER_BUDGET,
    FiniteGroup,
    GroupError,
    InconsistentPresentation,
    NotPGroup,
    OrderBudgetExceeded,
    PrimeDoesNotDivideOrder,
    build_from_metacyclic,
    build_from_permutations,
    cyclic_group,
    direct_product,
    frattini_rank,
    parse_cycles,
    sylow_subgroup,
)
from .metacyclic import (
    MetacyclicPresentation,
    enumerate_metacyclic_presentations,
    is_metacyclic,
)
from .search import (
    DemuskinQuery,
    SearchBudgetExceeded,
    are_isomorphic,
    brute_force_rank,
    demuskin_quotient_test,
    find_isomorphism,
    free_quotient_test,
    minimal_generating_set,
)

d_of_group = frattini_rank
