from .poly import Poly, gcd, xgcd, cyclotomic_poly, euler_phi, composed_sum
from .finite_field import ModPoly, Factorization, CompositeModulus, factor_mod_p, is_prime
from .zassenhaus import factor_over_q, is_irreducible_over_q

__all__ = [
    "Poly", "gcd", "xgcd", "cyclotomic_poly", "euler_phi", "composed_sum",
    "ModPoly", "Factorization", "CompositeModulus", "factor_mod_p", "is_prime",
    "factor_over_q", "is_irreducible_over_q",
]
