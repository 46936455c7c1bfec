"""Exact counts of ordered factorizations K(n) and recursive divisors kappa0(n)."""

from .core import (
    Classification,
    classify_recursive,
    k_macmahon,
    k_recursive,
    kappa0_conjecture,
    kappa0_recursive,
    kappa0_squarefree,
    kappa0_theorem1,
    kappa0_theorem2,
    kappa_x_recursive,
    tau,
    upsilon_recursive,
    upsilon_via_tau,
)
from .factor import (
    PrimeFactorization,
    Signature,
    SpfTable,
    factorize,
    n_from_signature,
    signature_of,
    smallest_prime_factor_sieve,
)

__version__ = "0.1.0"
