"""Exact Poisson cohomology of scalar multidimensional Dubrovin-Novikov brackets.

Three independent routes to the same numbers: ranks in a graded exterior
algebra (:mod:`cohomology`, :mod:`theta`), a brute-force truncated
variational complex (:mod:`varcalc`) and a Poisson vertex algebra solver
(:mod:`pva`).
"""

from .cohomology import BracketSpec, corollary_dim, dim_table, normalize_bracket, poisson_dim
from .linalg import KERNEL, exact_rank
from .theta import h_theta_dim

__version__ = "0.1.0"

__all__ = [
    "BracketSpec", "KERNEL", "corollary_dim", "dim_table", "exact_rank", "h_theta_dim",
    "normalize_bracket", "poisson_dim",
]
