"""Brute-force Poisson cohomology of the normalized bracket on truncated F-hat.

Delta maps the (p, d, w) component to (p+1, d+1, w-1), where w is the
u-weight, and total derivatives preserve p and w.  The complex therefore
splits into finite pieces indexed by w, and

    H^p_d = sum over w of  ker(Delta on F^p_{d,w}) / im(Delta from F^{p-1}_{d-1,w+1}).

Only w <= u_max is summed (with the preimage side at w+1).  The run is
repeated at u_max + 1 and a disagreement raises ``TruncationUnstable``.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from ..linalg import RowEchelon, rank_of_vectors
from .operators import delta_monomial, total_derivative_span
from .superpoly import component_basis

log = logging.getLogger(__name__)


class TruncationUnstable(RuntimeError):
    """Cohomology dimensions changed between u_max and u_max + 1."""


def _span_with(ech: RowEchelon, vectors) -> int:
    """dim(span(ech) + span(vectors)) without touching ``ech``."""
    rows = list(ech.rows.values())
    return rank_of_vectors(rows + list(vectors))


def _delta_images(D: int, p: int, d: int, w: int) -> List[Dict]:
    return [delta_monomial(D, m) for m in component_basis(D, p, d, w)]


@lru_cache(maxsize=None)
def weight_piece(D: int, p: int, d: int, w: int) -> int:
    """Contribution of u-weight w to dim H^p_d."""
    if p < 0 or d < 0 or w < 0:
        return 0
    C = component_basis(D, p, d, w)
    if not C:
        return 0
    B = total_derivative_span(D, p, d, w)
    B_next = total_derivative_span(D, p + 1, d + 1, w - 1) if w >= 1 else RowEchelon()
    # rank of the induced map F^p_{d,w} -> F^{p+1}_{d+1,w-1}
    out_rank = _span_with(B_next, _delta_images(D, p, d, w)) - len(B_next)
    # image of F^{p-1}_{d-1,w+1} inside F^p_{d,w}
    in_rank = _span_with(B, _delta_images(D, p - 1, d - 1, w + 1)) - len(B) if p >= 1 and d >= 1 else 0
    return len(C) - len(B) - out_rank - in_rank


def truncated_cohomology(D: int, p: int, d: int, u_max: int) -> int:
    return sum(weight_piece(D, p, d, w) for w in range(u_max + 1))


def brute_cohomology(D: int, p: int, d: int, u_max: int) -> int:
    """dim H^p_d of the normalized scalar bracket by direct linear algebra."""
    if D < 1:
        raise ValueError("D must be >= 1")
    if p < 0 or d < 0 or u_max < 0:
        raise ValueError("p, d and u_max must be >= 0")
    a = truncated_cohomology(D, p, d, u_max)
    b = truncated_cohomology(D, p, d, u_max + 1)
    if a != b:
        raise TruncationUnstable(f"H^{p}_{d}(D={D}): {a} at u_max={u_max}, {b} at u_max={u_max + 1}")
    log.debug("oracle D=%d p=%d d=%d u_max=%d -> %d", D, p, d, u_max, a)
    return a


@lru_cache(maxsize=None)
def _delta_rank(D: int, p: int, d: int, w: int) -> int:
    if p < 0 or d < 0 or w < 0:
        return 0
    return rank_of_vectors(_delta_images(D, p, d, w))


def delta_cohomology_dim(D: int, p: int, d: int, u_max: int) -> int:
    """dim ker - dim im of Delta on the truncated algebra itself (no quotient).

    Contributions come from w <= u_max; the preimage side uses w + 1.
    """
    total = 0
    for w in range(u_max + 1):
        n = len(component_basis(D, p, d, w))
        total += n - _delta_rank(D, p, d, w) - _delta_rank(D, p - 1, d - 1, w + 1)
    return total


def weight_profile(D: int, p: int, d: int, u_max: int) -> List[Tuple[int, int]]:
    """(w, contribution) pairs, for diagnostics."""
    return [(w, weight_piece(D, p, d, w)) for w in range(u_max + 1)]


__all__ = ["TruncationUnstable", "brute_cohomology", "truncated_cohomology", "delta_cohomology_dim",
           "weight_piece", "weight_profile"]
