"""Multi-index combinatorics and closed-form dimension counts.

Multi-indices are plain tuples of nonnegative ints.  Everything in the
package that needs a basis ordering uses :func:`grlex_key`, i.e. degree
first and then lexicographic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

MultiIndex = Tuple[int, ...]


def grlex_key(S: MultiIndex) -> Tuple[int, MultiIndex]:
    return (sum(S), S)


def unit(k: int, i: int) -> MultiIndex:
    """The unit multi-index xi_i in Z^k (``i`` is 1-based)."""
    if not 1 <= i <= k:
        raise ValueError(f"axis {i} out of range 1..{k}")
    return tuple(1 if j == i - 1 else 0 for j in range(k))


def add(S: MultiIndex, T: MultiIndex) -> MultiIndex:
    return tuple(a + b for a, b in zip(S, T))


def sub(S: MultiIndex, T: MultiIndex) -> MultiIndex:
    """Componentwise difference; raises if a component goes negative."""
    out = tuple(a - b for a, b in zip(S, T))
    if any(x < 0 for x in out):
        raise ValueError(f"{S} - {T} is not a multi-index")
    return out


@lru_cache(maxsize=None)
def multi_indices_of_degree(k: int, d: int) -> Tuple[MultiIndex, ...]:
    """All ``S`` in Z^k_{>=0} with ``|S| = d``, in grlex order.

    >>> multi_indices_of_degree(2, 2)
    ((0, 2), (1, 1), (2, 0))
    """
    if d < 0:
        return ()
    if k == 0:
        return ((),) if d == 0 else ()
    if k == 1:
        return ((d,),)
    out = []
    for first in range(d + 1):
        for rest in multi_indices_of_degree(k - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


def multi_indices_up_to(k: int, d_max: int) -> List[MultiIndex]:
    out: List[MultiIndex] = []
    for d in range(d_max + 1):
        out.extend(multi_indices_of_degree(k, d))
    return out


def count_of_degree(k: int, s: int) -> int:
    """Number of multi-indices of degree ``s`` in Z^k."""
    if s < 0:
        return 0
    if k == 0:
        return 1 if s == 0 else 0
    return comb(s + k - 1, k - 1)


@lru_cache(maxsize=None)
def partition_count(n: int, k: int) -> int:
    """Number of partitions of ``n`` into exactly ``k`` positive parts.

    Negative ``n`` gives 0, which the D=2 difference formulas rely on.
    """
    if k < 0 or n < 0:
        return 0
    if n == 0 and k == 0:
        return 1
    if k == 0 or n < k:
        return 0
    return partition_count(n - 1, k - 1) + partition_count(n - k, k)


def _compositions_by_level(p: int, d: int, s: int, n_gen):
    # yields tuples (p_s, p_{s+1}, ...) with sum p and weighted sum d
    if p == 0:
        if d == 0:
            yield ()
        return
    if s > d:
        return
    for ps in range(0, p + 1):
        if ps * s > d:
            break
        if ps > n_gen(s):
            break
        for rest in _compositions_by_level(p - ps, d - ps * s, s + 1, n_gen):
            yield (ps,) + rest


def theta_dim(D: int, p: int, d: int) -> int:
    """dim of the (p, d) component of the exterior algebra on theta^S, S in Z^{D-1}.

    Sums prod_s C(n_s, p_s) over all (p_0, p_1, ...) with sum p_s = p and
    sum s*p_s = d, where n_s counts generators of degree s.
    """
    if D < 1:
        raise ValueError("D must be >= 1")
    if p < 0 or d < 0:
        return 0

    def n_gen(s):
        return count_of_degree(D - 1, s)

    total = 0
    for levels in _compositions_by_level(p, d, 0, n_gen):
        term = 1
        for s, ps in enumerate(levels):
            term *= comb(n_gen(s), ps)
        total += term
    return total


def theta_dim_d2(p: int, d: int) -> int:
    """Closed form for D=2: P(d + p - C(p,2), p)."""
    return partition_count(d + p - p * (p - 1) // 2, p)


def theta_generating_series(D: int, p_max: int, d_max: int) -> List[List[int]]:
    """Coefficients ``c[p][d]`` of prod_{s>=0} (1 + x y^s)^{n_s}, truncated.

    Factors with s > d_max never reach the window, so the product stops there.
    """
    if D < 1:
        raise ValueError("D must be >= 1")
    coeffs = [[0] * (d_max + 1) for _ in range(p_max + 1)]
    coeffs[0][0] = 1
    for s in range(d_max + 1):
        for _ in range(count_of_degree(D - 1, s)):
            # multiply by (1 + x y^s); descending p keeps it in place
            for p in range(p_max, 0, -1):
                row, prev = coeffs[p], coeffs[p - 1]
                for d in range(d_max, s - 1, -1):
                    if prev[d - s]:
                        row[d] += prev[d - s]
    return coeffs


class Method(str, enum.Enum):
    RANK = "rank"
    CLOSED_FORM = "closed-form"
    ORACLE = "oracle"
    PVA = "pva"


@dataclass
class DimTable:
    """Dimensions indexed by (p, d) for a fixed D, with the method that produced each."""

    D: int
    entries: Dict[Tuple[int, int], Tuple[int, Method]] = field(default_factory=dict)

    def put(self, p: int, d: int, dim: int, method: Method) -> None:
        if dim < 0:
            raise ValueError("negative dimension")
        old = self.entries.get((p, d))
        if old is not None and old[0] != dim:
            raise ValueError(
                f"cross-check failed at D={self.D} (p,d)=({p},{d}): "
                f"{old[1].value} gives {old[0]}, {method.value} gives {dim}"
            )
        self.entries[(p, d)] = (dim, method)

    def dim(self, p: int, d: int) -> int:
        return self.entries[(p, d)][0]

    def p_values(self) -> List[int]:
        return sorted({p for p, _ in self.entries})

    def d_values(self) -> List[int]:
        return sorted({d for _, d in self.entries})

    def row(self, p: int) -> List[int]:
        return [self.entries[(p, d)][0] for d in self.d_values() if (p, d) in self.entries]
