"""Poisson cohomology dimensions of the scalar flat bracket sum_i c^i d_i delta.

The bigraded dimension is dim H^p_d(D) + dim H^{p+1}_d(D), with the
H(D) pieces coming from :mod:`dncohomology.theta`.  The D=2 case formulas,
the generating series and the vanishing range live here too, so the tests
can set them against the rank computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple

from . import theta
from .grading import DimTable, Method, partition_count
from .linalg import det, inverse, matvec

NOT_COVERED = "not covered"


def poisson_dim(D: int, p: int, d: int) -> int:
    """dim H^p_d of the Poisson complex of the scalar DN bracket in D variables."""
    if D < 1:
        raise ValueError("D must be >= 1")
    if p < 0 or d < 0:
        raise ValueError("p and d must be >= 0")
    return theta.h_theta_dim(D, p, d) + theta.h_theta_dim(D, p + 1, d)


def corollary_dim(D: int, p: int, d: int):
    """Value of the printed case list for H^p_d, or ``NOT_COVERED``.

    Cases are tried in printed order and the first match wins.  The list
    assigns 0 to (p, d) = (2, 1) while its own p = d+1 row gives D-1 there;
    the first-match rule returns 0 (see ``corollary_cases``).
    """
    if D < 2:
        raise ValueError("D must be >= 2")
    cases = corollary_cases(D, p, d)
    return cases[0][1] if cases else NOT_COVERED


def corollary_cases(D: int, p: int, d: int) -> List[Tuple[str, int]]:
    """All printed cases matching (p, d), in printed order, as (label, value)."""
    cases = [
        ("d=0,p=0", p == 0 and d == 0, 2),
        ("d=0,p=1", p == 1 and d == 0, 1),
        ("d>=1,p=0", p == 0 and d >= 1, 0),
        ("d=1,p=1", p == 1 and d == 1, D - 1),
        ("d=1,p=2", p == 2 and d == 1, 0),
        ("d=2,p=2", p == 2 and d == 2, (D - 1) * (D - 2) // 2),
        ("p=d+1", p == d + 1, comb(D - 1, d)),
        ("p>=d+2", p >= d + 2, 0),
    ]
    return [(label, value) for label, hit, value in cases if hit]


def h_theta_partition_formula_d2(p: int, d: int) -> int:
    """dim H^p_d(2) via P(d + p(3-p)/2, p) - P(d - 1 + p(3-p)/2, p)."""
    if (p, d) == (0, 1):
        return 0
    shift = p * (3 - p) // 2
    return partition_count(d + shift, p) - partition_count(d - 1 + shift, p)


def h_theta_closed_forms_d2(p: int, d: int) -> int:
    """Case formulas for dim H^2_d(2) and dim H^3_d(2)."""
    if d < 0:
        raise ValueError("d must be >= 0")
    if p == 2:
        return d % 2
    if p == 3:
        if d < 3:
            return 0
        k, r = divmod(d - 3, 6)
        # r = 0: d = 3+6k; r = 1: d = 4+6k; r = 2..5: 5+6k <= d <= 8+6k
        return k if r == 1 else k + 1
    raise ValueError("only p in {2, 3} has a case formula")


def h2_closed_form_d2(d: int) -> int:
    """dim H^2_d for D=2 from the six-periodic case list; defined for d >= 3 only."""
    if d < 3:
        raise ValueError("the case list starts at d = 3")
    k, r = divmod(d - 3, 6)
    # residues 0..5 correspond to d = 3,4,5,6,7,8 (+6k)
    return (k + 2, k, k + 2, k + 1, k + 2, k + 1)[r]


def h_generating_series_d2(p: int, d_max: int) -> List[int]:
    """Coefficients of x^{p(p-1)/2} / prod_{i=2}^p (1 - x^i) up to x^{d_max}."""
    if p == 0:
        raise ValueError(
            "p = 0 is excluded: the printed series gives 1 + x, but H^0_d(2) is 1 at d=0 and 0 after"
        )
    if p < 0:
        raise ValueError("p must be >= 1")
    series = [0] * (d_max + 1)
    start = p * (p - 1) // 2
    if start <= d_max:
        series[start] = 1
    for i in range(2, p + 1):
        # multiply by 1/(1 - x^i)
        for n in range(i, d_max + 1):
            series[n] += series[n - i]
    return series


def vanishing_range(D: int, l: int) -> List[Tuple[int, int]]:
    """(p, d) with C(D+l-1, l) < p <= C(D+l, l+1) and 0 <= d < p(l+1) - C(D+l, l)."""
    if D < 2 or l < 0:
        raise ValueError("need D >= 2 and l >= 0")
    lo, hi = comb(D + l - 1, l), comb(D + l, l + 1)
    out = []
    for p in range(lo + 1, hi + 1):
        for d in range(0, p * (l + 1) - comb(D + l, l)):
            out.append((p, d))
    return out


def dim_table(D: int, p_max: int, d_max: int, p_min: int = 0, d_min: int = 0) -> DimTable:
    if D < 1:
        raise ValueError("D must be >= 1")
    table = DimTable(D)
    for p in range(p_min, p_max + 1):
        for d in range(d_min, d_max + 1):
            table.put(p, d, poisson_dim(D, p, d), Method.RANK)
    return table


@dataclass(frozen=True)
class BracketSpec:
    """Constant-coefficient bracket {u(x), u(y)} = sum_i c^i d_i delta(x - y)."""

    D: int
    c: Tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(Fraction(x) for x in self.c)
        if len(c) != self.D:
            raise ValueError(f"expected {self.D} coefficients, got {len(c)}")
        if not any(c):
            raise ValueError("degenerate bracket: c = 0")
        object.__setattr__(self, "c", c)

    @property
    def normalized(self) -> bool:
        return self.c == tuple(Fraction(int(i == self.D - 1)) for i in range(self.D))


@dataclass(frozen=True)
class NormalizationMatrix:
    J: Tuple[Tuple[Fraction, ...], ...]

    @property
    def det(self) -> Fraction:
        return det(self.J)

    def apply(self, v: Sequence) -> List[Fraction]:
        return matvec(self.J, v)

    def check(self, spec: BracketSpec) -> bool:
        target = [Fraction(int(i == spec.D - 1)) for i in range(spec.D)]
        return self.det == 1 and self.apply(spec.c) == target


def normalize_bracket(spec: BracketSpec) -> NormalizationMatrix:
    """A det-1 matrix J with J c = xi_D.

    The pivot is the largest |c_j| (ties go to the larger index).  The
    matrix A = [e_k (k != j) ..., c] has determinant +-c_j; rescaling its
    first column gives det A = 1, A xi_D = c, and J = A^{-1}.
    """
    D, c = spec.D, spec.c
    if D == 1:
        if c[0] != 1:
            raise ValueError("D = 1 admits no det-1 normalization unless c = 1")
        return NormalizationMatrix(((Fraction(1),),))
    j = max(range(D), key=lambda k: (abs(c[k]), k))
    cols = [[Fraction(int(r == k)) for r in range(D)] for k in range(D) if k != j]
    cols.append(list(c))
    A = [[cols[col][row] for col in range(D)] for row in range(D)]
    scale = det(A)
    for row in range(D):
        A[row][0] /= scale
    J = inverse(A)
    out = NormalizationMatrix(tuple(tuple(r) for r in J))
    assert out.check(spec), "normalization postcondition violated"
    return out
