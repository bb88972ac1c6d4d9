"""The exterior algebra Theta on generators theta^S, S in Z^{D-1}, and its quotient.

A monomial is a tuple of generator multi-indices in strictly increasing
grlex order; any product or derivative is re-sorted and the permutation
parity is folded into the coefficient, so equality of polynomials is
equality of dicts.

``h_theta_dim(D, p, d)`` is the dimension of the (p, d) component of
Theta / (d_1 Theta + ... + d_{D-1} Theta).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from . import grading
from .grading import MultiIndex, grlex_key
from .linalg import SparseRationalMatrix, exact_rank

ThetaMonomial = Tuple[MultiIndex, ...]


def canonical(gens: Iterable[MultiIndex]) -> Tuple[int, Optional[ThetaMonomial]]:
    """Sort generators; returns (sign, monomial) or (0, None) on a repeat."""
    gens = list(gens)
    keys = [grlex_key(g) for g in gens]
    if len(set(keys)) != len(keys):
        return 0, None
    # parity via inversion count; p is small
    inv = 0
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            if keys[a] > keys[b]:
                inv += 1
    order = sorted(range(len(gens)), key=lambda k: keys[k])
    return (-1 if inv & 1 else 1), tuple(gens[k] for k in order)


def std_degree(m: ThetaMonomial) -> int:
    return sum(sum(S) for S in m)


class ThetaPolynomial:
    """Element of Theta for a fixed D (generators live in Z^{D-1})."""

    __slots__ = ("D", "terms")

    def __init__(self, D: int, terms: Optional[Dict[ThetaMonomial, object]] = None):
        self.D = D
        self.terms: Dict[ThetaMonomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if c:
                sign, mm = canonical(m)
                if sign:
                    self._acc(mm, sign * Fraction(c))

    @classmethod
    def generator(cls, D: int, S: MultiIndex) -> "ThetaPolynomial":
        if len(S) != D - 1:
            raise ValueError(f"generator index {S} must have length {D - 1}")
        return cls(D, {(tuple(S),): 1})

    @classmethod
    def one(cls, D: int) -> "ThetaPolynomial":
        return cls(D, {(): 1})

    def _acc(self, m, c):
        v = self.terms.get(m, 0) + c
        if v:
            self.terms[m] = v
        else:
            self.terms.pop(m, None)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, ThetaPolynomial) and self.D == other.D and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: [grlex_key(g) for g in t[0]]):
            body = "*".join("th" + "".join(map(str, g)) for g in m) or "1"
            parts.append(f"{c}*{body}")
        return " + ".join(parts)

    def __add__(self, other):
        out = ThetaPolynomial(self.D)
        out.terms = dict(self.terms)
        for m, c in other.terms.items():
            out._acc(m, c)
        return out

    def __neg__(self):
        out = ThetaPolynomial(self.D)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        out = ThetaPolynomial(self.D)
        if c:
            out.terms = {m: c * v for m, v in self.terms.items()}
        return out

    def __mul__(self, other):
        if not isinstance(other, ThetaPolynomial):
            return self.__rmul__(other)
        out = ThetaPolynomial(self.D)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                sign, m = canonical(m1 + m2)
                if sign:
                    out._acc(m, sign * c1 * c2)
        return out

    def homogeneous(self, p: int, d: int) -> "ThetaPolynomial":
        out = ThetaPolynomial(self.D)
        out.terms = {m: c for m, c in self.terms.items() if len(m) == p and std_degree(m) == d}
        return out

    def bidegrees(self):
        return {(len(m), std_degree(m)) for m in self.terms}


@lru_cache(maxsize=None)
def _generators_up_to(D: int, d: int) -> Tuple[MultiIndex, ...]:
    return tuple(grading.multi_indices_up_to(D - 1, d))


@lru_cache(maxsize=None)
def enumerate_basis(D: int, p: int, d: int) -> Tuple[ThetaMonomial, ...]:
    """All monomials of super degree p and standard degree d, in canonical order."""
    if D < 1:
        raise ValueError("D must be >= 1")
    gens = _generators_up_to(D, d)
    degs = [sum(g) for g in gens]
    out: List[ThetaMonomial] = []
    cur: List[MultiIndex] = []

    def rec(start, left, rem):
        if left == 0:
            if rem == 0:
                out.append(tuple(cur))
            return
        for k in range(start, len(gens)):
            # gens are degree-sorted; the remaining left-1 picks have degree >= degs[k]
            if degs[k] * left > rem:
                break
            cur.append(gens[k])
            rec(k + 1, left - 1, rem - degs[k])
            cur.pop()

    rec(0, p, d)
    return tuple(out)


def _shift(S: MultiIndex, i: int) -> MultiIndex:
    return S[: i - 1] + (S[i - 1] + 1,) + S[i:]


def partial_monomial(i: int, m: ThetaMonomial) -> Dict[ThetaMonomial, int]:
    """d_{x^i} of a single monomial, as a signed dict."""
    out: Dict[ThetaMonomial, int] = {}
    for k in range(len(m)):
        sign, mm = canonical(m[:k] + (_shift(m[k], i),) + m[k + 1:])
        if sign:
            v = out.get(mm, 0) + sign
            if v:
                out[mm] = v
            else:
                del out[mm]
    return out


def partial_theta(i: int, f: ThetaPolynomial) -> ThetaPolynomial:
    """The derivation theta^S -> theta^{S + xi_i} on Theta, i in 1..D-1."""
    if not 1 <= i <= f.D - 1:
        raise ValueError(f"axis {i} out of range 1..{f.D - 1}")
    out = ThetaPolynomial(f.D)
    for m, c in f.terms.items():
        for mm, s in partial_monomial(i, m).items():
            out._acc(mm, s * c)
    return out


def image_matrix(D: int, p: int, d: int, axes: Optional[Iterable[int]] = None) -> SparseRationalMatrix:
    """Columns d_i(m) for i in ``axes`` (default 1..D-1) and m in the (p, d-1) basis.

    Rows are indexed by the (p, d) basis.  Column order: axis outer, monomial inner.
    """
    axes = list(range(1, D)) if axes is None else list(axes)
    target = enumerate_basis(D, p, d)
    row = {m: r for r, m in enumerate(target)}
    source = enumerate_basis(D, p, d - 1) if d >= 1 else ()
    cols = []
    for i in axes:
        for m in source:
            cols.append({row[mm]: s for mm, s in partial_monomial(i, m).items()})
    return SparseRationalMatrix.from_columns(cols, len(target))


@lru_cache(maxsize=None)
def h_theta_dim(D: int, p: int, d: int) -> int:
    """dim H^p_d(D) = dim Theta^p_d - rank of the total-derivative image."""
    if D < 1:
        raise ValueError("D must be >= 1")
    if p < 0 or d < 0:
        return 0
    n = len(enumerate_basis(D, p, d))
    if d == 0 or D == 1 or n == 0:
        return n
    return n - exact_rank(image_matrix(D, p, d))
