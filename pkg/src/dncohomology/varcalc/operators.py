"""Variational calculus on the truncated super algebra.

Variational derivatives, the operator Delta, D_P, the Schouten bracket,
the iota evaluation and reduction modulo total derivatives.  Everything is
exact over Q.  Reduction works one (super degree, standard degree, u-weight)
component at a time; total derivatives preserve super degree and u-weight,
so each reduction is an exact finite-dimensional problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Sequence

from ..grading import MultiIndex, unit
from ..linalg import RowEchelon
from ..theta import ThetaPolynomial
from .superpoly import (
    Monomial,
    SuperDiffPolynomial,
    component_basis,
    d_multi,
    d_x,
    d_x_monomial,
    mono_sort_key,
    partial_theta,
    partial_u,
    std_degree,
    super_degree,
    theta_indices,
    theta_sort,
    u_indices,
)


def _sign(S: MultiIndex) -> int:
    return -1 if sum(S) & 1 else 1


def var_der_u(f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    """delta f / delta u = sum_S (-1)^|S| d^S (df/du^S)."""
    out = f._new()
    for S in u_indices(f):
        out = out + d_multi(S, partial_u(S, f)).scale(_sign(S))
    return out


def var_der_theta(f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    """delta f / delta theta = sum_S (-1)^|S| d^S (df/dtheta^S), left derivatives."""
    out = f._new()
    for S in theta_indices(f):
        out = out + d_multi(S, partial_theta(S, f)).scale(_sign(S))
    return out


def _homogeneous_super_degree(P: SuperDiffPolynomial) -> int:
    degs = P.super_degrees()
    if len(degs) > 1:
        raise ValueError(f"expected a homogeneous super degree, got {sorted(degs)}")
    return degs.pop() if degs else 0


def delta_monomial(D: int, m: Monomial) -> Dict[Monomial, int]:
    """Delta = sum_S theta^{S+xi_D} d/du^S on one monomial."""
    e0, jets, thetas = m
    out: Dict[Monomial, int] = {}
    xi = unit(D, D)

    def put(T, rest_e0, rest_jets, mult):
        sign, th = theta_sort((T,) + thetas)
        if sign:
            key = (rest_e0, rest_jets, th)
            v = out.get(key, 0) + sign * mult
            if v:
                out[key] = v
            else:
                out.pop(key, None)

    if e0:
        put(xi, e0 - 1, jets, e0)
    for S in dict.fromkeys(jets):
        lst = list(jets)
        lst.remove(S)
        put(tuple(a + b for a, b in zip(S, xi)), e0, tuple(lst), jets.count(S))
    return out


def delta_op(f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    out = f._new()
    for m, c in f.terms.items():
        for mm, s in delta_monomial(f.D, m).items():
            out._acc(mm, s * c)
    out._check()
    return out


def d_operator(P, f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    """D_P(f) = sum_S d^S(dP/dtheta) df/du^S + (-1)^p d^S(dP/du) df/dtheta^S."""
    P = _density(P)
    p = _homogeneous_super_degree(P)
    vt = var_der_theta(P)
    vu = var_der_u(P)
    out = f._new()
    if vt:
        for S in u_indices(f):
            out = out + d_multi(S, vt) * partial_u(S, f)
    if vu:
        sgn = -1 if p & 1 else 1
        for S in theta_indices(f):
            out = out + (d_multi(S, vu) * partial_theta(S, f)).scale(sgn)
    return out


def graded_commutator(P, Q, f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    """[D_P, D_Q] f = D_P D_Q f - (-1)^{(p-1)(q-1)} D_Q D_P f."""
    p = _homogeneous_super_degree(_density(P))
    q = _homogeneous_super_degree(_density(Q))
    sgn = -1 if ((p - 1) * (q - 1)) & 1 else 1
    return d_operator(P, d_operator(Q, f)) - d_operator(Q, d_operator(P, f)).scale(sgn)


# quotient by total derivatives ----------------------------------------

@dataclass(frozen=True)
class QuotientClass:
    """A class in the quotient by total derivatives, held through a representative."""

    representative: SuperDiffPolynomial
    normalized: bool = False

    @property
    def D(self) -> int:
        return self.representative.D

    def normal_form(self) -> "QuotientClass":
        return self if self.normalized else quotient_normalize(self.representative)

    def is_zero(self) -> bool:
        return not self.normal_form().representative

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, QuotientClass):
            return NotImplemented
        return QuotientClass(self.representative - other.representative).is_zero()

    __hash__ = None

    def __add__(self, other: "QuotientClass") -> "QuotientClass":
        return QuotientClass(self.representative + other.representative)

    def __neg__(self):
        return QuotientClass(-self.representative)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "QuotientClass":
        return QuotientClass(self.representative.scale(c))

    def __repr__(self):
        return f"QuotientClass({self.representative!r})"


def _density(P) -> SuperDiffPolynomial:
    return P.representative if isinstance(P, QuotientClass) else P


@lru_cache(maxsize=None)
def _echelon(D: int, p: int, d: int, w: int) -> RowEchelon:
    """Row-echelon basis of sum_i d_{x^i} over the (p, d-1, w) component."""
    ech = RowEchelon(key=mono_sort_key)
    if d >= 1:
        for m in component_basis(D, p, d - 1, w):
            for i in range(1, D + 1):
                ech.add(d_x_monomial(D, i, m))
    return ech


def total_derivative_span(D: int, p: int, d: int, w: int) -> RowEchelon:
    return _echelon(D, p, d, w)


def quotient_normalize(f: SuperDiffPolynomial, p: Optional[int] = None, d: Optional[int] = None) -> QuotientClass:
    """Canonical representative of f modulo d_{x^1} A + ... + d_{x^D} A.

    When ``p`` and ``d`` are given, ``f`` must be homogeneous of that bidegree.
    Each u-weight component is reduced against its own exact image, so the
    normal form does not depend on any truncation bound.
    """
    if p is not None or d is not None:
        for m in f.terms:
            if (p is not None and super_degree(m) != p) or (d is not None and std_degree(m) != d):
                raise ValueError(f"input is not homogeneous of bidegree ({p}, {d})")
    out = f._new()
    for (pp, dd, w), comp in sorted(f.components().items()):
        red = _echelon(f.D, pp, dd, w).reduce(comp.terms)
        for m, c in red.items():
            out._acc(m, c)
    return QuotientClass(out, True)


def integrate(f: SuperDiffPolynomial) -> QuotientClass:
    return quotient_normalize(f)


# Schouten bracket, iota -----------------------------------------------

def schouten(P, Q) -> QuotientClass:
    """[P, Q] = int dP/dtheta dQ/du + (-1)^p dP/du dQ/dtheta."""
    P, Q = _density(P), _density(Q)
    p = _homogeneous_super_degree(P)
    a = var_der_theta(P) * var_der_u(Q)
    b = var_der_u(P) * var_der_theta(Q)
    return quotient_normalize(a + b.scale(-1 if p & 1 else 1))


def iota_eval(P, functionals: Sequence) -> QuotientClass:
    """iota(P)(I_1..I_p) integrated; arguments of super degree 0."""
    P = _density(P)
    p = _homogeneous_super_degree(P)
    if len(functionals) != p:
        raise ValueError(f"expected {p} arguments, got {len(functionals)}")
    vds = []
    for I in functionals:
        I = _density(I)
        if _homogeneous_super_degree(I) != 0:
            raise ValueError("iota arguments must have super degree 0")
        vds.append(var_der_u(I))
    acc = P
    for vd in vds:
        nxt = P._new()
        for S in theta_indices(acc):
            nxt = nxt + partial_theta(S, acc) * d_multi(S, vd)
        acc = nxt
    return quotient_normalize(acc)


# the image of Theta inside the super algebra -----------------------------

def embed_theta(a: ThetaPolynomial) -> SuperDiffPolynomial:
    """theta^S, S in Z^{D-1}, goes to theta^{(S, 0)}."""
    out = SuperDiffPolynomial(a.D)
    for mono, c in a.terms.items():
        sign, th = theta_sort(tuple(S + (0,) for S in mono))
        if sign:
            out._acc((0, (), th), sign * c)
    return out


def theta_potential(a: SuperDiffPolynomial) -> SuperDiffPolynomial:
    """sum_S u^S da/dtheta^S, whose Delta is d_{x^D} a for a free of u."""
    out = a._new()
    for S in theta_indices(a):
        out = out + SuperDiffPolynomial.u(a.D, S) * partial_theta(S, a)
    return out


def hat_P(D: int) -> SuperDiffPolynomial:
    """The density 1/2 theta theta^{xi_D} of the normalized bracket."""
    zero = (0,) * D
    return SuperDiffPolynomial(D, {(0, (), (zero, unit(D, D))): Fraction(1, 2)})


def commutator_u_dx(S: MultiIndex, j: int, f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    """[d/du^S, d_{x^j}] f."""
    return partial_u(S, d_x(j, f)) - d_x(j, partial_u(S, f))


def commutator_theta_dx(S: MultiIndex, j: int, f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    return partial_theta(S, d_x(j, f)) - d_x(j, partial_theta(S, f))


__all__ = [
    "QuotientClass", "var_der_u", "var_der_theta", "delta_op", "delta_monomial", "d_operator",
    "graded_commutator", "quotient_normalize", "integrate", "total_derivative_span", "schouten",
    "iota_eval", "embed_theta", "theta_potential", "hat_P", "commutator_u_dx", "commutator_theta_dx",
]
