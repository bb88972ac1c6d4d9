"""Horizontal forms in the first ``a`` independent variables.

A form is a map from increasing axis tuples I to coefficients.  The dx's
are treated as commuting with the coefficients: the form c dx^I stands for
c * dx^{i_1} ^ ... ^ dx^{i_j}.  Constant coefficients are dropped, which
realizes coefficients in the algebra modulo constants.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, Iterator, Optional, Tuple

from .superpoly import (
    SuperDiffPolynomial,
    d_multi,
    d_x,
    partial_theta,
    random_component,
    theta_indices,
)

AxisSet = Tuple[int, ...]


class FormElement:
    __slots__ = ("D", "a", "components")

    def __init__(self, D: int, a: int, components: Optional[Dict[AxisSet, SuperDiffPolynomial]] = None):
        if not 1 <= a <= D:
            raise ValueError(f"need 1 <= a <= D, got a={a}, D={D}")
        self.D = D
        self.a = a
        self.components: Dict[AxisSet, SuperDiffPolynomial] = {}
        for I, c in (components or {}).items():
            I = tuple(I)
            if list(I) != sorted(set(I)) or any(not 1 <= i <= a for i in I):
                raise ValueError(f"bad axis set {I} for a={a}")
            self._acc(I, c)

    def _acc(self, I: AxisSet, c: SuperDiffPolynomial):
        cur = self.components.get(I)
        v = c if cur is None else cur + c
        v = v.drop_constant()
        if v:
            self.components[I] = v
        else:
            self.components.pop(I, None)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.components
        return (isinstance(other, FormElement) and (self.D, self.a) == (other.D, other.a)
                and self.components == other.components)

    __hash__ = None

    def __bool__(self):
        return bool(self.components)

    def __add__(self, other: "FormElement") -> "FormElement":
        out = FormElement(self.D, self.a, self.components)
        for I, c in other.components.items():
            out._acc(I, c)
        return out

    def __neg__(self):
        return FormElement(self.D, self.a, {I: -c for I, c in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def form_degrees(self):
        return {len(I) for I in self.components}

    def super_degrees(self):
        out = set()
        for c in self.components.values():
            out |= c.super_degrees()
        return out

    def items(self) -> Iterator[Tuple[AxisSet, SuperDiffPolynomial]]:
        return iter(sorted(self.components.items()))

    def __repr__(self):
        if not self.components:
            return "0"
        return " + ".join(f"({c!r}) dx{''.join(map(str, I))}" for I, c in self.items())


def d_H(w: FormElement) -> FormElement:
    """sum_i dx^i ^ d_{x^i}, i = 1..a."""
    out = FormElement(w.D, w.a)
    for I, c in w.components.items():
        for i in range(1, w.a + 1):
            if i in I:
                continue
            pos = sum(1 for k in I if k < i)
            J = tuple(sorted(I + (i,)))
            dc = d_x(i, c)
            out._acc(J, -dc if pos & 1 else dc)
    return out


def _derivative_splits(R: Tuple[int, ...]):
    """All F with 0 <= F <= R componentwise."""
    if not R:
        yield ()
        return
    for f in range(R[0] + 1):
        for rest in _derivative_splits(R[1:]):
            yield (f,) + rest


def homotopy_h(w: FormElement, p: int, i: int) -> FormElement:
    """The contraction h^{p,i} lowering form degree i to i-1 on super degree p.

    For each j in I and each theta^K in the coefficient with K' = K[:a] >= xi_j,
    put R = K' - xi_j and sum over F + G = R the term
        (r_j + 1) / (a - i + 1 + |F|) * prod C(r_l, f_l)
        * d^F[ theta^{(0, K'')} (-d)^G (d c / d theta^K) ]
    with the dx^j slot removed, all times 1/p.

    With left theta-derivatives and theta^{(0, K'')} multiplied from the
    left, the prefactor that makes h d_H + d_H h the identity is +1/p.
    """
    if p <= 0:
        raise ValueError("the contraction needs super degree p > 0")
    a, D = w.a, w.D
    out = FormElement(D, a)
    pref = Fraction(1, p)
    for I, c in w.components.items():
        if len(I) != i:
            raise ValueError(f"component {I} has form degree {len(I)}, expected {i}")
        if c.super_degrees() - {p}:
            raise ValueError(f"coefficient is not of super degree {p}")
        for pos, j in enumerate(I):
            J = I[:pos] + I[pos + 1:]
            slot_sign = -1 if pos & 1 else 1
            acc = SuperDiffPolynomial(D)
            for K in theta_indices(c):
                Kp, Kpp = K[:a], K[a:]
                if Kp[j - 1] < 1:
                    continue
                R = Kp[: j - 1] + (Kp[j - 1] - 1,) + Kp[j:]
                dc = partial_theta(K, c)
                th0 = SuperDiffPolynomial(D, {(0, (), ((0,) * a + Kpp,)): 1})
                for F in _derivative_splits(R):
                    G = tuple(r - f for r, f in zip(R, F))
                    coef = Fraction(R[j - 1] + 1, a - i + 1 + sum(F))
                    for r, f in zip(R, F):
                        coef *= comb(r, f)
                    if sum(G) & 1:
                        coef = -coef
                    inner = th0 * d_multi(G + (0,) * (D - a), dc)
                    acc = acc + d_multi(F + (0,) * (D - a), inner).scale(coef)
            out._acc(J, acc.scale(pref * slot_sign))
    return out


def random_form(D: int, a: int, p: int, i: int, rng: random.Random, d: int = 2, w: int = 1,
                n_terms: int = 3) -> FormElement:
    """Random form of super degree p and form degree i, homogeneous per component."""
    comps = {}
    for I in combinations(range(1, a + 1), i):
        comps[I] = random_component(D, p, rng.randint(0, d), rng.randint(0, w), rng, n_terms)
    return FormElement(D, a, comps)


__all__ = ["FormElement", "d_H", "homotopy_h", "random_form"]
