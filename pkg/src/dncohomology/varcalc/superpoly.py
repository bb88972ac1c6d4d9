"""Truncated super differential polynomials for one dependent variable u.

A monomial is ``(e0, jets, thetas)``:

* ``e0``     power of the 0-jet u,
* ``jets``   grlex-sorted tuple of multi-indices S (|S| > 0, repeats allowed)
             standing for the commuting factors u^S,
* ``thetas`` strictly increasing tuple of multi-indices T standing for the
             anticommuting factors theta^T, in that order.

Three gradings are used throughout: the standard degree (total number of
x-derivatives), the super degree (number of thetas) and the u-weight
``e0 + len(jets)``.  Total derivatives preserve super degree and u-weight,
so each (super degree, standard degree, u-weight) component is finite.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .. import grading
from ..grading import MultiIndex, grlex_key
from ..theta import enumerate_basis as _exterior_basis

Monomial = Tuple[int, Tuple[MultiIndex, ...], Tuple[MultiIndex, ...]]

ONE: Monomial = (0, (), ())


class TruncationError(ArithmeticError):
    """An operation would leave the declared truncation window."""


def theta_sort(thetas) -> Tuple[int, Optional[Tuple[MultiIndex, ...]]]:
    """Canonical order of a theta word: (sign, sorted) or (0, None) on a repeat."""
    keys = [grlex_key(T) for T in thetas]
    n = len(keys)
    if len(set(keys)) != n:
        return 0, None
    inv = 0
    for a in range(n):
        ka = keys[a]
        for b in range(a + 1, n):
            if ka > keys[b]:
                inv += 1
    order = sorted(range(n), key=keys.__getitem__)
    return (-1 if inv & 1 else 1), tuple(thetas[k] for k in order)


def jet_sort(jets) -> Tuple[MultiIndex, ...]:
    return tuple(sorted(jets, key=grlex_key))


def mono_mul(a: Monomial, b: Monomial) -> Tuple[int, Optional[Monomial]]:
    sign, th = theta_sort(a[2] + b[2])
    if not sign:
        return 0, None
    return sign, (a[0] + b[0], jet_sort(a[1] + b[1]), th)


def std_degree(m: Monomial) -> int:
    return sum(sum(S) for S in m[1]) + sum(sum(T) for T in m[2])


def super_degree(m: Monomial) -> int:
    return len(m[2])


def u_weight(m: Monomial) -> int:
    return m[0] + len(m[1])


def mono_sort_key(m: Monomial):
    """Order used to pick pivots in quotient reductions (highest derivatives first)."""
    orders = sorted((grlex_key(S) for S in m[1] + m[2]), reverse=True)
    return (tuple(orders), -m[0], m)


class SuperDiffPolynomial:
    """Exact-rational element of the truncated algebra in D independent variables.

    ``d_max`` / ``u_max`` (optional) bound the standard degree and the power
    of the 0-jet u of every stored term; operations that would produce a term
    outside the bounds raise :class:`TruncationError`.
    """

    __slots__ = ("D", "terms", "d_max", "u_max")

    def __init__(self, D: int, terms: Optional[Dict[Monomial, object]] = None,
                 d_max: Optional[int] = None, u_max: Optional[int] = None):
        self.D = D
        self.d_max = d_max
        self.u_max = u_max
        self.terms: Dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if c:
                self._acc(m, Fraction(c))
        self._check()

    # construction -----------------------------------------------------

    def _new(self, terms=None, other=None) -> "SuperDiffPolynomial":
        d_max, u_max = self.d_max, self.u_max
        if other is not None:
            d_max = _tighter(d_max, other.d_max)
            u_max = _tighter(u_max, other.u_max)
        out = SuperDiffPolynomial(self.D, None, d_max, u_max)
        if terms:
            out.terms = terms
            out._check()
        return out

    def _check(self):
        if self.d_max is None and self.u_max is None:
            return
        for m in self.terms:
            if self.d_max is not None and std_degree(m) > self.d_max:
                raise TruncationError(f"standard degree {std_degree(m)} exceeds d_max={self.d_max}")
            if self.u_max is not None and m[0] > self.u_max:
                raise TruncationError(f"u-degree {m[0]} exceeds u_max={self.u_max}")

    def with_truncation(self, d_max=None, u_max=None) -> "SuperDiffPolynomial":
        return SuperDiffPolynomial(self.D, dict(self.terms), d_max, u_max)

    @classmethod
    def const(cls, D: int, c=1) -> "SuperDiffPolynomial":
        return cls(D, {ONE: c})

    @classmethod
    def u(cls, D: int, S: Optional[MultiIndex] = None, power: int = 1) -> "SuperDiffPolynomial":
        """u^S (or u itself when S is None or zero), raised to ``power``."""
        if S is None or not any(S):
            return cls(D, {(power, (), ()): 1})
        _check_index(D, S)
        return cls(D, {(0, (tuple(S),) * power, ()): 1})

    @classmethod
    def theta(cls, D: int, T: Optional[MultiIndex] = None) -> "SuperDiffPolynomial":
        T = tuple(T) if T is not None else (0,) * D
        _check_index(D, T)
        return cls(D, {(0, (), (T,)): 1})

    # arithmetic -------------------------------------------------------

    def _acc(self, m, c):
        v = self.terms.get(m, 0) + c
        if v:
            self.terms[m] = v
        else:
            self.terms.pop(m, None)

    def copy(self):
        return self._new(dict(self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {ONE: Fraction(other)}
        return isinstance(other, SuperDiffPolynomial) and self.D == other.D and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperDiffPolynomial.const(self.D, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return self._new(out, other)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SuperDiffPolynomial":
        c = Fraction(c)
        if not c:
            return self._new()
        return self._new({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = self._new(None, other)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                sign, m = mono_mul(m1, m2)
                if sign:
                    out._acc(m, sign * c1 * c2)
        out._check()
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, n: int):
        out = SuperDiffPolynomial.const(self.D)._new(None, self) + 1
        for _ in range(n):
            out = out * self
        return out

    # gradings ---------------------------------------------------------

    def components(self) -> Dict[Tuple[int, int, int], "SuperDiffPolynomial"]:
        """Split into (super degree, standard degree, u-weight) components."""
        parts: Dict[Tuple[int, int, int], Dict[Monomial, Fraction]] = {}
        for m, c in self.terms.items():
            parts.setdefault((super_degree(m), std_degree(m), u_weight(m)), {})[m] = c
        return {k: self._new(v) for k, v in parts.items()}

    def homogeneous(self, p: int, d: int) -> "SuperDiffPolynomial":
        return self._new({m: c for m, c in self.terms.items() if super_degree(m) == p and std_degree(m) == d})

    def super_degrees(self):
        return {super_degree(m) for m in self.terms}

    def std_degrees(self):
        return {std_degree(m) for m in self.terms}

    def theta_free(self) -> bool:
        return all(not m[2] for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(ONE, Fraction(0))

    def drop_constant(self) -> "SuperDiffPolynomial":
        out = dict(self.terms)
        out.pop(ONE, None)
        return self._new(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{_mono_str(m)}" for m, c in sorted(self.terms.items(), key=lambda t: mono_sort_key(t[0])))


def _tighter(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _check_index(D, S):
    if len(S) != D or any(x < 0 for x in S):
        raise ValueError(f"{S} is not a multi-index in Z^{D}")


def _mono_str(m: Monomial) -> str:
    parts = []
    if m[0]:
        parts.append("u" if m[0] == 1 else f"u^{m[0]}")
    parts += ["u_" + "".join(map(str, S)) for S in m[1]]
    parts += ["th_" + "".join(map(str, T)) for T in m[2]]
    return "*".join(parts) or "1"


# derivations ----------------------------------------------------------

def _shift(S: MultiIndex, i: int, by: int = 1) -> MultiIndex:
    return S[:i] + (S[i] + by,) + S[i + 1:]


def d_x_monomial(D: int, i: int, m: Monomial) -> Dict[Monomial, int]:
    """Total derivative d_{x^i} (i 1-based) of one monomial."""
    e0, jets, thetas = m
    k = i - 1
    out: Dict[Monomial, int] = {}

    def acc(mm, c):
        v = out.get(mm, 0) + c
        if v:
            out[mm] = v
        else:
            del out[mm]

    if e0:
        acc((e0 - 1, jet_sort(jets + (_unit_cache(D, i),)), thetas), e0)
    for S in dict.fromkeys(jets):
        acc((e0, jet_sort(_remove_one(jets, S) + (_shift(S, k),)), thetas), jets.count(S))
    for a, T in enumerate(thetas):
        sign, th = theta_sort(thetas[:a] + (_shift(T, k),) + thetas[a + 1:])
        if sign:
            acc((e0, jets, th), sign)
    return out


def _remove_one(jets, S):
    lst = list(jets)
    lst.remove(S)
    return tuple(lst)


@lru_cache(maxsize=None)
def _unit_cache(D: int, i: int) -> MultiIndex:
    return grading.unit(D, i)


def _map_linear(f: SuperDiffPolynomial, mono_fn) -> SuperDiffPolynomial:
    out = f._new()
    for m, c in f.terms.items():
        for mm, s in mono_fn(m).items():
            out._acc(mm, s * c)
    out._check()
    return out


def d_x(i: int, f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    """Total derivative d_{x^i}, i in 1..D."""
    if not 1 <= i <= f.D:
        raise ValueError(f"axis {i} out of range 1..{f.D}")
    return _map_linear(f, lambda m: d_x_monomial(f.D, i, m))


def d_multi(S: MultiIndex, f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    """d^S f = d_1^{s_1} ... d_D^{s_D} f."""
    for i, s in enumerate(S, start=1):
        for _ in range(s):
            f = d_x(i, f)
    return f


def partial_u_monomial(S: MultiIndex, m: Monomial) -> Dict[Monomial, int]:
    e0, jets, thetas = m
    if not any(S):
        return {(e0 - 1, jets, thetas): e0} if e0 else {}
    mult = jets.count(S)
    if not mult:
        return {}
    return {(e0, _remove_one(jets, S), thetas): mult}


def partial_u(S: MultiIndex, f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    """d f / d u^S (S = 0 means the 0-jet u)."""
    return _map_linear(f, lambda m: partial_u_monomial(tuple(S), m))


def partial_theta_monomial(T: MultiIndex, m: Monomial) -> Dict[Monomial, int]:
    """Left derivative d/d theta^T."""
    e0, jets, thetas = m
    try:
        a = thetas.index(T)
    except ValueError:
        return {}
    return {(e0, jets, thetas[:a] + thetas[a + 1:]): -1 if a & 1 else 1}


def partial_theta(T: MultiIndex, f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    return _map_linear(f, lambda m: partial_theta_monomial(tuple(T), m))


def u_indices(f: SuperDiffPolynomial) -> List[MultiIndex]:
    """Jet indices S (including 0) on which f depends, grlex sorted."""
    zero = (0,) * f.D
    out = set()
    for e0, jets, _ in f.terms:
        if e0:
            out.add(zero)
        out.update(jets)
    return sorted(out, key=grlex_key)


def theta_indices(f: SuperDiffPolynomial) -> List[MultiIndex]:
    out = set()
    for _, _, thetas in f.terms:
        out.update(thetas)
    return sorted(out, key=grlex_key)


# bases of graded components ------------------------------------------

@lru_cache(maxsize=None)
def _jet_multisets(D: int, degree: int, max_count: int, min_key=None) -> Tuple[Tuple[MultiIndex, ...], ...]:
    """Non-decreasing (grlex) tuples of nonzero multi-indices with total degree ``degree``."""
    if degree == 0:
        return ((),)
    if max_count == 0:
        return ()
    out = []
    for s in range(1, degree + 1):
        for S in grading.multi_indices_of_degree(D, s):
            key = grlex_key(S)
            if min_key is not None and key < min_key:
                continue
            for rest in _jet_multisets(D, degree - s, max_count - 1, key):
                out.append((S,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def component_basis(D: int, p: int, d: int, w: int) -> Tuple[Monomial, ...]:
    """All monomials with super degree p, standard degree d and u-weight w."""
    if p < 0 or d < 0 or w < 0:
        return ()
    out = []
    for dth in range(d + 1):
        # thetas are p distinct multi-indices of Z^D; reuse the exterior-algebra enumerator
        theta_sets = _exterior_basis(D + 1, p, dth)
        if not theta_sets:
            continue
        for jets in _jet_multisets(D, d - dth, w):
            e0 = w - len(jets)
            if e0 < 0:
                continue
            for th in theta_sets:
                out.append((e0, jets, th))
    return tuple(out)


def random_component(D: int, p: int, d: int, w: int, rng: random.Random, n_terms: int = 4,
                     coeff_range: int = 3) -> SuperDiffPolynomial:
    """Random homogeneous element; coefficients uniform in [-coeff_range, coeff_range]."""
    basis = component_basis(D, p, d, w)
    f = SuperDiffPolynomial(D)
    if not basis:
        return f
    for m in rng.sample(basis, min(n_terms, len(basis))):
        c = rng.randint(-coeff_range, coeff_range)
        if c:
            f._acc(m, Fraction(c))
    return f


def random_element(D: int, rng: random.Random, p_values=(0, 1, 2), d_max: int = 2, w_max: int = 2,
                   n_components: int = 2, n_terms: int = 3) -> SuperDiffPolynomial:
    f = SuperDiffPolynomial(D)
    for _ in range(n_components):
        p = rng.choice(list(p_values))
        f = f + random_component(D, p, rng.randint(0, d_max), rng.randint(0, w_max), rng, n_terms)
    return f


def iter_terms(f: SuperDiffPolynomial) -> Iterator[Tuple[Monomial, Fraction]]:
    return iter(sorted(f.terms.items(), key=lambda t: mono_sort_key(t[0])))
