"""Scalar D-dimensional Poisson vertex algebra computations.

Lambda brackets are polynomials in one or two vector symbols (lambda, mu)
with coefficients in the super-degree-0 part of the jet algebra.  The
unknown functions of u in the cohomology ansaetze are polynomials, and
every computation is linear in them, so each ansatz is a list of unknowns
together with the concrete bracket (or vector field) each one contributes.

Grading used for truncation: the u-weight w (power of u plus number of
jet factors).  With a constant background bracket the master formula
lowers w by exactly one, so cocycle ansaetze with w <= M and potentials
with w <= M + 1 give an exact count in every weight up to M.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from .grading import MultiIndex, unit
from .linalg import RowEchelon, nullspace_basis, rank_of_vectors
from .varcalc.oracle import TruncationUnstable
from .varcalc.superpoly import (
    SuperDiffPolynomial,
    component_basis,
    d_multi,
    d_x,
    partial_u,
    u_indices,
)

Exps = Tuple[int, ...]


def _binom(K: Sequence[int], J: Sequence[int]) -> int:
    out = 1
    for k, j in zip(K, J):
        out *= comb(k, j)
    return out


def _below(K: Sequence[int]):
    """All J <= K componentwise."""
    return product(*(range(k + 1) for k in K))


class LambdaSeries:
    """sum over exponents of coefficient * lambda^I (* mu^J when nsym = 2)."""

    __slots__ = ("D", "nsym", "terms")

    def __init__(self, D: int, nsym: int = 1, terms: Optional[Mapping[Exps, SuperDiffPolynomial]] = None):
        self.D = D
        self.nsym = nsym
        self.terms: Dict[Exps, SuperDiffPolynomial] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != D * nsym:
                raise ValueError(f"exponent {e} has wrong length for D={D}, nsym={nsym}")
            self._acc(e, c)

    def _acc(self, e: Exps, c: SuperDiffPolynomial):
        if c.super_degrees() - {0}:
            raise ValueError("lambda-bracket coefficients must have super degree 0")
        cur = self.terms.get(e)
        v = c if cur is None else cur + c
        if v:
            self.terms[e] = v
        else:
            self.terms.pop(e, None)

    # constructors -----------------------------------------------------

    @classmethod
    def monomial(cls, D: int, e: Exps, c=None, nsym: int = 1) -> "LambdaSeries":
        if c is None:
            c = SuperDiffPolynomial.const(D)
        elif not isinstance(c, SuperDiffPolynomial):
            c = SuperDiffPolynomial.const(D, c)
        return cls(D, nsym, {tuple(e): c})

    @classmethod
    def lam(cls, D: int, i: int, sym: int = 0, nsym: int = 1) -> "LambdaSeries":
        """The symbol lambda_i (sym=0) or mu_i (sym=1)."""
        e = [0] * (D * nsym)
        e[sym * D + i - 1] = 1
        return cls.monomial(D, tuple(e), None, nsym)

    @classmethod
    def flat(cls, c: Sequence) -> "LambdaSeries":
        """The constant bracket sum_i c_i lambda_i."""
        D = len(c)
        out = cls(D)
        for i, ci in enumerate(c, start=1):
            if ci:
                out = out + cls.lam(D, i).scale(ci)
        return out

    @classmethod
    def normal_form(cls, D: int) -> "LambdaSeries":
        return cls.lam(D, D)

    # arithmetic -------------------------------------------------------

    def _like(self) -> "LambdaSeries":
        return LambdaSeries(self.D, self.nsym)

    def __add__(self, other: "LambdaSeries") -> "LambdaSeries":
        if (self.D, self.nsym) != (other.D, other.nsym):
            raise ValueError("incompatible lambda series")
        out = LambdaSeries(self.D, self.nsym, self.terms)
        for e, c in other.terms.items():
            out._acc(e, c)
        return out

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LambdaSeries":
        return LambdaSeries(self.D, self.nsym, {e: v.scale(c) for e, v in self.terms.items()})

    def mul_poly(self, f: SuperDiffPolynomial) -> "LambdaSeries":
        return LambdaSeries(self.D, self.nsym, {e: v * f for e, v in self.terms.items()})

    def shift(self, e: Exps) -> "LambdaSeries":
        """Multiply by the symbol monomial with exponent ``e``."""
        return LambdaSeries(self.D, self.nsym, {tuple(a + b for a, b in zip(k, e)): v for k, v in self.terms.items()})

    def d(self, S: MultiIndex) -> "LambdaSeries":
        """Total derivative d^S of every coefficient."""
        return LambdaSeries(self.D, self.nsym, {e: d_multi(S, v) for e, v in self.terms.items()})

    def lambda_plus_d(self, K: MultiIndex, sym: int = 0) -> "LambdaSeries":
        """(lambda + d)^K applied to the series, lambda being symbol ``sym``."""
        if not any(K):
            return self
        out = self._like()
        off = sym * self.D
        for J in _below(K):
            rest = [0] * (self.D * self.nsym)
            for i in range(self.D):
                rest[off + i] = K[i] - J[i]
            out = out + self.d(J).shift(tuple(rest)).scale(_binom(K, J))
        return out

    def substitute_sum(self, nsym: int = 2) -> "LambdaSeries":
        """Replace the single symbol nu by lambda + mu."""
        if self.nsym != 1:
            raise ValueError("substitution expects a one-symbol series")
        out = LambdaSeries(self.D, nsym)
        for K, c in self.terms.items():
            for J in _below(K):
                e = tuple(J) + tuple(k - j for k, j in zip(K, J))
                out._acc(e, c.scale(_binom(K, J)))
        return out

    def embed(self, sym: int, nsym: int = 2) -> "LambdaSeries":
        """View a one-symbol series as a series in symbol ``sym`` of ``nsym``."""
        out = LambdaSeries(self.D, nsym)
        for K, c in self.terms.items():
            e = [0] * (self.D * nsym)
            e[sym * self.D:(sym + 1) * self.D] = K
            out._acc(tuple(e), c)
        return out

    def at_zero(self) -> SuperDiffPolynomial:
        return self.terms.get((0,) * (self.D * self.nsym), SuperDiffPolynomial(self.D))

    def coordinates(self) -> Dict[Hashable, Fraction]:
        """Coefficient of each (exponent, jet monomial) pair."""
        out = {}
        for e, c in self.terms.items():
            for m, v in c.terms.items():
                out[(e, m)] = v
        return out

    def degrees(self):
        """Set of total degrees |exponent| + standard degree."""
        out = set()
        for e, c in self.terms.items():
            for dd in c.std_degrees():
                out.add(sum(e) + dd)
        return out

    def is_constant(self) -> bool:
        return all(c.terms.keys() <= {(0, (), ())} for c in self.terms.values())

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, LambdaSeries) and (self.D, self.nsym) == (other.D, other.nsym) \
            and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        names = ("l", "m")
        parts = []
        for e, c in sorted(self.terms.items()):
            sym = "".join(
                f"{names[k // self.D]}{k % self.D + 1}" + (f"^{x}" if x > 1 else "")
                for k, x in enumerate(e) if x
            )
            parts.append(f"({c!r})" + (f"*{sym}" if sym else ""))
        return " + ".join(parts)


def _as_poly(D: int, f) -> SuperDiffPolynomial:
    return f if isinstance(f, SuperDiffPolynomial) else SuperDiffPolynomial.const(D, f)


def master_bracket(f, g, B: LambdaSeries, sym: int = 0, nsym: int = 1) -> LambdaSeries:
    """{f_lambda g} from the generator bracket B = {u_lambda u}.

    sum over L, M, I of dg/du_M (lambda+d)^M [B_I (lambda+d)^I (-lambda-d)^L df/du_L].
    """
    D = B.D
    if B.nsym != 1:
        raise ValueError("the generator bracket must be a one-symbol series")
    f, g = _as_poly(D, f), _as_poly(D, g)
    if f.super_degrees() - {0} or g.super_degrees() - {0}:
        raise ValueError("brackets are defined on super degree 0")
    inner = LambdaSeries(D, nsym)
    for L in u_indices(f):
        fL = LambdaSeries.monomial(D, (0,) * (D * nsym), partial_u(L, f), nsym)
        sgn = -1 if sum(L) & 1 else 1
        for I, BI in B.terms.items():
            K = tuple(a + b for a, b in zip(I, L))
            inner = inner + fL.lambda_plus_d(K, sym).mul_poly(BI).scale(sgn)
    out = LambdaSeries(D, nsym)
    if not inner:
        return out
    for M in u_indices(g):
        out = out + inner.lambda_plus_d(M, sym).mul_poly(partial_u(M, g))
    return out


def u_poly(D: int) -> SuperDiffPolynomial:
    return SuperDiffPolynomial.u(D)


def skew_residual(B: LambdaSeries) -> LambdaSeries:
    """B(lambda) + sum_I (-lambda - d)^I B_I; zero iff B is skew."""
    out = LambdaSeries(B.D, 1, B.terms)
    for I, BI in B.terms.items():
        term = LambdaSeries.monomial(B.D, (0,) * B.D, BI).lambda_plus_d(I)
        out = out + (term.scale(-1) if sum(I) & 1 else term)
    return out


def check_skew(B: LambdaSeries) -> Tuple[bool, LambdaSeries]:
    r = skew_residual(B)
    return (not r), r


def jacobi_residual(B_content: LambdaSeries, B_bracket: LambdaSeries) -> LambdaSeries:
    """{u_l C(mu)} - {u_mu C(l)} - {C(l)_{l+mu} u}, brackets taken with B_bracket.

    With C = B_bracket this is the PVA Jacobi identity on generators; with a
    constant B_bracket and C the first-order deformation it is the order-eps
    compatibility condition.
    """
    D = B_content.D
    u = u_poly(D)
    zero = (0,) * D
    out = LambdaSeries(D, 2)
    for I, CI in B_content.terms.items():
        out = out + master_bracket(u, CI, B_bracket, sym=0, nsym=2).shift(zero + I)
        out = out - master_bracket(u, CI, B_bracket, sym=1, nsym=2).shift(I + zero)
        out = out - master_bracket(CI, u, B_bracket).substitute_sum(2).shift(I + zero)
    return out


def check_jacobi(B: LambdaSeries) -> Tuple[bool, LambdaSeries]:
    ok, _ = check_skew(B)
    if not ok:
        raise ValueError("Jacobi check needs a skew-symmetric bracket")
    r = jacobi_residual(B, B)
    return (not r), r


def evolutionary(X: SuperDiffPolynomial, f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    """sum_S d^S X df/du^S."""
    out = SuperDiffPolynomial(f.D)
    for S in u_indices(f):
        out = out + d_multi(S, X) * partial_u(S, f)
    return out


def symmetry_map(X: SuperDiffPolynomial, B: LambdaSeries) -> LambdaSeries:
    """X(B) - {X_l u} - {u_l X}; zero iff X is a symmetry of B."""
    u = u_poly(B.D)
    lhs = LambdaSeries(B.D, 1, {I: evolutionary(X, BI) for I, BI in B.terms.items()})
    return lhs - master_bracket(X, u, B) - master_bracket(u, X, B)


def miura_first_order(F, B: LambdaSeries) -> LambdaSeries:
    """Order-eps term of {U_l U} for U = u + eps F, i.e. {F_l u} + {u_l F} (constant B)."""
    if not B.is_constant():
        raise ValueError("first-order Miura formula assumes a constant background")
    F = _as_poly(B.D, F)
    u = u_poly(B.D)
    return master_bracket(F, u, B) + master_bracket(u, F, B)


def hamiltonian_field(h: SuperDiffPolynomial, B: LambdaSeries) -> SuperDiffPolynomial:
    """{h_l u} at l = 0."""
    return master_bracket(h, u_poly(B.D), B).at_zero()


# linear systems over ansatz unknowns ------------------------------------

@dataclass
class LinearSystem:
    """Equations sum_k coeff * x_k + constant = 0, stored column by column."""

    unknowns: List[Hashable]
    columns: List[Dict[Hashable, Fraction]]
    constant: Dict[Hashable, Fraction] = field(default_factory=dict)

    def rank(self) -> int:
        return rank_of_vectors(self.columns)

    def solution_dim(self) -> int:
        """Dimension of the homogeneous solution space."""
        return len(self.unknowns) - self.rank()

    def homogeneous_solutions(self) -> List[Dict[Hashable, Fraction]]:
        return [{self.unknowns[j]: v for j, v in vec.items()} for vec in nullspace_basis(self.columns)]

    def equations(self) -> List[Tuple[Dict[Hashable, Fraction], Fraction]]:
        """An independent set of equations, as (coefficients by unknown, constant)."""
        rows: Dict[Hashable, Dict[Hashable, Fraction]] = {}
        for j, col in enumerate(self.columns):
            for k, v in col.items():
                rows.setdefault(k, {})[j] = v
        for k, v in self.constant.items():
            rows.setdefault(k, {})[-1] = v
        ech = RowEchelon(key=lambda j: (j == -1, -j))
        for row in rows.values():
            ech.add(row)
        out = []
        for row in ech.rows.values():
            out.append(({self.unknowns[j]: v for j, v in row.items() if j != -1}, row.get(-1, Fraction(0))))
        return out

    def is_empty(self) -> bool:
        return not any(self.columns) and not self.constant


def _system(unknowns, column_fn: Callable[[Hashable], Dict], constant=None) -> LinearSystem:
    cols = [column_fn(k) for k in unknowns]
    return LinearSystem(list(unknowns), cols, dict(constant or {}))


def _u_power(D: int, k: int) -> SuperDiffPolynomial:
    return SuperDiffPolynomial(D, {(k, (), ()): 1})


def _u_jet(D: int, S: MultiIndex) -> SuperDiffPolynomial:
    return SuperDiffPolynomial.u(D, S)


@dataclass
class VectorFieldAnsatz:
    """X of standard degree d with every u-weight w <= M; one unknown per monomial."""

    D: int
    d: int
    M: int

    def __post_init__(self):
        if self.d < 0 or self.M < 0:
            raise ValueError("d and M must be >= 0")
        self.unknowns = [m for w in range(self.M + 1) for m in component_basis(self.D, 0, self.d, w)]

    def element(self, key) -> SuperDiffPolynomial:
        return SuperDiffPolynomial(self.D, {key: 1})

    def field(self, values: Mapping[Hashable, object]) -> SuperDiffPolynomial:
        return SuperDiffPolynomial(self.D, {k: v for k, v in values.items() if v})


def symmetry_residual(X: VectorFieldAnsatz, B: Optional[LambdaSeries] = None) -> LinearSystem:
    B = B if B is not None else LambdaSeries.normal_form(X.D)
    return _system(X.unknowns, lambda k: symmetry_map(X.element(k), B).coordinates())


@dataclass
class DeformationAnsatz:
    """A first-order deformation: fixed part plus a linear combination of unknown brackets.

    ``slots`` records, for the templates, which coefficient function each
    unknown belongs to, e.g. ("B", a, b, k) for the u^k coefficient of B^{ab}.
    """

    D: int
    d: int
    unknowns: List[Hashable] = field(default_factory=list)
    columns: Dict[Hashable, LambdaSeries] = field(default_factory=dict)
    fixed: Optional[LambdaSeries] = None

    def __post_init__(self):
        if self.fixed is None:
            self.fixed = LambdaSeries(self.D)

    def bracket(self, values: Optional[Mapping[Hashable, object]] = None) -> LambdaSeries:
        out = self.fixed
        for k, v in (values or {}).items():
            if v:
                out = out + self.columns[k].scale(v)
        return out

    @classmethod
    def general(cls, D: int, d: int, M: int) -> "DeformationAnsatz":
        """All brackets sum_I c_I lambda^I of total degree d, coefficient u-weights <= M."""
        from .grading import multi_indices_of_degree

        out = cls(D, d)
        for k in range(d + 1):
            for I in multi_indices_of_degree(D, k):
                for w in range(M + 1):
                    for m in component_basis(D, 0, d - k, w):
                        key = (I, m)
                        out.unknowns.append(key)
                        out.columns[key] = LambdaSeries.monomial(D, I, SuperDiffPolynomial(D, {m: 1}))
        return out

    @classmethod
    def template_d1(cls, D: int, M: int) -> "DeformationAnsatz":
        """sum_a 2 A^a(u) lambda_a + A^a'(u) u_a with deg A^a <= M."""
        out = cls(D, 1)
        for a in range(1, D + 1):
            for k in range(M + 1):
                key = ("A", a, k)
                br = LambdaSeries.lam(D, a).mul_poly(_u_power(D, k)).scale(2)
                if k:
                    br = br + LambdaSeries.monomial(D, (0,) * D, _u_power(D, k - 1) * _u_jet(D, unit(D, a))).scale(k)
                out.unknowns.append(key)
                out.columns[key] = br
        return out

    @classmethod
    def template_d2(cls, D: int, M: int, skew: bool = True) -> "DeformationAnsatz":
        """A^{ab} l_a l_b + B^{ab} l_a u_b + C^{ab} u_a u_b + D^{ab} u_{a+b}.

        With ``skew`` the skew-symmetry relations are built in and only the
        B^{ab} (degree <= M in u) remain as unknowns.
        """
        out = cls(D, 2)
        pairs = [(a, b) for a in range(1, D + 1) for b in range(1, D + 1)]
        sym_pairs = [(a, b) for a, b in pairs if a <= b]
        for a, b in pairs:
            for k in range(M + 1):
                key = ("B", a, b, k)
                slots = {("B", a, b): _u_power(D, k)}
                out.unknowns.append(key)
                out.columns[key] = skew_normalize(D, slots).fixed if skew else _d2_bracket(D, slots)
        if not skew:
            for name in ("A", "C", "D"):
                for a, b in sym_pairs:
                    for k in range(M + 1):
                        key = (name, a, b, k)
                        out.unknowns.append(key)
                        out.columns[key] = _d2_bracket(D, {(name, a, b): _u_power(D, k)})
        return out


_SLOT_NAMES = ("A", "B", "C", "D")


def _d2_bracket(D: int, slots: Mapping[Tuple[str, int, int], SuperDiffPolynomial]) -> LambdaSeries:
    """Assemble the degree-2 template; symmetric slots are summed over both orders."""
    out = LambdaSeries(D)
    zero = (0,) * D
    for (name, a, b), f in slots.items():
        if name not in _SLOT_NAMES or not (1 <= a <= D and 1 <= b <= D):
            raise ValueError(f"slot {(name, a, b)} does not fit the degree-2 template for D={D}")
        f = _as_poly(D, f)
        if any(m[1] or m[2] for m in f.terms):
            raise ValueError("template slots must be functions of u alone")
        ea, eb = unit(D, a), unit(D, b)
        mult = 1 if (name == "B" or a == b) else 2
        if name == "A":
            term = LambdaSeries.monomial(D, tuple(x + y for x, y in zip(ea, eb)), f)
        elif name == "B":
            term = LambdaSeries.monomial(D, ea, f * _u_jet(D, eb))
        elif name == "C":
            term = LambdaSeries.monomial(D, zero, f * _u_jet(D, ea) * _u_jet(D, eb))
        else:
            term = LambdaSeries.monomial(D, zero, f * _u_jet(D, tuple(x + y for x, y in zip(ea, eb))))
        out = out + term.scale(mult)
    return out


def _u_derivative(f: SuperDiffPolynomial) -> SuperDiffPolynomial:
    return partial_u((0,) * f.D, f)


def skew_normalize(D: int, slots: Mapping[Tuple[str, int, int], object]) -> DeformationAnsatz:
    """Apply A = 0, C^{ab} = (B^{ab}' + B^{ba}')/4, D^{ab} = (B^{ab} + B^{ba})/4.

    ``slots`` maps (name, a, b) to a function of u; only the B entries are
    kept.  The result has no unknowns; its fixed part is the bracket.
    """
    Bs: Dict[Tuple[int, int], SuperDiffPolynomial] = {}
    for (name, a, b), f in slots.items():
        if name not in _SLOT_NAMES or not (1 <= a <= D and 1 <= b <= D):
            raise ValueError(f"slot {(name, a, b)} does not fit the degree-2 template for D={D}")
        if name == "B":
            Bs[(a, b)] = _as_poly(D, f)
    full: Dict[Tuple[str, int, int], SuperDiffPolynomial] = {}
    zero = SuperDiffPolynomial(D)
    for (a, b), f in Bs.items():
        full[("B", a, b)] = f
    for a in range(1, D + 1):
        for b in range(a, D + 1):
            s = Bs.get((a, b), zero) + Bs.get((b, a), zero)
            if s:
                full[("C", a, b)] = _u_derivative(s).scale(Fraction(1, 4))
                full[("D", a, b)] = s.scale(Fraction(1, 4))
    return DeformationAnsatz(D, 2, fixed=_d2_bracket(D, full))


def deformation_residual(ansatz: DeformationAnsatz, background: Optional[LambdaSeries] = None) -> LinearSystem:
    """Order-eps compatibility {u_l C(mu)} - {u_mu C(l)} = {C(l)_{l+mu} u} as linear equations."""
    B0 = background if background is not None else LambdaSeries.normal_form(ansatz.D)
    if not B0.is_constant():
        raise ValueError("deformation equations assume a constant background")
    if ansatz.fixed and not check_skew(ansatz.fixed)[0]:
        raise ValueError("the fixed part of the deformation is not skew-symmetric")
    for k in ansatz.unknowns:
        if not check_skew(ansatz.columns[k])[0]:
            raise ValueError(f"ansatz column {k!r} is not skew-symmetric; use skew_normalize")
    const = jacobi_residual(ansatz.fixed, B0).coordinates() if ansatz.fixed else {}
    return _system(ansatz.unknowns, lambda k: jacobi_residual(ansatz.columns[k], B0).coordinates(), const)


def cocycle_system(ansatz: DeformationAnsatz, background: Optional[LambdaSeries] = None) -> LinearSystem:
    """Skew-symmetry and compatibility together; works for non-skew ansaetze."""
    B0 = background if background is not None else LambdaSeries.normal_form(ansatz.D)

    def col(k):
        br = ansatz.columns[k]
        v = {("skew",) + key: x for key, x in skew_residual(br).coordinates().items()}
        v.update({("jac",) + key: x for key, x in jacobi_residual(br, B0).coordinates().items()})
        return v

    return _system(ansatz.unknowns, col)


# cohomology counts --------------------------------------------------------

def _background(D: int, background) -> LambdaSeries:
    if D < 1:
        raise ValueError("need D >= 1")
    if background is None:
        return LambdaSeries.normal_form(D)
    if isinstance(background, LambdaSeries):
        return background
    return LambdaSeries.flat(background)


def _h1_at(D: int, d: int, M: int, B: LambdaSeries) -> int:
    X = VectorFieldAnsatz(D, d, M)
    cocycles = symmetry_residual(X, B).solution_dim()
    allowed = set(X.unknowns)
    images = []
    for w in range(M + 2):
        for m in component_basis(D, 0, d - 1, w):
            v = hamiltonian_field(SuperDiffPolynomial(D, {m: 1}), B)
            if not set(v.terms) <= allowed:
                raise AssertionError("Hamiltonian field left the ansatz window")
            images.append(v.terms)
    return cocycles - rank_of_vectors(images)


def _h2_at(D: int, d: int, M: int, B: LambdaSeries) -> int:
    ansatz = DeformationAnsatz.general(D, d, M)
    cocycles = cocycle_system(ansatz, B).solution_dim()
    allowed = set()
    for k in ansatz.unknowns:
        allowed |= set(ansatz.columns[k].coordinates())
    images = []
    for w in range(M + 2):
        for m in component_basis(D, 0, d - 1, w):
            v = miura_first_order(SuperDiffPolynomial(D, {m: 1}), B).coordinates()
            if not set(v) <= allowed:
                raise AssertionError("Miura coboundary left the ansatz window")
            images.append(v)
    return cocycles - rank_of_vectors(images)


def _stable(fn, D, d, M, B, label):
    if M < 1:
        raise ValueError("M must be >= 1")
    if D < 1 or d < 0:
        raise ValueError("need D >= 1 and d >= 0")
    a, b = fn(D, d, M, B), fn(D, d, M + 1, B)
    if a != b:
        raise TruncationUnstable(f"{label}_{d}(D={D}): {a} at M={M}, {b} at M={M + 1}")
    return a


def solve_h1(D: int, d: int, M: int = 2, background=None) -> int:
    """dim H^1_d: symmetries of degree d modulo Hamiltonian fields."""
    return _stable(_h1_at, D, d, M, _background(D, background), "H^1")


def solve_h2(D: int, d: int, M: int = 2, background=None) -> int:
    """dim H^2_d: compatible first-order deformations of degree d modulo Miura coboundaries."""
    return _stable(_h2_at, D, d, M, _background(D, background), "H^2")


__all__ = [
    "LambdaSeries", "LinearSystem", "VectorFieldAnsatz", "DeformationAnsatz",
    "master_bracket", "skew_residual", "check_skew", "jacobi_residual", "check_jacobi",
    "evolutionary", "symmetry_map", "symmetry_residual", "miura_first_order", "hamiltonian_field",
    "skew_normalize", "deformation_residual", "cocycle_system", "solve_h1", "solve_h2",
]
