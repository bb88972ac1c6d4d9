"""Named verification suites used by ``dncohom verify``.

Each suite returns a list of :class:`Check` records; nothing here raises
on a mismatch, so one run reports every failing check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List

from . import cohomology, grading, theta
from .cohomology import corollary_cases, poisson_dim


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


# published rows: (D, p) -> dims for d = 0, 1, ...
PUBLISHED_TABLES: Dict[tuple, List[int]] = {
    (2, 2): [0, 1, 0, 2, 0, 2, 1, 2, 1],
    (2, 3): [0, 0, 0, 1, 0, 1, 2, 1, 2],
    (3, 2): [0, 2, 1, 8, 3, 16, 13, 26, 26],
    (3, 3): [0, 0, 1, 4, 6, 14, 29, 36, 72],
    (4, 2): [0, 3, 3, 20, 15, 66, 73],
    (4, 3): [0, 0, 3, 11, 30, 75, 183],
}


def _compare(name, got, want) -> Check:
    return Check(name, got == want, "" if got == want else f"got {got}, expected {want}")


def published_tables(seed: int = 0) -> List[Check]:
    out = []
    for (D, p), row in PUBLISHED_TABLES.items():
        got = [poisson_dim(D, p, d) for d in range(len(row))]
        out.append(_compare(f"table D={D} p={p}", got, row))
    return out


def closed_forms(seed: int = 0) -> List[Check]:
    out = []
    bad = [(p, d) for p in range(7) for d in range(21)
           if (p, d) != (0, 1) and theta.h_theta_dim(2, p, d) != cohomology.h_theta_partition_formula_d2(p, d)]
    out.append(Check("partition-difference formula, p<=6, d<=20", not bad, f"mismatch at {bad[:5]}" if bad else ""))
    bad = [(p, d) for p in (2, 3) for d in range(31)
           if theta.h_theta_dim(2, p, d) != cohomology.h_theta_closed_forms_d2(p, d)]
    out.append(Check("H^2, H^3 case formulas for D=2, d<=30", not bad, f"mismatch at {bad[:5]}" if bad else ""))
    bad = [d for d in range(3, 31) if cohomology.h2_closed_form_d2(d) != poisson_dim(2, 2, d)]
    out.append(Check("six-periodic H^2_d(F) formula, 3<=d<=30", not bad, f"mismatch at d={bad[:5]}" if bad else ""))
    bad = [(p, d) for p in range(1, 7) for d, c in enumerate(cohomology.h_generating_series_d2(p, 20))
           if c != theta.h_theta_dim(2, p, d)]
    out.append(Check("D=2 generating series, 1<=p<=6", not bad, f"mismatch at {bad[:5]}" if bad else ""))
    bad = []
    for D in range(2, 5):
        series = grading.theta_generating_series(D, 5, 10)
        for p in range(6):
            for d in range(11):
                if not (series[p][d] == grading.theta_dim(D, p, d) == len(theta.enumerate_basis(D, p, d))):
                    bad.append((D, p, d))
    out.append(Check("Theta generating function, D<=4, p<=5, d<=10", not bad, f"mismatch at {bad[:5]}" if bad else ""))
    bad = [(D, l, pd) for D in range(2, 5) for l in range(2) for pd in cohomology.vanishing_range(D, l)
           if theta.h_theta_dim(D, *pd)]
    out.append(Check("vanishing range, D<=4, l<=1", not bad, f"nonzero at {bad[:5]}" if bad else ""))
    out.extend(corollary_checks())
    return out


def corollary_checks(D_max: int = 5, d_max: int = 6) -> List[Check]:
    """Every printed case against the rank computation, one check per case label."""
    fails: Dict[str, List] = {}
    labels = []
    for D in range(2, D_max + 1):
        for d in range(d_max + 1):
            for p in range(d + 3):
                for label, value in corollary_cases(D, p, d):
                    if label not in labels:
                        labels.append(label)
                    got = poisson_dim(D, p, d)
                    if got != value:
                        fails.setdefault(label, []).append((D, p, d, got, value))
    out = []
    for label in labels:
        bad = fails.get(label, [])
        detail = "; ".join(f"D={D} (p,d)=({p},{d}): rank {g}, printed {v}" for D, p, d, g, v in bad[:3])
        out.append(Check(f"corollary case {label}", not bad, detail))
    return out


def identities(seed: int = 0, samples: int = 20) -> List[Check]:
    from .varcalc import operators as ops
    from .varcalc.superpoly import d_x, random_component, random_element

    rng = random.Random(seed)
    D = 2
    P = ops.hat_P(D)
    results: Dict[str, bool] = {}

    def record(name, ok):
        results[name] = results.get(name, True) and bool(ok)

    for _ in range(samples):
        f = random_element(D, rng, p_values=(0, 1, 2), d_max=3, w_max=3)
        record("Delta^2 = 0", ops.delta_op(ops.delta_op(f)) == 0)
        record("D_P = Delta for the normalized bracket", ops.d_operator(P, f) == ops.delta_op(f))
        for i in range(1, D + 1):
            g = d_x(i, f)
            record("[Delta, d_x] = 0", ops.delta_op(g) == d_x(i, ops.delta_op(f)))
            record("delta/delta u o d_x = 0", ops.var_der_u(g) == 0)
            record("delta/delta theta o d_x = 0", ops.var_der_theta(g) == 0)
        p, q, r = (rng.randint(0, 2) for _ in range(3))
        A = random_component(D, p, rng.randint(0, 2), rng.randint(0, 2), rng)
        B = random_component(D, q, rng.randint(0, 2), rng.randint(0, 2), rng)
        C = random_component(D, r, rng.randint(0, 1), rng.randint(0, 2), rng)
        record("Schouten graded symmetry", ops.schouten(A, B) == ops.schouten(B, A).scale((-1) ** (p * q)))
        jac = (ops.schouten(ops.schouten(A, B), C).scale((-1) ** (p * r))
               + ops.schouten(ops.schouten(B, C), A).scale((-1) ** (q * p))
               + ops.schouten(ops.schouten(C, A), B).scale((-1) ** (r * q)))
        record("Schouten graded Jacobi", jac == 0)
        h = random_element(D, rng, d_max=2, w_max=2)
        lhs = ops.d_operator(ops.schouten(A, B), h)
        record("D_[P,Q] = (-1)^(p+1) [D_P, D_Q]", lhs == ops.graded_commutator(A, B, h).scale((-1) ** (p + 1)))
    for DD in (2, 3):
        for dd in range(5):
            for pp in range(dd + 2):
                for mono in theta.enumerate_basis(DD, pp, dd):
                    a = ops.embed_theta(theta.ThetaPolynomial(DD, {mono: 1}))
                    record("d_{x^D} a = Delta(sum u^S da/dtheta^S)",
                           d_x(DD, a) == ops.delta_op(ops.theta_potential(a)))
    return [Check(name, ok) for name, ok in results.items()]


def homotopy(seed: int = 0, samples: int = 10) -> List[Check]:
    from .varcalc.forms import FormElement, d_H, homotopy_h, random_form

    rng = random.Random(seed)
    out = []
    for a in (2, 3):
        for p in (1, 2):
            ok_h, ok_dd = True, True
            for i in range(a):
                for _ in range(samples):
                    w = random_form(3, a, p, i, rng)
                    dw = d_H(w)
                    lhs = homotopy_h(dw, p, i + 1)
                    if i > 0:
                        lhs = lhs + d_H(homotopy_h(w, p, i))
                    ok_h &= lhs == w
                    ok_dd &= d_H(dw) == FormElement(3, a)
            out.append(Check(f"h d_H + d_H h = id (a={a}, p={p})", ok_h))
            out.append(Check(f"d_H^2 = 0 (a={a}, p={p})", ok_dd))
    return out


def pva_suite(seed: int = 0) -> List[Check]:
    from . import pva
    from .varcalc.superpoly import SuperDiffPolynomial

    rng = random.Random(seed)
    out = []
    for D in range(1, 5):
        got = [pva.solve_h1(D, d, 2) for d in range(3)]
        out.append(_compare(f"H^1_d (PVA) for D={D}, d=0..2", got, [1, D - 1, 0]))
        out.append(_compare(f"H^1_d (PVA) = poisson_dim for D={D}", got, [poisson_dim(D, 1, d) for d in range(3)]))
    got = [pva.solve_h2(2, d, 2) for d in (1, 2)]
    out.append(_compare("H^2_1, H^2_2 (PVA) for D=2", got, [1, 0]))
    out.append(_compare("H^2 (PVA) = poisson_dim for D=2", got, [poisson_dim(2, 2, d) for d in (1, 2)]))
    B = pva.LambdaSeries.normal_form(2)
    ok = True
    for _ in range(10):
        F = SuperDiffPolynomial(2, {(k, (), ()): rng.randint(-3, 3) for k in range(5)})
        F1 = pva._u_derivative(F)
        expect = pva.LambdaSeries.lam(2, 2).mul_poly(F1).scale(2) + pva.LambdaSeries.monomial(
            2, (0, 0), pva._u_derivative(F1) * SuperDiffPolynomial.u(2, (0, 1)))
        ok &= pva.miura_first_order(F, B) == expect
    out.append(Check("first-order Miura formula 2F'l_2 + F''u_2", ok))
    return out


def oracle_suite(seed: int = 0, u_max: int = 2) -> List[Check]:
    from .varcalc.oracle import brute_cohomology

    out = []
    for p in range(3):
        got = [brute_cohomology(2, p, d, u_max) for d in range(4)]
        out.append(_compare(f"oracle = rank, D=2 p={p} d=0..3", got, [poisson_dim(2, p, d) for d in range(4)]))
    return out


SUITES: Dict[str, Callable[..., List[Check]]] = {
    "paper-tables": published_tables,
    "closed-forms": closed_forms,
    "identities": identities,
    "homotopy": homotopy,
    "pva": pva_suite,
    "oracle": oracle_suite,
}

__all__ = ["Check", "PUBLISHED_TABLES", "SUITES", "corollary_checks"]
