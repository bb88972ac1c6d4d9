import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dncohomology import poisson_dim, pva
from dncohomology.pva import DeformationAnsatz, LambdaSeries as LS, VectorFieldAnsatz
from dncohomology.varcalc.oracle import TruncationUnstable
from dncohomology.varcalc.superpoly import SuperDiffPolynomial as SP, random_component

seeds = st.integers(0, 2**32 - 1)


def u(D=2, S=None, k=1):
    return SP.u(D, S, k)


def poly_in_u(D, coeffs):
    out = SP(D)
    for k, c in enumerate(coeffs):
        if c:
            out = out + (u(D, None, k) if k else SP.const(D)).scale(c)
    return out


# master formula -------------------------------------------------------

def test_master_generator():
    for D in (1, 2, 3):
        B = LS.normal_form(D)
        assert pva.master_bracket(u(D), u(D), B) == B


def test_master_u_squared():
    B = LS.normal_form(2)
    # left Leibniz: {u_l u^2} = 2u l_2; the (l + d) acts on the left slot: {u^2_l u} = 2u l_2 + 2u_2
    got = pva.master_bracket(u(2), u(2, None, 2), B)
    assert got == LS.lam(2, 2).mul_poly(u(2).scale(2))
    got = pva.master_bracket(u(2, None, 2), u(2), B)
    assert got == LS.lam(2, 2).mul_poly(u(2).scale(2)) + LS.monomial(2, (0, 0), u(2, (0, 1)).scale(2))


@given(seeds)
def test_master_bilinear(seed):
    rng = random.Random(seed)
    B = LS.flat([Fraction(rng.randint(-3, 3)) for _ in range(2)]) + LS.lam(2, 2)
    f, g, h = (random_component(2, 0, rng.randint(0, 2), rng.randint(1, 2), rng) for _ in range(3))
    a = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    assert pva.master_bracket(f + h.scale(a), g, B) == pva.master_bracket(f, g, B) + pva.master_bracket(h, g, B).scale(a)
    assert pva.master_bracket(f, g + h.scale(a), B) == pva.master_bracket(f, g, B) + pva.master_bracket(f, h, B).scale(a)


def test_master_rejects_odd():
    with pytest.raises(ValueError):
        pva.master_bracket(SP.theta(2), u(), LS.normal_form(2))


# skew and Jacobi ------------------------------------------------------

def test_skew_examples():
    assert pva.check_skew(LS.normal_form(2))[0]
    ok, res = pva.check_skew(LS.monomial(2, (0, 0), u()))
    assert not ok and res
    for a in (1, 2):
        for k in range(3):
            col = DeformationAnsatz.template_d1(2, 2).columns[("A", a, k)]
            assert pva.check_skew(col)[0]


@given(seeds)
def test_skew_normalize_output_is_skew(seed):
    rng = random.Random(seed)
    slots = {("B", a, b): poly_in_u(2, [rng.randint(-2, 2) for _ in range(3)])
             for a in (1, 2) for b in (1, 2)}
    assert pva.check_skew(pva.skew_normalize(2, slots).fixed)[0]


def test_skew_normalize_examples():
    Bu = poly_in_u(2, [1, 2, 3])
    got = pva.skew_normalize(2, {("B", 1, 2): Bu}).fixed
    want = pva._d2_bracket(2, {("B", 1, 2): Bu, ("C", 1, 2): pva._u_derivative(Bu).scale(Fraction(1, 4)),
                               ("D", 1, 2): Bu.scale(Fraction(1, 4))})
    assert got == want
    assert not pva.skew_normalize(2, {}).fixed
    with pytest.raises(ValueError):
        pva.skew_normalize(2, {("B", 1, 3): Bu})


def test_jacobi_examples():
    assert pva.check_jacobi(LS.normal_form(2))[0]
    assert pva.check_jacobi(LS.flat([3, -1, 2]))[0]
    # lambda_1 is a compatible first-order deformation of lambda_2
    assert not pva.jacobi_residual(LS.lam(2, 1), LS.normal_form(2))
    with pytest.raises(ValueError):
        pva.check_jacobi(LS.monomial(2, (0, 0), u()))


def test_jacobi_residual_nonzero_on_non_closed_ansatz():
    br = pva.skew_normalize(2, {("B", 1, 1): u()}).fixed
    assert pva.check_skew(br)[0]
    assert pva.jacobi_residual(br, LS.normal_form(2))


@given(seeds)
def test_miura_coboundaries_are_cocycles(seed):
    rng = random.Random(seed)
    F = random_component(2, 0, rng.randint(0, 2), rng.randint(1, 3), rng)
    C = pva.miura_first_order(F, LS.normal_form(2))
    assert pva.check_skew(C)[0]
    assert not pva.jacobi_residual(C, LS.normal_form(2))


# symmetries and deformations ------------------------------------------

def test_symmetry_systems():
    sys0 = pva.symmetry_residual(VectorFieldAnsatz(2, 0, 3))
    assert sys0.solution_dim() == 1
    sys1 = pva.symmetry_residual(VectorFieldAnsatz(3, 1, 2))
    sols = sys1.homogeneous_solutions()
    # X^D(u) is free (1 and u at weight <= 2), X^1 and X^2 are constants
    assert sys1.solution_dim() == 2 + 2
    allowed = {(0, ((0, 0, 1),), ()), (1, ((0, 0, 1),), ()), (0, ((1, 0, 0),), ()), (0, ((0, 1, 0),), ())}
    for sol in sols:
        assert {k for k, v in sol.items() if v} <= allowed
    sys2 = pva.symmetry_residual(VectorFieldAnsatz(2, 2, 2))
    assert sys2.solution_dim() == 0
    assert sols


def test_hamiltonian_field():
    B = LS.normal_form(2)
    h = u(2, None, 3)
    assert pva.hamiltonian_field(h, B) == u(2).scale(6) * u(2, (0, 1))


def test_deformation_d1_template():
    sys_ = pva.deformation_residual(DeformationAnsatz.template_d1(2, 3))
    free = {k for sol in sys_.homogeneous_solutions() for k, v in sol.items() if v}
    assert all(k[1] == 2 or k[2] == 0 for k in free)
    assert {("A", 2, k) for k in range(4)} <= free
    assert sys_.solution_dim() == 4 + 1


def test_deformation_d2_template_equations():
    ans = DeformationAnsatz.template_d2(2, 2)
    sols = pva.deformation_residual(ans).homogeneous_solutions()
    assert len(sols) == 3
    for sol in sols:
        for k in range(3):
            assert sol.get(("B", 1, 1, k), 0) == 0
            assert sol.get(("B", 2, 2, k), 0) == 0
            assert sol.get(("B", 1, 2, k), 0) + sol.get(("B", 2, 1, k), 0) == 0


def test_deformation_empty():
    assert pva.deformation_residual(DeformationAnsatz(2, 1)).is_empty()


def test_deformation_residual_rejects_non_skew():
    ans = DeformationAnsatz.template_d2(2, 1, skew=False)
    with pytest.raises(ValueError):
        pva.deformation_residual(ans)


def test_miura_examples():
    B = LS.normal_form(2)
    assert not pva.miura_first_order(SP.const(2, 5), B)
    for k in range(4):
        F = u(2, None, k + 1)
        expect = LS.lam(2, 2).mul_poly(u(2, None, k).scale(2 * (k + 1)))
        if k:
            expect = expect + LS.monomial(2, (0, 0), (u(2, None, k - 1).scale((k + 1) * k)) * u(2, (0, 1)))
        assert pva.miura_first_order(F, B) == expect
    with pytest.raises(ValueError):
        pva.miura_first_order(u(), LS.monomial(2, (0, 1), u()))


def test_miura_reproduces_degree_two_family():
    B = LS.normal_form(2)
    for k in range(4):
        Bu = u(2, None, k) if k else SP.const(2)
        G = u(2, None, k + 1).scale(Fraction(1, k + 1))
        F = -(G * u(2, (1, 0)))
        fam = pva.skew_normalize(2, {("B", 1, 2): Bu, ("B", 2, 1): -Bu}).fixed
        assert pva.miura_first_order(F, B) == fam


# cohomology counts ---------------------------------------------------

@pytest.mark.parametrize("D", [1, 2, 3, 4])
def test_solve_h1(D):
    got = [pva.solve_h1(D, d) for d in range(3)]
    assert got == [1, D - 1, 0] == [poisson_dim(D, 1, d) for d in range(3)]


def test_solve_h2_d2():
    assert pva.solve_h2(2, 1) == 1
    assert pva.solve_h2(2, 2) == 0
    assert pva.solve_h2(2, 0) == poisson_dim(2, 2, 0)


@pytest.mark.slow
def test_solve_h2_higher():
    assert pva.solve_h2(2, 3) == poisson_dim(2, 2, 3) == 2
    assert pva.solve_h2(3, 1) == poisson_dim(3, 2, 1) == 2


def test_general_background_h1():
    for c in ([1, 1], [Fraction(2, 3), -5], [3, 0]):
        assert [pva.solve_h1(2, d, background=c) for d in range(3)] == [1, 1, 0]


def test_solver_errors():
    with pytest.raises(ValueError):
        pva.solve_h1(2, 1, M=0)
    with pytest.raises(ValueError):
        pva.solve_h2(0, 1)


def test_truncation_unstable_is_reported(monkeypatch):
    calls = iter([1, 2])
    monkeypatch.setattr(pva, "_h1_at", lambda *a: next(calls))
    with pytest.raises(TruncationUnstable):
        pva.solve_h1(2, 1)


# lambda series -------------------------------------------------------

def test_lambda_series_basics():
    l1, l2 = LS.lam(2, 1), LS.lam(2, 2)
    assert (l1 + l2 - l1) == l2
    assert LS.flat([0, 1]) == LS.normal_form(2)
    assert l2.is_constant() and not l2.mul_poly(u()).is_constant()
    with pytest.raises(ValueError):
        LS(2, 1, {(1,): SP.const(2)})
    with pytest.raises(ValueError):
        LS.monomial(2, (0, 0), SP.theta(2))
    with pytest.raises(ValueError):
        l1 + LS.lam(3, 1)
