"""The parameter-vector engine: sequences, expansions, operator, recurrence,
finite cutoffs and duality, each checked against an independent brute-force
route before trusting frozen values."""

import random
from fractions import Fraction as F

import pytest

from qscheme import catalog
from qscheme.core import (
    ParameterVector,
    SequenceView,
    UncheckedParameterVector,
    apply_operator,
    dual_normalized_poly,
    duality_check,
    expansion,
    finite_cutoff,
    from_newton_coeffs,
    monic_poly,
    newton_basis,
    normalized_poly,
    perturbed,
    recurrence_check,
    recurrence_coeff0,
    recurrence_coeffs,
    seq_eval,
    to_newton_coeffs,
)
from qscheme.errors import (
    ConstraintViolation,
    HSeparationViolated,
    XSeparationViolated,
    ZeroG,
)
from qscheme.qpolynomial import Poly, poly, product_of_linear
from qscheme.symmetry import GaugeAction, apply_gauge, dualize
from qscheme.verify import random_parameter_vector


def oracle_coeff(pv, n: int, k: int) -> F:
    """Direct product form of the expansion coefficient."""
    total = F(1)
    for j in range(k, n):
        total *= pv.lowering(j + 1) / (pv.eigenvalue(n) - pv.eigenvalue(j))
    return total


def expand_in_monic_basis(pv, p: Poly) -> list[F]:
    """Coordinates of p over u_0..u_deg(p), by leading-term elimination."""
    out = [F(0)] * (p.degree + 1)
    rest = p
    for k in range(p.degree, -1, -1):
        c = rest.coeff(k)
        out[k] = c
        if c != 0:
            rest = rest - monic_poly(pv, k) * c
    assert rest.is_zero
    return out


# -- construction and sequences -------------------------------------------------


def test_3a_instance_frozen_coefficients(pv_3a):
    assert pv_3a.a == (F(-1), F(0), F(1))
    assert pv_3a.b == (F(0), F(2), F(1, 2))
    assert pv_3a.d == (F(1, 4), F(0), F(-1, 2), F(0), F(1, 4))


def test_sequence_values(pv_3a):
    assert pv_3a.node(1) == 2
    assert pv_3a.eigenvalue(2) == 3
    assert pv_3a.lowering(0) == 0
    assert seq_eval(pv_3a, "x", 1) == 2
    assert seq_eval(pv_3a, "h", 2) == 3
    assert seq_eval(pv_3a, "lowering", 1) == F(1, 4)
    view = SequenceView(pv_3a, "g")
    assert view[1] == F(1, 4)
    with pytest.raises(ValueError):
        seq_eval(pv_3a, "x", -1)


def test_lowering_starts_at_zero_for_random_vectors():
    rng = random.Random(7)
    for _ in range(20):
        assert random_parameter_vector(rng).lowering(0) == 0


@pytest.mark.parametrize(
    "field,value",
    [
        ("q", F(1)),
        ("q", F(0)),
        ("sum", None),
        ("d3", None),
        ("d4", None),
        ("a12", None),
        ("dzero", None),
    ],
)
def test_constructor_rejects_broken_constraints(field, value):
    q = F(1, 2)
    good = dict(q=q, a=(F(0), F(1), F(1, 3)), b=(F(0), F(1), F(2)))
    d3 = F(1) * F(1) / q
    d4 = q * F(1, 3) * F(2)
    d = [F(1), F(2), -(F(3) + d3 + d4), d3, d4]
    if field == "q":
        with pytest.raises(ConstraintViolation):
            ParameterVector(q=value, a=good["a"], b=good["b"], d=tuple(d))
        return
    if field == "sum":
        d[0] += 1
    elif field == "d3":
        d[3] += 1
        d[0] -= 1
    elif field == "d4":
        d[4] += 1
        d[0] -= 1
    elif field == "a12":
        good["a"] = (F(1), F(0), F(0))
        d = [F(1), F(1), F(-2), F(0), F(0)]
    elif field == "dzero":
        good["a"] = (F(0), F(1), F(0))
        good["b"] = (F(0), F(0), F(0))
        d = [F(0)] * 5
    with pytest.raises(ConstraintViolation):
        ParameterVector(q=q, a=good["a"], b=good["b"], d=tuple(d))


def test_unchecked_constructor_skips_validation():
    pv = UncheckedParameterVector(
        q=F(1, 2), a=(0, 0, 0), b=(0, 0, 0), d=(1, 0, 0, 0, 0)
    )
    assert pv.d[0] == 1


def test_json_round_trip(pv_3a):
    data = pv_3a.to_json_dict(checked_depth=10)
    assert data["q"] == "1/2"
    assert data["check"]["h_separation_ok"] is True
    assert ParameterVector.from_json_dict(data) == pv_3a


# -- Newton basis and expansion ---------------------------------------------------


def test_newton_basis_empty_product(pv_3a):
    assert newton_basis(pv_3a, 0) == Poly.one()


def test_newton_basis_3a_degree_two(pv_3a):
    # nodes 5/2 and 2: (x - 5/2)(x - 2) = x^2 - 9/2 x + 5
    assert newton_basis(pv_3a, 2) == poly([5, F(-9, 2), 1])


def test_newton_basis_constant_nodes(pv_5b):
    # shifting the node row of the pure-power family gives (x - shift)^k
    shifted = apply_gauge(pv_5b, GaugeAction(sigma=1))
    assert shifted.b == (F(1), F(0), F(0))
    assert newton_basis(shifted, 3) == product_of_linear([1, 1, 1])


def test_expansion_diagonal_is_one(pv_3a):
    exp = expansion(pv_3a, 6)
    assert all(exp.coeff(n, n) == 1 for n in range(7))


def test_expansion_frozen_values(pv_3a, pv_5b):
    assert expansion(pv_3a, 1).coeff(1, 0) == F(1, 4)
    exp = expansion(pv_5b, 2)
    assert exp.coeff(2, 0) == F(1, 2)
    assert exp.coeff(2, 1) == F(-3, 2)


def test_expansion_matches_oracle_randomized():
    rng = random.Random(11)
    for _ in range(8):
        pv = random_parameter_vector(rng, depth=9)
        exp = expansion(pv, 8)
        for n in range(9):
            for k in range(n + 1):
                assert exp.coeff(n, k) == oracle_coeff(pv, n, k)


def test_expansion_raises_on_eigenvalue_collision():
    q = F(1, 2)
    pv = ParameterVector(
        q=q, a=(F(0), F(1), q), b=(F(0), F(1), F(0)), d=(1, 1, -4, 2, 0)
    )
    assert not pv.h_separation_ok(1)
    with pytest.raises(HSeparationViolated):
        expansion(pv, 1)


# -- monic polynomials -----------------------------------------------------------


def test_monic_poly_trivial(pv_3a):
    assert monic_poly(pv_3a, 0) == Poly.one()


def test_monic_poly_5b_degree_two(pv_5b):
    assert monic_poly(pv_5b, 2) == poly([F(1, 2), F(-3, 2), 1])


def test_monic_poly_5a_is_power_basis():
    pv = catalog.instantiate("5a")
    assert recurrence_coeff0(pv) == 0
    for n in range(7):
        assert monic_poly(pv, n) == poly([0] * n + [1])


def test_two_routes_to_monic_polynomials(pv_3a):
    """Newton summation vs running the recurrence from u_0, u_1."""
    vectors = [pv_3a, catalog.instantiate("2b"), catalog.instantiate("4c")]
    rng = random.Random(23)
    vectors += [random_parameter_vector(rng, depth=10) for _ in range(4)]
    for pv in vectors:
        by_rec = [Poly.one(), Poly.x() - Poly.constant(recurrence_coeff0(pv))]
        for n in range(1, 8):
            a_n, b_n = recurrence_coeffs(pv, n)
            nxt = Poly.x() * by_rec[n] - a_n * by_rec[n] - b_n * by_rec[n - 1]
            by_rec.append(nxt)
        for n in range(9):
            assert monic_poly(pv, n) == by_rec[n]


# -- the operator ----------------------------------------------------------------


def test_newton_coeff_round_trip(pv_3a):
    p = poly([F(1, 3), F(-2), F(5), F(1)])
    assert from_newton_coeffs(pv_3a, to_newton_coeffs(pv_3a, p)) == p


def test_operator_on_basis_elements(pv_5b):
    v0 = newton_basis(pv_5b, 0)
    assert apply_operator(pv_5b, v0) == v0 * pv_5b.eigenvalue(0)
    # L v_2 = h_2 v_2 + g_2 v_1 with h_2 = 3, g_2 = -3
    assert pv_5b.eigenvalue(2) == 3 and pv_5b.lowering(2) == -3
    v2, v1 = newton_basis(pv_5b, 2), newton_basis(pv_5b, 1)
    assert apply_operator(pv_5b, v2) == v2 * 3 + v1 * -3


def test_operator_eigen_property(pv_3a):
    for n in range(7):
        u = monic_poly(pv_3a, n)
        assert apply_operator(pv_3a, u) == u * pv_3a.eigenvalue(n)


# -- recurrence ------------------------------------------------------------------


def test_recurrence_first_coefficients(pv_3a):
    assert recurrence_coeff0(pv_3a) == F(9, 4)
    assert recurrence_coeff0(catalog.instantiate("5a")) == 0
    with pytest.raises(ValueError):
        recurrence_coeffs(pv_3a, 0)


def test_recurrence_formula_with_all_lowering_zero():
    # formula level: with the lowering sequence forced to zero, a_n is the
    # node and b_n vanishes (the engine refuses such vectors, so go unchecked)
    pv = UncheckedParameterVector(
        q=F(1, 2), a=(F(0), F(0), F(1)), b=(F(0), F(2), F(0)), d=(0, 0, 0, 0, 0)
    )
    for n in range(1, 6):
        a_n, b_n = recurrence_coeffs(pv, n)
        assert a_n == pv.node(n)
        assert b_n == 0


def test_vanishing_second_factor_is_allowed(pv_5b):
    # the pure shifted-factorial family has b_n = 0 without degenerating
    for n in range(1, 6):
        a_n, b_n = recurrence_coeffs(pv_5b, n)
        assert a_n == F(1, 2) ** n and b_n == 0
        assert recurrence_check(pv_5b, n)


def test_recurrence_check_holds(pv_3a):
    assert recurrence_check(pv_3a, 0)
    assert all(recurrence_check(pv_3a, n) for n in range(1, 9))


def test_recurrence_matches_classical_al_salam_carlitz():
    # the classical closed form: a_n = (1+a) q^n, b_n = -a q^{n-1} (1 - q^n)
    q = F(1, 2)
    for a in (F(-1), F(-2), F(1, 3)):
        pv = catalog.instantiate("4c", {"a": a}, q)
        for n in range(1, 9):
            a_n, b_n = recurrence_coeffs(pv, n)
            assert a_n == (1 + a) * q**n
            assert b_n == -a * q ** (n - 1) * (1 - q**n)


def test_recurrence_check_fails_when_d3_broken(pv_3a):
    d = list(pv_3a.d)
    d[3] += F(1, 3)
    d[0] -= F(1, 3)
    broken = perturbed(pv_3a, d=tuple(d))
    assert any(not recurrence_check(broken, n) for n in range(7))


def test_broken_vector_mixes_lower_orders(pv_3a):
    """With d4 perturbed, x*u_n needs u_j terms below n-1 for some n <= 6."""
    d = list(pv_3a.d)
    d[4] += F(1, 5)
    d[2] -= F(1, 5)
    broken = perturbed(pv_3a, d=tuple(d))
    found = False
    for n in range(1, 7):
        coords = expand_in_monic_basis(broken, Poly.x() * monic_poly(broken, n))
        if any(c != 0 for c in coords[: max(0, n - 1)]):
            found = True
            break
    assert found


# -- finite cutoff ---------------------------------------------------------------


def qracah_like(n_cut: int) -> ParameterVector:
    """Top-level instance with the first parameter product pinned to q**-N."""
    q = F(1, 2)
    return catalog.instantiate(
        "1a", {"a": F(2), "b": q**-n_cut / 2, "c": F(1, 3), "d": F(1, 5)}, q
    )


def test_finite_cutoff_detected():
    pv = qracah_like(3)
    assert finite_cutoff(pv, 10) == 3


def test_finite_cutoff_absent(pv_3a):
    assert finite_cutoff(pv_3a, 50) is None


def test_finite_cutoff_boundary():
    # lowering(1) = 0: d row (-3, 2, 1, 0, 0) at q = 1/2
    pv = ParameterVector(
        q=F(1, 2), a=(F(0), F(1), F(0)), b=(F(0), F(0), F(1)), d=(-3, 2, 1, 0, 0)
    )
    assert pv.lowering(1) == 0
    assert finite_cutoff(pv, 5) == 0


def test_cutoff_zeroes_low_columns():
    """With lowering(N+1) = 0 the coefficients vanish exactly for k <= N < n."""
    n_cut = 3
    pv = qracah_like(n_cut)
    exp = expansion(pv, 7)
    for n in range(8):
        for k in range(n + 1):
            want_zero = k <= n_cut < n
            assert (exp.coeff(n, k) == 0) == want_zero, (n, k)


# -- normalized polynomials and duality --------------------------------------------


def test_normalized_trivial(pv_3a):
    assert normalized_poly(pv_3a, 0) == Poly.one()
    assert dual_normalized_poly(pv_3a, 0) == Poly.one()


def test_normalized_first_order(pv_3a):
    # (h_1 - h_0)/g_1 = 4, so U_1 = 4(x - 9/4)
    assert normalized_poly(pv_3a, 1) == poly([-9, 4])


def test_normalized_requires_nonzero_lowering():
    pv = qracah_like(2)
    with pytest.raises(ZeroG):
        normalized_poly(pv, 4)
    with pytest.raises(ZeroG):
        dual_normalized_poly(pv, 4)


def test_dual_normalized_two_routes():
    """Sum form vs product times the dualized vector's monic polynomial."""
    pv = catalog.instantiate("2a", {"a": F(3), "b": F(1, 4), "c": F(1, 5)})
    dual = dualize(pv, depth=9)
    for m in range(7):
        factor = F(1)
        xm = pv.node(m)
        for j in range(m):
            factor *= (xm - pv.node(j)) / pv.lowering(j + 1)
        via_dual = monic_poly(dual, m) * factor
        assert dual_normalized_poly(pv, m, strict=True) == via_dual


def test_dual_normalized_strict_rejects_node_collision(pv_1a_top):
    # a = 2, q = 1/2 collides node(0) = node(2)
    with pytest.raises(XSeparationViolated):
        dual_normalized_poly(pv_1a_top, 3, strict=True)


def test_duality_trivial(pv_3a):
    assert all(duality_check(pv_3a, 0, m) for m in range(5))


def test_duality_top_instance(pv_1a_top):
    assert all(
        duality_check(pv_1a_top, n, m) for n in range(7) for m in range(7)
    )


def test_duality_parameter_involution():
    pv = catalog.instantiate("2b")
    assert dualize(dualize(pv)) == pv
