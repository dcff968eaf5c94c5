import math
import random
from fractions import Fraction

import pytest

from sonlap import (
    GENERAL,
    SO3,
    SO4,
    NPoly,
    Partition,
    TracePoly,
    eval_tracepoly,
    general_at,
    random_son,
    rotation_from_angles,
    so3_basis_change,
    so3_from_coordinates,
    so3_pm_in_p1,
    so4_pm_in_p1p2,
)

F = Fraction
N = NPoly.var()


def p1pow(j, mode=SO3, coeff=1):
    return TracePoly.monomial(Partition((1,) * j), coeff, mode)


# ---------------------------------------------------------------------------
# NPoly


def test_npoly_arithmetic_exact():
    a = N * N - 3 * N + 1
    b = N + F(1, 2)
    assert (a + b) - b == a
    assert a * b == b * a
    assert (a * b).subs(5) == a.subs(5) * b.subs(5)
    assert a.subs(3) == F(1)


def test_npoly_substitution_is_rational():
    poly = NPoly({2: F(1, 3), 0: F(-1, 7)})
    assert poly.subs(4) == F(16, 3) - F(1, 7)


def test_npoly_division_by_variable():
    assert (N * N + 2 * N).div_by_var() == N + 2
    with pytest.raises(ValueError):
        (N + 1).div_by_var()


def test_npoly_no_stored_zeros():
    assert not (N - N)
    assert (N - N).coeffs == {}


# ---------------------------------------------------------------------------
# multiplication


def test_mul_concatenates_partitions():
    p2 = TracePoly.power_sum(2)
    p1 = TracePoly.power_sum(1)
    assert p2 * p1 == TracePoly.monomial(Partition.of(2, 1), 1)


def test_mul_ring_identity():
    p1 = TracePoly.power_sum(1)
    assert (p1 + 1) * (p1 - 1) == TracePoly.monomial(Partition.of(1, 1), 1) - 1


def test_p0_is_constant_n():
    p0 = TracePoly.power_sum(0)
    p2 = TracePoly.power_sum(2)
    assert p0 * p2 == TracePoly.monomial(Partition.of(2), N)


def test_mode_mismatch_raises():
    with pytest.raises(ValueError):
        TracePoly.power_sum(1, SO3) * TracePoly.power_sum(1, SO4)


def random_tracepoly(rng, mode=GENERAL, max_degree=3):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        degree = rng.randint(0, max_degree)
        parts = []
        while degree:
            part = rng.randint(1, degree)
            parts.append(part)
            degree -= part
        coeff = F(rng.randint(-6, 6), rng.randint(1, 4))
        if mode.symbolic:
            coeff = NPoly({rng.randint(0, 2): coeff})
        terms[Partition.of(*parts)] = terms.get(Partition.of(*parts), 0) + coeff
    return TracePoly(terms, mode)


def test_ring_axioms_on_random_triples():
    rng = random.Random(20331)
    for _ in range(40):
        a = random_tracepoly(rng)
        b = random_tracepoly(rng)
        c = random_tracepoly(rng)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_product_degree_adds():
    rng = random.Random(7)
    for _ in range(20):
        a = random_tracepoly(rng)
        b = random_tracepoly(rng)
        if a.is_zero or b.is_zero:
            continue
        for part in (a * b).terms:
            assert part.degree <= a.degree + b.degree


# ---------------------------------------------------------------------------
# substitution


def test_substitute_affine_coefficient():
    poly = TracePoly.monomial(Partition.of(1), N - 1)
    assert poly.substitute_n(3) == TracePoly.monomial(Partition.of(1), 2, general_at(3))


def test_substitute_power_sum_laplacian_row():
    # -(N-1) p_2 - p_(1,1) + p_0 at N=4
    expr = (
        TracePoly.monomial(Partition.of(2), -(N - 1))
        + TracePoly.monomial(Partition.of(1, 1), -1)
        + TracePoly.power_sum(0)
    )
    at4 = expr.substitute_n(4)
    expected = (
        TracePoly.monomial(Partition.of(2), -3, general_at(4))
        + TracePoly.monomial(Partition.of(1, 1), -1, general_at(4))
        + TracePoly.constant(4, general_at(4))
    )
    assert at4 == expected


def test_substitute_constant_n():
    assert TracePoly.power_sum(0).substitute_n(3) == TracePoly.constant(3, general_at(3))


def test_substitute_twice_rejected():
    with pytest.raises(ValueError):
        TracePoly.power_sum(1).substitute_n(3).substitute_n(3)


# ---------------------------------------------------------------------------
# SO(3) reduction


def test_so3_p2_in_p1():
    assert so3_pm_in_p1(2) == p1pow(2) - p1pow(1, coeff=2)


def test_so3_p0_is_three():
    assert so3_pm_in_p1(0) == TracePoly.constant(3, SO3)


def test_so3_p3_hand_expansion():
    # 1 + 2 T_3((p-1)/2) with T_3(x) = 4x^3 - 3x expands to p^3 - 3p^2 + 3
    expected = p1pow(3) - 3 * p1pow(2) + 3 * TracePoly.constant(1, SO3)
    assert so3_pm_in_p1(3) == expected


@pytest.mark.parametrize("m", range(13))
def test_so3_pm_matches_angle_trace(m):
    rng = random.Random(991 + m)
    poly = so3_pm_in_p1(m)
    for _ in range(200):
        angle = rng.uniform(0, 2 * math.pi)
        rotation = rotation_from_angles(3, angle)
        got = eval_tracepoly(poly, rotation, exact=True)
        want = 1 + 2 * math.cos(m * angle)
        assert abs(got - want) <= 1e-12


# ---------------------------------------------------------------------------
# SO(4) reduction


def test_so4_p3_closed_form():
    p1 = TracePoly.power_sum(1, SO4)
    p2 = TracePoly.power_sum(2, SO4)
    assert so4_pm_in_p1p2(3) == p1 ** 3 * F(-1, 2) + p1 * p2 * F(3, 2) + p1 * 3


def test_so4_p1_trivial():
    assert so4_pm_in_p1p2(1) == TracePoly.power_sum(1, SO4)


def test_so4_p4_one_recurrence_step():
    p1 = TracePoly.power_sum(1, SO4)
    p2 = TracePoly.power_sum(2, SO4)
    expected = p1 ** 4 * F(-1, 2) + p1 ** 2 * p2 + 4 * p1 ** 2 + p2 ** 2 * F(1, 2) - 4
    assert so4_pm_in_p1p2(4) == expected


@pytest.mark.parametrize("m", range(13))
def test_so4_pm_matches_matrix_power_trace(m):
    import numpy as np

    poly = so4_pm_in_p1p2(m)
    for i in range(100):
        sample = random_son(4, 5000 + 100 * m + i)
        got = eval_tracepoly(poly, sample)
        want = float(np.trace(np.linalg.matrix_power(sample.matrix, m)))
        assert abs(got - want) <= 1e-10


# ---------------------------------------------------------------------------
# reduce


def test_reduce_so3_product():
    poly = TracePoly.monomial(Partition.of(2, 1), 1).substitute_n(3)
    assert poly.reduce(SO3) == p1pow(3) - 2 * p1pow(2)


def test_reduce_so4_single_trace():
    poly = TracePoly.power_sum(3).substitute_n(4)
    assert poly.reduce(SO4) == so4_pm_in_p1p2(3)


@pytest.mark.parametrize("mode", [SO3, SO4])
def test_reduce_constant(mode):
    poly = TracePoly.constant(5, general_at(mode.n))
    assert poly.reduce(mode) == TracePoly.constant(5, mode)


def test_reduce_idempotent():
    poly = TracePoly.monomial(Partition.of(3, 2), 1).substitute_n(4).reduce(SO4)
    assert poly.reduce(SO4) == poly


def test_reduce_commutes_with_mul():
    rng = random.Random(446)
    for mode in (SO3, SO4):
        for _ in range(15):
            a = random_tracepoly(rng, mode=general_at(mode.n))
            b = random_tracepoly(rng, mode=general_at(mode.n))
            assert (a * b).reduce(mode) == a.reduce(mode) * b.reduce(mode)


def test_reduce_symbolic_rejected():
    with pytest.raises(ValueError):
        TracePoly.power_sum(2).reduce(SO3)


def test_reduce_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        TracePoly.power_sum(2).substitute_n(5).reduce(SO3)


# ---------------------------------------------------------------------------
# SO(3) basis change


def test_basis_change_known_eigenvector():
    # -(1/3) p_0 + p_1 + p_2 has power-basis coordinates (-1/3, -1, 1)
    chi2 = (
        TracePoly.constant(-1, general_at(3))
        + TracePoly.monomial(Partition.of(1), 1, general_at(3))
        + TracePoly.monomial(Partition.of(2), 1, general_at(3))
    )
    assert so3_basis_change(chi2, "bprime") == [F(-1, 3), F(-1), F(1)]
    # numeric cross-check of the two forms at a generic angle
    rotation = rotation_from_angles(3, math.pi / 5)
    reduced = chi2.reduce(SO3)
    assert abs(eval_tracepoly(chi2, rotation) - eval_tracepoly(reduced, rotation)) < 1e-12


def test_basis_change_p1_squared_in_traces():
    coords = so3_basis_change(p1pow(2), "btrace", k=2)
    assert coords == [F(0), F(2), F(1)]


def test_basis_change_p0_unit():
    p0 = TracePoly.constant(3, general_at(3))
    assert so3_basis_change(p0, "bprime", k=2) == [F(1), F(0), F(0)]
    assert so3_basis_change(p0, "btrace", k=2) == [F(1), F(0), F(0)]


def test_basis_change_round_trips():
    rng = random.Random(85)
    for _ in range(25):
        poly = random_tracepoly(rng, mode=general_at(3), max_degree=5).reduce(SO3)
        k = max(poly.degree, 1)
        for basis in ("bprime", "btrace"):
            coords = so3_basis_change(poly, basis, k=k)
            assert so3_from_coordinates(coords, basis) == poly


def test_basis_change_degree_overflow():
    with pytest.raises(ValueError):
        so3_basis_change(p1pow(4), "bprime", k=3)


# ---------------------------------------------------------------------------
# serialization


def test_json_round_trip_symbolic():
    poly = TracePoly.monomial(Partition.of(2, 1), N - 1) + TracePoly.power_sum(0)
    rebuilt = TracePoly.from_json_obj(poly.to_json_obj(), GENERAL)
    assert rebuilt == poly


def test_json_round_trip_numeric():
    poly = (p1pow(2) - 2 * p1pow(1) + TracePoly.constant(F(1, 3), SO3))
    rebuilt = TracePoly.from_json_obj(poly.to_json_obj(), SO3)
    assert rebuilt == poly


def test_pretty_pads_partitions():
    poly = TracePoly.monomial(Partition.of(2, 1), -3)
    assert "p_(2,1,0)" in poly.pretty()
    assert TracePoly.zero().pretty() == "0"
