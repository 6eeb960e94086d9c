"""Lattice zeta values, convergence identities, and the r=2 reciprocity rhs."""

import math
from fractions import Fraction

import pytest

from dedezeta.dedekind import NuVector, r1_closed_form, rademacher_rhs
from dedezeta.exact import SymbolicValue
from dedezeta.lattice import hj_generators
from dedezeta.zeta import (
    TruncationPlan,
    bernoulli_recip_general,
    bernoulli_recip_r2,
    bound_check,
    combined_y_identity,
    conical_zeta_trunc,
    coord_zero_zeta_closed,
    default_plan,
    multiple_zeta_trunc,
    multiple_zeta_trunc_info,
    q_sum,
    q_weighted_total,
    ray_zeta_exact,
    riemann_zeta_even_exact,
    riemann_zeta_numeric,
)

F = Fraction


def test_truncation_plan():
    plan = TruncationPlan()
    assert (plan.N, plan.pairing, plan.compensated) == (2000, "symmetric", True)
    assert plan.to_json() == {"N": 2000, "pairing": "symmetric", "compensated": True}
    with pytest.raises(ValueError):
        TruncationPlan(N=0)
    with pytest.raises(ValueError):
        TruncationPlan(pairing="middle")
    assert default_plan(1).N == 10_000
    assert default_plan(2).N == 2000
    assert default_plan(3).N == 60


def test_riemann_zeta_even_exact():
    z2 = riemann_zeta_even_exact(2)
    assert (z2.coeff, z2.pi_power) == (F(1, 6), 2)
    z4 = riemann_zeta_even_exact(4)
    assert (z4.coeff, z4.pi_power) == (F(1, 90), 4)
    assert riemann_zeta_even_exact(12).coeff == F(691, 638512875)
    with pytest.raises(ValueError):
        riemann_zeta_even_exact(3)


def test_riemann_zeta_numeric():
    assert abs(riemann_zeta_numeric(3) - 1.2020569031595943) < 1.5e-10
    assert abs(riemann_zeta_numeric(2) - math.pi**2 / 6) < 1.5e-10
    with pytest.raises(ValueError):
        riemann_zeta_numeric(1.05)  # needs astronomically many terms


def test_ray_zeta_exact():
    r = ray_zeta_exact((1, 1), (1, -1))  # sum over c>=1 of 1/(c * -c)
    assert isinstance(r, SymbolicValue)
    assert (r.coeff, r.pi_power) == (F(-1, 6), 2)
    odd = ray_zeta_exact((1, 2), (1, 1))  # one-sided zeta(3)
    assert isinstance(odd, float)
    assert abs(odd - 1.2020569031595943) < 1e-9
    with pytest.raises(ValueError):
        ray_zeta_exact((1, 1), (2, 4))  # not primitive
    with pytest.raises(ValueError):
        ray_zeta_exact((1,), (1, 1))


def test_conical_zeta_trunc_ray_and_cone():
    plan = TruncationPlan(N=4000)
    val, pts = conical_zeta_trunc((2, 2, 0), [(1, 1, 0)], "relative_interior", plan)
    assert abs(val - math.pi**4 / 90) < 1e-3  # one-sided zeta(4)
    assert pts == 4000
    val2, pts2 = conical_zeta_trunc(
        (2, 2, 0), [(1, 0, 0), (0, 1, 0)], "relative_interior", TruncationPlan(N=400)
    )
    # product cone splits: zeta(2)^2 over strictly positive pairs
    assert abs(val2 - (math.pi**2 / 6) ** 2) < 2e-2
    with pytest.raises(ValueError):
        conical_zeta_trunc((2, 2, 0), [(1, 1, 0), (2, 2, 0)], "relative_interior", plan)


def test_multiple_zeta_full_line_value():
    # the k-masked sum over the rank-1 lattice of (2,3): exponent 2 on the
    # free slot gives zeta(2)/2^2 * 2 = pi^2/12; truncation tail is O(1/N)
    N = 6000
    plan = TruncationPlan(N=N)
    val, pts = multiple_zeta_trunc_info((2, 3), (1, 2), k=0, variant="full", plan=plan)
    assert abs(val - math.pi**2 / 12) < 1.2 * 3 / (2 * N)
    assert pts == 2 * (N // 3)
    assert multiple_zeta_trunc((2, 3), (1, 2), k=0, variant="full", plan=plan) == val


def test_full_splits_into_y_plus_z():
    plan = TruncationPlan(N=300)
    nu, q, k = (2, 3, 5), (1, 2, 2), 0
    full, _ = multiple_zeta_trunc_info(nu, q, k=k, variant="full", plan=plan)
    y, _ = multiple_zeta_trunc_info(nu, q, k=k, variant="Y", plan=plan)
    z, zpts = multiple_zeta_trunc_info(nu, q, k=k, variant="Z", plan=plan)
    assert abs(full - (y + z)) < 1e-12
    assert zpts == 120


def test_z_variant_matches_plain_subvector_bitwise():
    plan = TruncationPlan(N=300)
    nu, q = (2, 3, 5), (1, 2, 2)
    for k in range(3):
        z = multiple_zeta_trunc_info(nu, q, k=k, variant="Z", plan=plan)
        sub_nu = tuple(v for j, v in enumerate(nu) if j != k)
        sub_q = tuple(x for j, x in enumerate(q) if j != k)
        plain = multiple_zeta_trunc_info(sub_nu, sub_q, k=None, variant="plain", plan=plan)
        assert z == plain


def test_z_variant_r1_is_empty():
    assert multiple_zeta_trunc_info((2, 3), (1, 2), k=0, variant="Z") == (0.0, 0)


def test_y_variant_guard():
    with pytest.raises(ValueError):
        multiple_zeta_trunc_info((2, 3, 5), (1, 1, 2), k=2, variant="Y")


def test_odd_active_weight_needs_pairing():
    plan = TruncationPlan(N=100, pairing="none")
    with pytest.raises(ValueError):
        multiple_zeta_trunc_info((2, 3, 5), (1, 2, 2), k=1, variant="full", plan=plan)


def test_plain_odd_weight_vanishes_exactly():
    val, _ = multiple_zeta_trunc_info((2, 3, 5), (1, 1, 1), k=None, variant="plain")
    assert val == 0.0


def test_combined_y_identity():
    lhs, rhs = combined_y_identity((2, 3, 5), (1, 2, 2), TruncationPlan(N=300))
    assert abs(lhs - 13.422085486668232) < 1e-8
    assert abs(lhs - rhs) <= 1e-9 * abs(lhs)


def test_coord_zero_zeta_closed():
    sv = coord_zero_zeta_closed((2, 3, 5), (1, 2, 1), 1)
    assert (sv.coeff, sv.pi_power) == (F(-1, 30), 2)
    # numeric cross-check against the truncated coordinate-zero sum
    z, _ = multiple_zeta_trunc_info((2, 3, 5), (1, 2, 1), k=1, variant="Z", plan=TruncationPlan(N=40000))
    assert abs(z - sv.real()) < 1e-4
    # odd active weight: exactly zero
    assert coord_zero_zeta_closed((2, 3, 5), (1, 2, 2), 0).is_zero()


def test_q_sum_strategies():
    plan = TruncationPlan(N=500)
    a = q_sum((2, 3, 5), (2, 2, 2), 0, plan=plan, strategy="exact_inner")
    g = q_sum((2, 3, 5), (2, 2, 2), 0, plan=plan, strategy="grid")
    assert abs(a - g) < 5e-3  # grid truncation converges O(1/N)
    # a weight-1 slot makes the standalone cone pieces divergent; the exact
    # evaluator refuses and auto falls back to the grid
    with pytest.raises(ValueError):
        q_sum((2, 3, 5), (1, 1, 3), 0, plan=TruncationPlan(N=200), strategy="exact_inner")
    auto = q_sum((2, 3, 5), (1, 1, 3), 0, plan=TruncationPlan(N=200), strategy="auto")
    grid = q_sum((2, 3, 5), (1, 1, 3), 0, plan=TruncationPlan(N=200), strategy="grid")
    assert auto == grid


def test_q_weighted_total_all_ones_collapses():
    assert q_weighted_total((2, 3, 5), (1, 1, 1)) == 0.0
    assert q_weighted_total((1, 2, 3), (1, 1, 1)) == 0.0


def test_bernoulli_recip_r2_symbolic_branch():
    report = bernoulli_recip_r2((2, 3, 5), (1, 1, 1))
    assert report.lhs == F(-13, 90)
    assert report.rhs == rademacher_rhs(NuVector(2, 3, 5))
    assert report.residual == 0
    assert isinstance(report.residual, Fraction)


def test_bernoulli_recip_r2_odd_vanishing():
    report = bernoulli_recip_r2((2, 3, 5), (1, 2, 1))
    assert report.lhs == 0
    assert report.rhs == 0
    assert report.residual == 0


def test_bernoulli_recip_r2_truncated_branch():
    plan = TruncationPlan(N=2000)
    report = bernoulli_recip_r2((2, 3, 5), (1, 2, 2), plan)
    assert report.lhs == F(1, 144)
    assert abs(report.residual) < 1e-6
    report = bernoulli_recip_r2((2, 3, 5), (1, 1, 3), plan)
    assert report.lhs == F(-1, 81)
    assert abs(report.residual) < 1e-6


def test_bernoulli_recip_r2_grid_strategy_agrees():
    plan = TruncationPlan(N=2000)
    auto = bernoulli_recip_r2((2, 3, 5), (1, 2, 2), plan, strategy="auto")
    grid = bernoulli_recip_r2((2, 3, 5), (1, 2, 2), plan, strategy="grid")
    assert auto.lhs == grid.lhs
    assert abs(float(auto.rhs) - float(grid.rhs)) < 1e-4


def test_bernoulli_recip_general_r1_closed():
    for ent in [(2, 3), (7, 4), (7, 30)]:
        nu = NuVector(ent)
        for q in range(1, 9):
            report = bernoulli_recip_general(nu, (1, q))
            assert report.method == "fourier"
            assert report.residual == 0
            assert report.rhs == r1_closed_form(nu, q)


def test_bernoulli_recip_general_r2_lattice():
    plan = TruncationPlan(N=600)
    report = bernoulli_recip_general((2, 3, 5), (1, 1, 1), plan)
    assert report.lhs == F(-13, 90)
    assert abs(report.residual) < 2e-3
    report = bernoulli_recip_general((2, 3, 5), (1, 2, 2), plan)
    assert report.lhs == F(1, 144)
    assert abs(report.residual) < 2e-3


def test_bound_check():
    plan = TruncationPlan(N=120)
    for k in range(3):
        assert bound_check((2, 3, 5), (2, 3, 2), k, plan)
    with pytest.raises(ValueError):
        bound_check((2, 3, 5), (1, 2, 2), 0, plan)  # needs all exponents >= 2


def test_subdivision_covers_orthant_exactly():
    # every strictly positive lattice point of the twisted plane lies in
    # exactly one subcone interior or on exactly one interior ray
    B = 40
    for l in range(3):
        fan = hj_generators((2, 3, 5), l)
        w = fan.ambient_normal
        direct = set()
        for x in range(1, B + 1):
            for y in range(1, B + 1):
                num = w[0] * x + w[1] * y
                if num % w[2]:
                    continue
                z = -num // w[2]
                if 1 <= z <= B:
                    direct.add((x, y, z))
        union: set = set()
        overlaps = 0
        for g1, g2 in fan.cones:
            for a in range(1, B + 1):
                for b in range(1, B + 1):
                    p = tuple(a * c1 + b * c2 for c1, c2 in zip(g1, g2))
                    if max(p) > B:
                        break
                    if p in union:
                        overlaps += 1
                    union.add(p)
        for g in fan.interior_generators:
            for c in range(1, B + 1):
                p = tuple(c * gi for gi in g)
                if max(p) > B:
                    break
                if p in union:
                    overlaps += 1
                union.add(p)
        assert direct == union
        assert overlaps == 0
