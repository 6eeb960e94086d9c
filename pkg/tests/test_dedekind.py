"""Dedekind sums, reciprocity closed forms, and the exact integral route.

The brute-force oracles here are local re-implementations from the
definition (plain loops over sample points), kept independent of the
library's own summation code so the two routes stay separate.
"""

import math
import random
from fractions import Fraction
from itertools import combinations

import pytest

from dedezeta.dedekind import (
    NuVector,
    cos_closed_form,
    dedekind_sum,
    exp_closed_form,
    franel_integral,
    integral_recip_rhs,
    power_basis_recip_check,
    r1_closed_form,
    rademacher_rhs,
    reciprocity_lhs,
    shifted_rhs,
    sin_closed_form,
)
from dedezeta.exact import eval_periodic_bernoulli
from dedezeta.periodic import (
    bernoulli_fn,
    eval_periodic,
    jump,
    parse_descriptor,
    poly_fn,
    power_fn,
    shifted_fn,
)

F = Fraction


def brute_sum(fvec, ent, k):
    """Direct evaluation of S from the definition; exact for polynomial kinds."""
    total = None
    for i in range(1, ent[k]):
        term = None
        for j, f in enumerate(fvec):
            if j == k:
                continue
            v = eval_periodic(f, F(i * ent[j], ent[k]))
            term = v if term is None else term * v
        if term is None:
            term = F(1)
        total = term if total is None else total + term
    if total is None:
        return F(0)
    return total


def brute_recip(fvec, ent):
    total = F(0) if all(f.is_polynomial for f in fvec) else 0.0
    for k, f in enumerate(fvec):
        total += jump(f).delta * brute_sum(fvec, ent, k)
    return total


# ---------------------------------------------------------------------------
# NuVector


def test_nu_vector_validation():
    assert NuVector(2, 3, 5).entries == (2, 3, 5)
    assert NuVector([2, 3, 5]).entries == (2, 3, 5)
    assert NuVector(2, 3, 5).subvector(1).entries == (2, 5)
    with pytest.raises(ValueError):
        NuVector(2, 4, 5)  # shared factor
    with pytest.raises(ValueError):
        NuVector(2, 2, 3)  # repeated entry
    with pytest.raises(ValueError):
        NuVector(0, 1)
    with pytest.raises(ValueError):
        NuVector()


# ---------------------------------------------------------------------------
# The sum itself


def test_dedekind_sum_r0_convention():
    assert dedekind_sum((bernoulli_fn(1),), NuVector(7), 0) == 6


def test_dedekind_sum_matches_brute():
    cases = [
        ((2, 3, 5), ("b:1", "b:1", "b:1")),
        ((2, 3, 5), ("b:2", "b:1", "b:3")),
        ((3, 4), ("pow:2", "shift:1/5")),
        ((1, 2, 3, 5), ("b:1", "poly:1,2", "b:2", "pow:1")),
    ]
    for ent, tokens in cases:
        fvec = tuple(parse_descriptor(t) for t in tokens)
        nu = NuVector(ent)
        for k in range(len(ent)):
            assert dedekind_sum(fvec, nu, k) == brute_sum(fvec, ent, k)


def test_dedekind_sum_fast_path_agrees_with_generic():
    # the all-b:1 triple has a dedicated integer kernel; the tuple input
    # bypasses it, so comparing the two exercises both routes
    fvec = (bernoulli_fn(1),) * 3
    for ent in [(2, 3, 5), (3, 4, 7), (5, 8, 9), (1, 11, 13)]:
        for k in range(3):
            fast = dedekind_sum(fvec, NuVector(ent), k)
            slow = dedekind_sum(fvec, ent, k)
            assert fast == slow


def test_dedekind_sum_boundary_mode():
    # non-coprime raw tuples hit sample points at integers; the three
    # boundary modes disagree exactly there (i*2/4 = 1/2, 1, 3/2)
    fvec = (bernoulli_fn(1), bernoulli_fn(1))
    assert dedekind_sum(fvec, (2, 4), 1, boundary_mode="principal") == 0
    assert dedekind_sum(fvec, (2, 4), 1, boundary_mode="right") == F(-1, 2)
    assert dedekind_sum(fvec, (2, 4), 1, boundary_mode="left") == F(1, 2)


# ---------------------------------------------------------------------------
# Classical reciprocity


def test_rademacher_frozen_value():
    nu = NuVector(2, 3, 5)
    fvec = (bernoulli_fn(1),) * 3
    assert reciprocity_lhs(fvec, nu) == F(-13, 90)
    assert rademacher_rhs(nu) == F(-13, 90)


def test_rademacher_small_sweep():
    fvec = (bernoulli_fn(1),) * 3
    for ent in combinations(range(1, 13), 3):
        if any(math.gcd(a, b) != 1 for a, b in combinations(ent, 2)):
            continue
        nu = NuVector(ent)
        assert reciprocity_lhs(fvec, nu) == rademacher_rhs(nu)
        assert brute_recip(fvec, ent) == rademacher_rhs(nu)


def test_shifted_rhs_frozen_and_random():
    nu = NuVector(2, 3, 5)
    fvec = tuple(shifted_fn(a) for a in (F(1, 5), F(2, 5), F(3, 5)))
    assert reciprocity_lhs(fvec, nu) == F(-17, 180)
    assert shifted_rhs(nu, (F(1, 5), F(2, 5), F(3, 5))) == F(-17, 180)

    rng = random.Random(11)
    shifts = [F(i, 5) for i in range(1, 5)]
    for _ in range(20):
        ent = []
        while len(ent) < 3:
            v = rng.randrange(1, 21)
            if all(math.gcd(v, w) == 1 and v != w for w in ent):
                ent.append(v)
        nu = NuVector(ent)
        avec = tuple(rng.choice(shifts) for _ in range(3))
        fvec = tuple(shifted_fn(a) for a in avec)
        assert reciprocity_lhs(fvec, nu) == shifted_rhs(nu, avec)


def test_shifted_rhs_validates():
    with pytest.raises(ValueError):
        shifted_rhs(NuVector(2, 3, 5), (F(1, 5), F(2, 5)))
    with pytest.raises(ValueError):
        shifted_rhs(NuVector(2, 3, 5), (F(1, 5), F(2, 5), F(6, 5)))


def test_r1_closed_form():
    assert r1_closed_form(NuVector(7, 4), 6) == F(-2801, 117649)
    for ent in [(2, 3), (3, 5), (7, 4), (5, 9), (1, 6)]:
        nu = NuVector(ent)
        for q in range(1, 9):
            fvec = (bernoulli_fn(1), bernoulli_fn(q))
            got = r1_closed_form(nu, q)
            assert reciprocity_lhs(fvec, nu) == got
            if q % 2 == 1:
                assert got == 0


# ---------------------------------------------------------------------------
# Trig closed forms


def test_exp_closed_form_values():
    nu = NuVector(2, 3, 5)
    assert exp_closed_form(nu, 2) == 4  # 5 divides 2 + 3
    assert exp_closed_form(nu, 0) == 1  # 2 divides 3 + 5
    assert exp_closed_form(nu, 1) == -1  # 3 does not divide 7


def test_trig_closed_forms_vs_brute():
    tuples = [(2, 3), (4, 7), (1, 2, 3), (2, 3, 5), (3, 4, 5), (1, 2, 3, 5)]
    for ent in tuples:
        nu = NuVector(ent)
        r = len(ent) - 1
        for k in range(len(ent)):
            b_exp = complex(brute_sum([parse_descriptor("e")] * len(ent), ent, k))
            assert abs(b_exp - exp_closed_form(nu, k)) < 1e-9
            b_cos = brute_sum([parse_descriptor("cos")] * len(ent), ent, k)
            assert abs(b_cos - float(cos_closed_form(nu, k))) < 1e-9
            b_sin = brute_sum([parse_descriptor("sin")] * len(ent), ent, k)
            sv = sin_closed_form(nu, k)
            assert sv.is_real()
            assert abs(b_sin - sv.real()) < 1e-9
            if r % 2 == 1:
                assert sv.is_zero()


# ---------------------------------------------------------------------------
# Exact integral route


def test_franel_frozen_values():
    assert franel_integral((1, 1), (2, 3)) == F(1, 72)
    assert franel_integral((2,), (3,)) == 0  # one periodic Bernoulli factor averages out
    assert franel_integral((1, 1, 2), (1, 2, 3)) == F(17, 25920)
    assert franel_integral((2, 2), (2, 3)) == F(1, 6480)


def test_franel_gcd_square_form():
    for n in range(2, 16):
        for m in range(1, n):
            g = math.gcd(m, n)
            assert franel_integral((1, 1), (m, n)) == F(g * g, 12 * m * n)


def test_franel_odd_weight_vanishes():
    # odd total saw count: the integrand is odd under x -> 1-x
    assert franel_integral((1, 1, 1), (1, 2, 3)) == 0
    assert franel_integral((1, 1, 1), (2, 3, 5)) == 0


def test_franel_validates():
    with pytest.raises(ValueError):
        franel_integral((1, 1), (2, 2))  # repeated entry
    with pytest.raises(ValueError):
        franel_integral((1,), (2, 3))  # length mismatch
    with pytest.raises(ValueError):
        franel_integral((-1,), (2,))


def test_integral_recip_exact():
    cases = [
        ((2, 3, 5), ("b:2", "b:1", "b:3")),
        ((3, 4), ("poly:0,1/2,1", "b:2")),
        ((2, 5, 9), ("shift:1/5", "pow:2", "b:1")),
        ((1, 2, 3, 5), ("b:1", "b:1", "b:2", "pow:3")),
    ]
    for ent, tokens in cases:
        fvec = tuple(parse_descriptor(t) for t in tokens)
        nu = NuVector(ent)
        lhs = reciprocity_lhs(fvec, nu)
        rhs = integral_recip_rhs(fvec, nu)
        assert lhs == rhs
        assert brute_recip(fvec, ent) == rhs


def test_integral_recip_random():
    rng = random.Random(404)
    kinds = ["b", "pow", "shift", "poly"]
    for _ in range(40):
        r = rng.randrange(1, 4)
        ent = []
        while len(ent) < r + 1:
            v = rng.randrange(1, 13)
            if all(math.gcd(v, w) == 1 and v != w for w in ent):
                ent.append(v)
        fvec = []
        for _ in range(r + 1):
            kind = rng.choice(kinds)
            if kind == "b":
                fvec.append(bernoulli_fn(rng.randrange(1, 5)))
            elif kind == "pow":
                fvec.append(power_fn(rng.randrange(1, 5)))
            elif kind == "shift":
                fvec.append(shifted_fn(F(rng.randrange(1, 5), 5)))
            else:
                deg = rng.randrange(1, 5)
                fvec.append(poly_fn([F(rng.randrange(-3, 4)) for _ in range(deg + 1)]))
        nu = NuVector(ent)
        assert reciprocity_lhs(fvec, nu) == integral_recip_rhs(fvec, nu)


def test_power_basis_recip_check():
    report = power_basis_recip_check((2, 1, 3), NuVector(2, 3, 5))
    assert report.lhs == F(3877, 6480)
    assert report.residual == 0
    for qvec in [(1, 1, 1), (2, 2, 2), (3, 1, 2)]:
        assert power_basis_recip_check(qvec, NuVector(3, 4, 7)).residual == 0


def test_b1_sample_values_are_periodic_bernoulli():
    # spot check that the b:1 descriptors and the exact evaluator agree
    for i in range(1, 12):
        x = F(i, 12)
        assert eval_periodic(bernoulli_fn(1), x) == eval_periodic_bernoulli(1, x)
