"""Descriptor grammar, evaluation, jumps, and Fourier coefficients."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dedezeta.periodic import (
    PeriodicFn,
    bernoulli_fn,
    cos_fn,
    descriptor_token,
    eval_periodic,
    exp_fn,
    fourier_coeff,
    jump,
    jump_product,
    jump_ratio_single,
    parse_descriptor,
    poly_fn,
    power_fn,
    power_to_bernoulli,
    shifted_fn,
    sin_fn,
)

F = Fraction


def test_parse_descriptor_kinds():
    assert parse_descriptor("b:2") == bernoulli_fn(2)
    assert parse_descriptor("pow:3") == power_fn(3)
    assert parse_descriptor("shift:1/5") == shifted_fn(F(1, 5))
    assert parse_descriptor("poly:1,0,1/2") == poly_fn([1, 0, F(1, 2)])
    assert parse_descriptor("sin") == sin_fn()
    assert parse_descriptor("cos") == cos_fn()
    assert parse_descriptor("e") == exp_fn()


def test_parse_descriptor_rejects_garbage():
    for bad in ("b", "b:", "frob:2", "shift:0", "shift:1", "poly:", "pow:0"):
        with pytest.raises(ValueError):
            parse_descriptor(bad)


_descriptor = st.one_of(
    st.builds(bernoulli_fn, st.integers(min_value=0, max_value=9)),
    st.builds(power_fn, st.integers(min_value=1, max_value=9)),
    st.builds(
        shifted_fn,
        st.fractions(min_value=F(1, 100), max_value=F(99, 100)).filter(lambda a: 0 < a < 1),
    ),
    st.builds(
        poly_fn,
        st.lists(st.fractions(min_value=-5, max_value=5), min_size=1, max_size=5),
    ),
    st.sampled_from([sin_fn(), cos_fn(), exp_fn()]),
)


@given(_descriptor)
def test_descriptor_roundtrip(f):
    assert parse_descriptor(descriptor_token(f)) == f


@given(
    _descriptor,
    st.fractions(min_value=-10, max_value=10),
    st.integers(min_value=-5, max_value=5),
)
def test_eval_periodic_period_one(f, x, n):
    a = eval_periodic(f, x)
    b = eval_periodic(f, x + n)
    if isinstance(a, Fraction):
        assert a == b
    else:
        assert a == b  # trig kinds reduce mod 1 exactly before any float math


def test_eval_values():
    assert eval_periodic(bernoulli_fn(1), F(1, 4)) == F(-1, 4)
    assert eval_periodic(bernoulli_fn(1), 0) == 0  # principal value
    assert eval_periodic(bernoulli_fn(1), 0, "right") == F(-1, 2)
    assert eval_periodic(power_fn(2), F(5, 3)) == F(4, 9)
    assert eval_periodic(shifted_fn(F(1, 5)), F(7, 10)) == F(1, 2)
    assert eval_periodic(cos_fn(), F(1, 2)) == -1.0
    assert eval_periodic(exp_fn(), F(3, 4)) == pytest.approx(complex(0.0, -1.0))


def test_jump_data():
    d = jump(bernoulli_fn(1))
    assert (d.at_zero, d.at_one, d.delta) == (F(-1, 2), F(1, 2), F(1))
    assert jump(bernoulli_fn(2)).delta == 0
    assert jump(shifted_fn(F(1, 5))).delta == 1
    assert jump(cos_fn()).delta == 0
    assert jump(sin_fn()).at_zero == 0


def test_jump_product():
    # (b_1, b_1, b_1): (1/2)^3 - (-1/2)^3 = 1/4
    assert jump_product([bernoulli_fn(1)] * 3) == F(1, 4)
    # a continuous factor kills the product jump only if it vanishes at 0
    assert jump_product([bernoulli_fn(1), sin_fn()]) == 0
    assert jump_product([bernoulli_fn(1), bernoulli_fn(2)]) == F(1, 6)


def test_jump_ratio_single():
    # jumping factor: geometric power sum of the one-sided limits
    assert jump_ratio_single(bernoulli_fn(1), 2) == F(1, 4) - F(1, 4) + F(1, 4)
    assert jump_ratio_single(shifted_fn(F(1, 3)), 1) == F(2, 3) + F(-1, 3)
    # continuous factor: removable-limit convention
    assert jump_ratio_single(cos_fn(), 2) == 3


def test_fourier_coeff_bernoulli():
    c = fourier_coeff(bernoulli_fn(2), 3)
    # -2! / (2 pi i 3)^2 = 2/36 * pi^-2
    assert c.coeff == F(-2, 36) * -1 and c.pi_power == -2 and c.iota_power == 0
    assert fourier_coeff(bernoulli_fn(2), 0).is_zero()
    assert fourier_coeff(bernoulli_fn(0), 0).coeff == 1


def test_fourier_coeff_trig():
    assert fourier_coeff(exp_fn(), 1).coeff == 1
    assert fourier_coeff(exp_fn(), -1).is_zero()
    assert fourier_coeff(cos_fn(), 1).coeff == F(1, 2)
    s = fourier_coeff(sin_fn(), 1)
    assert s.numeric() == complex(0.0, -0.5)


def test_fourier_coeff_needs_expansion():
    with pytest.raises(ValueError):
        fourier_coeff(power_fn(2), 1)
    with pytest.raises(ValueError):
        fourier_coeff(poly_fn([1, 1]), 1)


def test_power_to_bernoulli():
    for q in range(6):
        terms = power_to_bernoulli(q)
        for x in (F(1, 3), F(2, 7), F(9, 11)):
            lhs = x**q
            rhs = sum(c * eval_periodic(bernoulli_fn(s), x) for s, c in terms)
            assert lhs == rhs


def test_numeric_fourier_partial_sum_matches_function():
    # crude but direct: partial Fourier series of b_2 at a generic point
    f = bernoulli_fn(2)
    x = 0.3
    acc = 0.0
    for n in range(-400, 401):
        if n == 0:
            continue
        c = fourier_coeff(f, n).numeric()
        acc += (c * complex(math.cos(2 * math.pi * n * x), math.sin(2 * math.pi * n * x))).real
    assert acc == pytest.approx(float(eval_periodic(f, F(3, 10))), abs=1e-6)
