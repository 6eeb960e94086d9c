"""Exact scalar layer: Bernoulli data, unit-interval polynomials, symbolic values."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dedezeta.exact import (
    Poly,
    SymbolicValue,
    bernoulli_number,
    bernoulli_poly,
    eval_periodic_bernoulli,
    floor_frac,
    format_rational,
    frac_part,
    parse_rational,
    residue_mod,
)

F = Fraction


def test_bernoulli_numbers():
    # B_0..B_12, the standard table
    expected = [
        F(1),
        F(-1, 2),
        F(1, 6),
        F(0),
        F(-1, 30),
        F(0),
        F(1, 42),
        F(0),
        F(-1, 30),
        F(0),
        F(5, 66),
        F(0),
        F(-691, 2730),
    ]
    assert [bernoulli_number(q) for q in range(13)] == expected


def test_bernoulli_poly_low_orders():
    assert bernoulli_poly(0).coeffs == (F(1),)
    assert bernoulli_poly(1).coeffs == (F(-1, 2), F(1))
    assert bernoulli_poly(2).coeffs == (F(1, 6), F(-1), F(1))
    assert bernoulli_poly(3).coeffs == (F(0), F(1, 2), F(-3, 2), F(1))


def test_bernoulli_poly_difference_property():
    # B_q(x+1) - B_q(x) = q x^(q-1), checked at rational sample points
    for q in range(1, 8):
        p = bernoulli_poly(q)
        for x in (F(0), F(1, 3), F(2, 5), F(7, 4), F(-3, 2)):
            assert p(x + 1) - p(x) == q * x ** (q - 1)


def test_poly_compose_affine():
    p = Poly([F(1), F(2), F(3)])  # 1 + 2t + 3t^2
    q = p.compose_affine(F(1, 2), F(5))  # t -> 1/2 + 5t
    for t in (F(0), F(1, 7), F(-2, 3)):
        assert q(t) == p(F(1, 2) + 5 * t)


def test_poly_calculus_roundtrip():
    p = Poly([F(4), F(0), F(-6), F(1, 3)])
    assert p.antiderivative().derivative().coeffs == p.coeffs
    # integral over [0,1] equals antiderivative difference
    a = p.antiderivative()
    assert p.integrate(F(0), F(1)) == a(F(1)) - a(F(0))


def test_frac_part_and_floor():
    assert frac_part(F(7, 3)) == F(1, 3)
    assert frac_part(F(-1, 4)) == F(3, 4)
    assert floor_frac(F(-1, 4)) == -1
    assert residue_mod(F(9, 4), 1) == F(1, 4)


def test_eval_periodic_bernoulli_boundary_modes():
    # b_1 at integers: right limit -1/2, left limit 1/2, principal value 0
    assert eval_periodic_bernoulli(1, 0, "right") == F(-1, 2)
    assert eval_periodic_bernoulli(1, 0, "left") == F(1, 2)
    assert eval_periodic_bernoulli(1, 0, "principal") == 0
    # continuous for q >= 2, all modes agree
    for mode in ("right", "left", "principal"):
        assert eval_periodic_bernoulli(2, 0, mode) == F(1, 6)
    assert eval_periodic_bernoulli(1, F(1, 3)) == F(1, 3) - F(1, 2)


def test_symbolic_value_canonicalization():
    v = SymbolicValue(F(3), 2, 2)  # i^2 folds to -1
    assert v.coeff == F(-3) and v.iota_power == 0
    z = SymbolicValue(F(0), 5, 3)
    assert z.pi_power == 0 and z.iota_power == 0 and z.is_zero()


def test_symbolic_value_algebra():
    a = SymbolicValue(F(1, 2), 1, 1)
    b = SymbolicValue(F(1, 3), 1, 1)
    assert (a + b).coeff == F(5, 6)
    with pytest.raises(ValueError):
        a + SymbolicValue(F(1), 0, 0)
    # adding zero never raises, whatever the signatures
    assert (a + SymbolicValue(F(0))).coeff == F(1, 2)
    prod = a * SymbolicValue(F(2), 1, 1)  # i*i = -1
    assert prod.coeff == F(-1) and prod.pi_power == 2 and prod.iota_power == 0
    assert a.numeric() == complex(0.0, 0.5 * 3.141592653589793)


def test_symbolic_value_real_guard():
    with pytest.raises(ValueError):
        SymbolicValue(F(1), 0, 1).real()


@given(st.integers(min_value=-10**9, max_value=10**9), st.integers(min_value=1, max_value=10**6))
def test_rational_roundtrip(p, q):
    x = F(p, q)
    assert parse_rational(format_rational(x)) == x
