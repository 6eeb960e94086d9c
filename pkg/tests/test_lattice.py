"""Orthogonal lattices, cone generators, and the unimodular subdivision."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dedezeta.dedekind import NuVector
from dedezeta.lattice import (
    ConeFan,
    LatticeConstraint,
    canonical_sign_vectors,
    cone_lattice_index,
    enumerate_orthogonal,
    epsilon_shift,
    fundamental_parallelogram_points,
    hj_generators,
    hj_sequence,
    r2_cone_generators,
    verify_unimodular,
)


def test_canonical_sign_vectors():
    assert canonical_sign_vectors() == ((1, -1, -1), (1, -1, 1), (1, 1, -1))


def test_enumerate_orthogonal_examples():
    got = enumerate_orthogonal((2, 3, 5), 1, LatticeConstraint.all_nonzero())
    assert got == [(-1, -1, 1), (1, 1, -1)]
    got = enumerate_orthogonal((2, 3), 3, LatticeConstraint.all_nonzero())
    assert got == [(-3, 2), (3, -2)]
    # the zero vector is never returned
    assert (0, 0) not in enumerate_orthogonal((2, 3), 12, LatticeConstraint.unrestricted())


def test_enumerate_orthogonal_constraints():
    pts = enumerate_orthogonal((2, 3, 5), 6, LatticeConstraint.coord_zero(1))
    assert pts and all(p[1] == 0 for p in pts)
    assert all(2 * a + 3 * b + 5 * c == 0 for a, b, c in pts)
    # coord_zero(k) points are the multiples of the single kernel line
    assert (5, 0, -2) in pts and (-5, 0, 2) in pts
    every = enumerate_orthogonal((2, 3, 5), 6, LatticeConstraint.unrestricted())
    nz = enumerate_orthogonal((2, 3, 5), 6, LatticeConstraint.all_nonzero())
    zs = [p for p in every if 0 in p]
    assert sorted(nz + zs) == every  # lex order is the output order


def test_r2_cone_generators():
    assert r2_cone_generators((2, 3, 5)) == ((0, 5, 3), (5, 0, 2), (3, 2, 0))
    assert r2_cone_generators((1, 2, 3)) == ((0, 3, 2), (3, 0, 1), (2, 1, 0))
    v0, v1, v2 = r2_cone_generators((2, 3, 5))
    assert 2 * v1[0] - 3 * v1[1] - 5 * v1[2] == 0  # on the (1,-1,-1) plane


def test_hj_sequence_examples():
    seq = hj_sequence(5, 2)
    assert seq.ks == (3, 2)
    assert seq.m == (5, 2, 1, 0)
    assert seq.mbar == (0, 1, 3, 5)
    assert (2 * 3) % 5 == 1
    assert hj_sequence(2, 1).ks == (2,)
    assert hj_sequence(1, 0).m == (1, 0)
    assert hj_sequence(1, 0).mbar == (0, 1)
    assert hj_sequence(5, 2).steps == 2


def test_hj_sequence_validates():
    with pytest.raises(ValueError):
        hj_sequence(6, 2)  # shared factor
    with pytest.raises(ValueError):
        hj_sequence(5, 7)  # m1 >= m0
    with pytest.raises(ValueError):
        hj_sequence(0, 0)


@given(st.integers(min_value=2, max_value=600), st.data())
def test_hj_sequence_invariants(m0, data):
    units = [x for x in range(1, m0) if math.gcd(x, m0) == 1]
    m1 = data.draw(st.sampled_from(units))
    seq = hj_sequence(m0, m1)
    m, mbar, ks = seq.m, seq.mbar, seq.ks
    assert all(k >= 2 for k in ks)
    # both recursions share the multipliers
    for i in range(1, len(m) - 1):
        assert m[i + 1] == ks[i - 1] * m[i] - m[i - 1]
        assert mbar[i + 1] == ks[i - 1] * mbar[i] - mbar[i - 1]
    # determinant identity at every consecutive pair
    for i in range(len(m) - 1):
        assert m[i] * mbar[i + 1] - m[i + 1] * mbar[i] == m0
    assert list(m) == sorted(m, reverse=True)
    assert list(mbar) == sorted(mbar)
    assert (m1 * mbar[len(m) - 2]) % m0 == 1


def test_epsilon_shift_values():
    assert [epsilon_shift((2, 3, 5), l) for l in range(3)] == [1, 2, 1]
    assert epsilon_shift((1, 2, 3), 0) == 0  # modulus one needs no shift


def test_hj_generators_frozen_fans():
    fan = hj_generators((2, 3, 5), 0)
    assert fan.ambient_normal == (2, -3, -5)
    assert fan.generators == ((5, 0, 2), (4, 1, 1), (3, 2, 0))
    assert fan.multiplicity == 2
    assert fan.interior_generators == ((4, 1, 1),)
    assert fan.cones == [((5, 0, 2), (4, 1, 1)), ((4, 1, 1), (3, 2, 0))]

    fan = hj_generators((2, 3, 5), 1)
    assert fan.ambient_normal == (2, -3, 5)
    assert fan.generators == ((3, 2, 0), (2, 3, 1), (1, 4, 2), (0, 5, 3))
    assert fan.multiplicity == 3

    fan = hj_generators((2, 3, 5), 2)
    assert fan.generators == ((0, 5, 3), (1, 1, 1), (5, 0, 2))
    assert fan.multiplicity == 5

    fan = hj_generators((1, 2, 3), 0)
    assert fan.generators == ((3, 0, 1), (2, 1, 0))  # already unimodular
    assert fan.multiplicity == 1


def test_generators_lie_on_plane_with_positive_interior():
    for ent in [(2, 3, 5), (3, 4, 5), (5, 7, 9), (7, 11, 13)]:
        for l in range(3):
            fan = hj_generators(ent, l)
            w = fan.ambient_normal
            for g in fan.generators:
                assert sum(wi * gi for wi, gi in zip(w, g)) == 0
                assert all(c >= 0 for c in g)
            for g in fan.interior_generators:
                assert all(c > 0 for c in g)


def test_cone_lattice_index_and_parallelogram():
    fan = hj_generators((2, 3, 5), 2)
    for i in range(len(fan.generators) - 1):
        assert cone_lattice_index(fan, i) == 1
    # the undivided cone has index = multiplicity, witnessed by extra
    # lattice points in its fundamental parallelogram
    merged = ConeFan(
        ambient_normal=(2, -3, -5),
        generators=((5, 0, 2), (3, 2, 0)),
        multiplicity=2,
        axis=0,
        epsilon=1,
    )
    assert cone_lattice_index(merged, 0) == 2
    pts = fundamental_parallelogram_points((5, 0, 2), (3, 2, 0), (2, -3, -5))
    assert pts == [(0, 0, 0), (4, 1, 1)]
    assert fundamental_parallelogram_points((5, 0, 2), (4, 1, 1), (2, -3, -5)) == [(0, 0, 0)]


def test_verify_unimodular():
    for l in range(3):
        fan = hj_generators((2, 3, 5), l)
        assert verify_unimodular(fan, 15)
    merged = ConeFan(
        ambient_normal=(2, -3, -5),
        generators=((5, 0, 2), (3, 2, 0)),
        multiplicity=2,
        axis=0,
        epsilon=1,
    )
    assert not verify_unimodular(merged, 15)


def test_hj_generators_accepts_nu_vector():
    a = hj_generators(NuVector(2, 3, 5), 0)
    b = hj_generators((2, 3, 5), 0)
    assert a.generators == b.generators


def test_fan_sequence_matches_multiplicity():
    fan = hj_generators((3, 4, 5), 1)
    assert fan.sequence is not None
    assert fan.sequence.m0 == fan.multiplicity
    assert len(fan.generators) == fan.sequence.steps + 2
