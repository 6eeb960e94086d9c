"""Orthogonal-lattice enumeration and planar cone subdivision.

For a vector ``nu`` of pairwise coprime positive integers the integer
solutions of ``<nu, n> = 0`` form a rank-r lattice. This module
enumerates boxes of that lattice under sign constraints, builds the
boundary generators of the planar cones cut out by the three canonical
sign classes (r = 2), subdivides each cone into unimodular subcones via
the ceiling continued-fraction recursion, and verifies unimodularity
both by exact determinant indices and by an exhaustive point probe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _iproduct
from typing import Optional, Sequence

from . import kernels
from .dedekind import NuVector, _entries

Vec3 = tuple[int, int, int]


@dataclass(frozen=True)
class LatticeConstraint:
    """Point filter for orthogonal-lattice enumeration.

    ``mode`` is one of ``unrestricted`` (any nonzero lattice point),
    ``all_nonzero`` (every coordinate nonzero), or ``coord_zero``
    (coordinate ``k`` vanishes).
    """

    mode: str
    k: int = -1

    def __post_init__(self) -> None:
        if self.mode not in ("unrestricted", "all_nonzero", "coord_zero"):
            raise ValueError(f"unknown constraint mode {self.mode!r}")
        if self.mode == "coord_zero" and self.k < 0:
            raise ValueError("coord_zero needs a coordinate index")

    @classmethod
    def unrestricted(cls) -> "LatticeConstraint":
        return cls("unrestricted")

    @classmethod
    def all_nonzero(cls) -> "LatticeConstraint":
        return cls("all_nonzero")

    @classmethod
    def coord_zero(cls, k: int) -> "LatticeConstraint":
        return cls("coord_zero", k)


def canonical_sign_vectors() -> tuple[Vec3, Vec3, Vec3]:
    """The three sign classes (up to antipode) with nonempty solution sets."""
    return ((1, -1, -1), (1, -1, 1), (1, 1, -1))


def enumerate_orthogonal(nu, bound: int, constraint: LatticeConstraint) -> list[tuple[int, ...]]:
    """All ``n`` with ``<nu, n> = 0``, ``0 < max|n_j| <= bound``, filtered.

    The coordinate with the largest entry is eliminated (solved for and
    checked by divisibility); output is fully lexicographically sorted
    and never contains the zero vector.
    """
    ent = _entries(nu)
    if bound < 1:
        raise ValueError("bound must be positive")
    if constraint.mode == "coord_zero" and constraint.k >= len(ent):
        raise ValueError("coord_zero index out of range")
    c = max(range(len(ent)), key=lambda j: ent[j])
    free = [j for j in range(len(ent)) if j != c]
    wc = ent[c]
    out = []
    for combo in _iproduct(range(-bound, bound + 1), repeat=len(free)):
        s = sum(ent[j] * x for j, x in zip(free, combo))
        if s % wc != 0:
            continue
        z = -(s // wc)
        if abs(z) > bound:
            continue
        n = [0] * len(ent)
        for j, x in zip(free, combo):
            n[j] = x
        n[c] = z
        if all(v == 0 for v in n):
            continue
        if constraint.mode == "all_nonzero" and any(v == 0 for v in n):
            continue
        if constraint.mode == "coord_zero" and n[constraint.k] != 0:
            continue
        out.append(tuple(n))
    out.sort()
    return out


def r2_cone_generators(nu) -> tuple[Vec3, Vec3, Vec3]:
    """Boundary rays of the three planar solution cones (r = 2).

    ``v_k`` has a zero in slot k and the two complementary entries
    swapped in; each ``v_k`` is orthogonal to both sign-twisted normals
    ``u_l * nu`` with ``l != k``.
    """
    ent = _entries(nu)
    if len(ent) != 3:
        raise ValueError("needs exactly three entries")
    n0, n1, n2 = ent
    v0 = (0, n2, n1)
    v1 = (n2, 0, n0)
    v2 = (n1, n0, 0)
    for l, u in enumerate(canonical_sign_vectors()):
        w = (u[0] * n0, u[1] * n1, u[2] * n2)
        for k, v in enumerate((v0, v1, v2)):
            if k != l:
                assert w[0] * v[0] + w[1] * v[1] + w[2] * v[2] == 0
    return v0, v1, v2


@dataclass(frozen=True)
class HJSequence:
    """Ceiling continued-fraction data for one cone subdivision.

    ``m`` decreases from ``m0`` to 1 and then 0; the companion ``mbar``
    runs the same recursion from (0, 1) upward to ``m0``. Consecutive
    pairs satisfy the exact determinant identity
    ``m_i * mbar_{i+1} - m_{i+1} * mbar_i = m0``.
    """

    m0: int
    m1: int
    ks: tuple[int, ...]
    m: tuple[int, ...]
    mbar: tuple[int, ...]

    @property
    def steps(self) -> int:
        """Number of interior rays the subdivision inserts."""
        return len(self.m) - 2

    def to_json(self) -> dict:
        return {"m0": self.m0, "m1": self.m1, "ks": list(self.ks), "m": list(self.m), "mbar": list(self.mbar)}


def hj_sequence(m0: int, m1: int) -> HJSequence:
    """Run the ceiling continued-fraction recursion from ``(m0, m1)``.

    ``k_i = ceil(m_{i-1} / m_i)`` and ``m_{i+1} = k_i m_i - m_{i-1}``
    drive ``m`` down to 0; the companion sequence starts at (0, 1) and
    uses the same multipliers. Postconditions checked: the determinant
    identity at every step and ``m1 * mbar_s == 1 (mod m0)``.
    """
    if m0 < 1:
        raise ValueError("m0 must be positive")
    if not 0 <= m1 < m0 and not (m0 == 1 and m1 == 0):
        raise ValueError("need 0 <= m1 < m0")
    if m1 == 0:
        if m0 != 1:
            raise ValueError("m1 = 0 requires m0 = 1")
        return HJSequence(m0=1, m1=0, ks=(), m=(1, 0), mbar=(0, 1))
    if math.gcd(m0, m1) != 1:
        raise ValueError("m0 and m1 must be coprime")
    m = [m0, m1]
    mbar = [0, 1]
    ks = []
    while m[-1] != 0:
        k = -((-m[-2]) // m[-1])  # ceil division
        ks.append(k)
        m.append(k * m[-1] - m[-2])
        mbar.append(k * mbar[-1] - mbar[-2])
    for i in range(len(m) - 1):
        assert m[i] * mbar[i + 1] - m[i + 1] * mbar[i] == m0
    s = len(m) - 2
    assert m[s] == 1 and mbar[-1] == m0
    if m0 > 1:
        assert (m1 * mbar[s]) % m0 == 1
        assert all(k >= 2 for k in ks)
    return HJSequence(m0=m0, m1=m1, ks=tuple(ks), m=tuple(m), mbar=tuple(mbar))


@dataclass(frozen=True)
class ConeFan:
    """A subdivided planar lattice cone.

    ``generators`` runs from one boundary ray to the other; consecutive
    pairs are the subcones. ``ambient_normal`` is the sign-twisted
    normal whose orthogonal plane contains the fan; ``multiplicity`` is
    the index of the undivided cone.
    """

    ambient_normal: Vec3
    generators: tuple[Vec3, ...]
    multiplicity: int
    axis: int
    epsilon: int
    sequence: Optional[HJSequence] = None

    @property
    def cones(self) -> list[tuple[Vec3, Vec3]]:
        return [(self.generators[i], self.generators[i + 1]) for i in range(len(self.generators) - 1)]

    @property
    def interior_generators(self) -> tuple[Vec3, ...]:
        return self.generators[1:-1]

    def to_json(self) -> dict:
        return {
            "ambient_normal": list(self.ambient_normal),
            "generators": [list(g) for g in self.generators],
            "multiplicity": self.multiplicity,
            "axis": self.axis,
            "epsilon": self.epsilon,
            "sequence": self.sequence.to_json() if self.sequence is not None else None,
        }


def epsilon_shift(nu, l: int) -> int:
    """The unique shift ``0 < e < nu_l`` aligning the two boundary rays.

    Defined by requiring every coordinate of ``v_{l+1} * e + v_{l+2}``
    to be divisible by ``nu_l`` (indices mod 3); found with one modular
    inverse on the single nontrivial coordinate congruence and checked
    on all three coordinates. Returns 0 for ``nu_l = 1``.
    """
    ent = _entries(nu)
    if len(ent) != 3:
        raise ValueError("needs exactly three entries")
    if not 0 <= l <= 2:
        raise IndexError("axis out of range")
    mod = ent[l]
    if mod == 1:
        return 0
    gens = r2_cone_generators(nu)
    ga = gens[(l + 1) % 3]
    gb = gens[(l + 2) % 3]
    eps = None
    for j in range(3):
        a = ga[j] % mod
        b = gb[j] % mod
        if math.gcd(a, mod) == 1:
            eps = (-b * pow(a, -1, mod)) % mod
            break
    if eps is None:
        raise ValueError("no invertible coordinate; coprimality invariants broken")
    if eps == 0:
        raise ValueError("degenerate shift; coprimality invariants broken")
    for j in range(3):
        if (ga[j] * eps + gb[j]) % mod != 0:
            raise ValueError("no consistent shift exists; coprimality invariants broken")
    return eps


def hj_generators(nu, l: int) -> ConeFan:
    """Unimodular subdivision of the l-th planar solution cone.

    Generator ``i`` is ``(v_{l+1} * m_i + v_{l+2} * mbar_i) / nu_l``
    along the ceiling continued-fraction data of ``nu_l / epsilon``;
    the list starts and ends at the boundary rays. Every generator is
    checked to be integral, on the plane, and componentwise nonnegative.
    """
    ent = _entries(nu)
    if len(ent) != 3:
        raise ValueError("needs exactly three entries")
    if not 0 <= l <= 2:
        raise IndexError("axis out of range")
    mod = ent[l]
    gens3 = r2_cone_generators(nu)
    ga = gens3[(l + 1) % 3]
    gb = gens3[(l + 2) % 3]
    u = canonical_sign_vectors()[l]
    normal = (u[0] * ent[0], u[1] * ent[1], u[2] * ent[2])
    if mod == 1:
        fan = ConeFan(
            ambient_normal=normal,
            generators=(ga, gb),
            multiplicity=1,
            axis=l,
            epsilon=0,
            sequence=hj_sequence(1, 0),
        )
        return fan
    eps = epsilon_shift(nu, l)
    seq = hj_sequence(mod, eps)
    out = []
    for mi, mbi in zip(seq.m, seq.mbar):
        coords = []
        for j in range(3):
            num = ga[j] * mi + gb[j] * mbi
            if num % mod != 0:
                raise ValueError("non-integral subdivision generator; invariants broken")
            coords.append(num // mod)
        g = tuple(coords)
        if any(c < 0 for c in g):
            raise ValueError("negative generator coordinate; invariants broken")
        if normal[0] * g[0] + normal[1] * g[1] + normal[2] * g[2] != 0:
            raise ValueError("generator off the plane; invariants broken")
        out.append(g)
    assert out[0] == ga and out[-1] == gb
    return ConeFan(
        ambient_normal=normal,
        generators=tuple(out),
        multiplicity=mod,
        axis=l,
        epsilon=eps,
        sequence=seq,
    )


def _projection_axis(w: Sequence[int]) -> int:
    aw = [abs(x) for x in w]
    return max(range(len(aw)), key=lambda j: (aw[j], -j))


def plane_index(w: Sequence[int]) -> int:
    """Index in Z^2 of the plane lattice projected along its largest axis."""
    c = _projection_axis(w)
    rest = math.gcd(*[abs(w[j]) for j in range(3) if j != c]) if len(w) == 3 else 0
    g = math.gcd(rest, abs(w[c]))
    return abs(w[c]) // g


def _proj2(w: Sequence[int], v: Sequence[int]) -> tuple[int, int]:
    c = _projection_axis(w)
    free = [j for j in range(len(v)) if j != c]
    return (v[free[0]], v[free[1]])


def cone_lattice_index(fan: ConeFan, i: int) -> int:
    """Lattice points per fundamental parallelogram of subcone ``i``.

    Computed exactly as ``|det2(g_i, g_{i+1})| / plane_index``; value 1
    means unimodular.
    """
    g1 = _proj2(fan.ambient_normal, fan.generators[i])
    g2 = _proj2(fan.ambient_normal, fan.generators[i + 1])
    d = abs(g1[0] * g2[1] - g1[1] * g2[0])
    idx = plane_index(fan.ambient_normal)
    if d % idx != 0:
        raise ValueError("determinant not a multiple of the plane index")
    return d // idx


def fundamental_parallelogram_points(g1: Vec3, g2: Vec3, normal: Vec3) -> list[Vec3]:
    """Plane-lattice points in the half-open parallelogram of (g1, g2).

    Direct enumeration within the bounding box; intended as the
    independent cross-check of :func:`cone_lattice_index` on small
    cones. Always contains the origin.
    """
    c = _projection_axis(normal)
    free = [j for j in range(3) if j != c]
    wc = normal[c]
    p1 = (g1[free[0]], g1[free[1]])
    p2 = (g2[free[0]], g2[free[1]])
    det = p1[0] * p2[1] - p1[1] * p2[0]
    if det == 0:
        raise ValueError("generators are collinear")
    xs = [0, p1[0], p2[0], p1[0] + p2[0]]
    ys = [0, p1[1], p2[1], p1[1] + p2[1]]
    out = []
    for x in range(min(xs) - 1, max(xs) + 2):
        for y in range(min(ys) - 1, max(ys) + 2):
            s = sum(normal[j] * v for j, v in zip(free, (x, y)))
            if s % wc != 0:
                continue
            z = -(s // wc)
            alpha = Fraction(x * p2[1] - y * p2[0], det)
            beta = Fraction(p1[0] * y - p1[1] * x, det)
            if 0 <= alpha < 1 and 0 <= beta < 1:
                n = [0, 0, 0]
                n[free[0]] = x
                n[free[1]] = y
                n[c] = z
                out.append(tuple(n))
    out.sort()
    return out


def verify_unimodular(fan: ConeFan, probe_bound: int) -> bool:
    """Check a fan both by exact indices and by exhaustive point probe.

    True iff every subcone has determinant index 1 (its fundamental
    parallelogram holds only the origin) and every plane lattice point
    of the closed big cone within the probe box is a nonnegative
    integer combination of exactly one subcone's generators (two on the
    shared interior rays).
    """
    if probe_bound < 1:
        raise ValueError("probe_bound must be positive")
    if len(fan.generators) < 2:
        raise ValueError("fan needs at least two generators")
    for i in range(len(fan.generators) - 1):
        if cone_lattice_index(fan, i) != 1:
            return False
    flat = [c for g in fan.generators for c in g]
    w = fan.ambient_normal
    violations = kernels.fan_probe_r2(w[0], w[1], w[2], flat, probe_bound)
    return violations == 0
