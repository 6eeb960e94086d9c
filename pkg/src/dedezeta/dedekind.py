"""Generalized Dedekind sums and their reciprocity laws.

The central object is the finite sum

    S_f(nu | nu_k) = sum_{i=1}^{nu_k - 1} prod_{j != k} f_j(i * nu_j / nu_k)

for a vector of 1-periodic functions ``f = (f_0, ..., f_r)`` and a
vector ``nu`` of pairwise distinct, pairwise coprime positive integers.
The jump-weighted total ``sum_k delta(f_k) * S_f(nu | nu_k)`` admits
closed forms which this module provides as exact right-hand sides:
the classical three-sawtooth formula, its shifted-sawtooth extension,
the two-entry Bernoulli closed form, the trig-family closed forms, and
an integral form evaluated by exact piecewise polynomial integration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from . import kernels
from .exact import Poly, Rational, SymbolicValue, bernoulli_number, format_rational, frac_part
from .periodic import PeriodicFn, bernoulli_fn, eval_periodic, jump, jump_product

Scalar = Union[Fraction, float, complex]


@dataclass(frozen=True)
class NuVector:
    """Pairwise distinct, pairwise coprime positive integers."""

    entries: tuple[int, ...]

    def __init__(self, *entries):
        if len(entries) == 1 and not isinstance(entries[0], int):
            entries = tuple(entries[0])
        ent = tuple(int(v) for v in entries)
        if not ent:
            raise ValueError("need at least one entry")
        for v in ent:
            if v < 1:
                raise ValueError("entries must be positive")
        for i in range(len(ent)):
            for j in range(i + 1, len(ent)):
                if ent[i] == ent[j]:
                    raise ValueError("entries must be pairwise distinct")
                if math.gcd(ent[i], ent[j]) != 1:
                    raise ValueError("entries must be pairwise coprime")
        object.__setattr__(self, "entries", ent)

    @property
    def r(self) -> int:
        return len(self.entries) - 1

    def subvector(self, k: int) -> "NuVector":
        """Drop entry ``k``."""
        return NuVector(self.entries[:k] + self.entries[k + 1 :])

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __repr__(self) -> str:
        return f"NuVector({','.join(str(v) for v in self.entries)})"


@dataclass
class ReciprocityReport:
    """One verified identity: both sides, their difference, and the method."""

    method: str
    lhs: Scalar
    rhs: Scalar
    residual: Scalar
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        doc = {
            "method": self.method,
            "lhs": _scalar_json(self.lhs),
            "rhs": _scalar_json(self.rhs),
            "residual": _scalar_json(self.residual),
        }
        doc.update(self.extra)
        return doc


def _scalar_json(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, int):
        return format_rational(Fraction(x))
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    return x


def make_report(method: str, lhs: Scalar, rhs: Scalar, **extra) -> ReciprocityReport:
    """Assemble a report; residual stays exact when both sides are exact."""
    if isinstance(lhs, (Fraction, int)) and isinstance(rhs, (Fraction, int)):
        residual: Scalar = Fraction(lhs) - Fraction(rhs)
    elif isinstance(lhs, complex) or isinstance(rhs, complex):
        residual = complex(lhs) - complex(rhs)
    else:
        residual = float(lhs) - float(rhs)
    return ReciprocityReport(method=method, lhs=lhs, rhs=rhs, residual=residual, extra=extra)


def _entries(nu) -> tuple[int, ...]:
    if isinstance(nu, NuVector):
        return nu.entries
    return tuple(int(v) for v in nu)


def dedekind_sum(fvec: Sequence[PeriodicFn], nu, k: int, boundary_mode: str = "principal") -> Scalar:
    """The sum ``sum_{i=1}^{nu_k - 1} prod_{j != k} f_j(i*nu_j/nu_k)``.

    Exact Fraction when every factor is polynomial on the unit interval;
    complex otherwise. ``nu`` may be a :class:`NuVector` or a raw
    sequence of positive integers (raw sequences skip the coprimality
    fast path and may hit integer sample points, where
    ``boundary_mode`` applies). By convention the empty product case
    ``r = 0`` returns ``nu_0 - 1``.
    """
    ent = _entries(nu)
    r = len(ent) - 1
    if len(fvec) != r + 1:
        raise ValueError("function vector length must match entry count")
    if not 0 <= k <= r:
        raise IndexError("index k out of range")
    if r == 0:
        return Fraction(ent[0] - 1)
    m = ent[k]
    if m < 1:
        raise ValueError("modulus entry must be positive")
    if (
        m > 1
        and r == 2
        and isinstance(nu, NuVector)
        and all(f.kind == "bernoulli" and f.q == 1 for f in fvec)
    ):
        others = [ent[j] for j in range(3) if j != k]
        num = kernels.b1_pair_numer(others[0], others[1], m)
        return Fraction(num, 4 * m * m)
    factors = [(j, fvec[j]) for j in range(r + 1) if j != k]
    if all(f.is_polynomial for _, f in factors):
        polys = [(ent[j], f.unit_poly()) for j, f in factors]
        total = Fraction(0)
        for i in range(1, m):
            prod = Fraction(1)
            for njay, F in polys:
                x = Fraction(i * njay, m)
                if x.denominator == 1:
                    if boundary_mode == "right":
                        prod *= F(0)
                    elif boundary_mode == "left":
                        prod *= F(1)
                    else:
                        prod *= (F(0) + F(1)) / 2
                else:
                    prod *= F(frac_part(x))
                if prod == 0:
                    break
            total += prod
        return total
    res: list[complex] = []
    for i in range(1, m):
        prod = complex(1.0)
        for j, f in factors:
            v = eval_periodic(f, Fraction(i * ent[j], m), boundary_mode)
            prod *= complex(v) if not isinstance(v, complex) else v
        res.append(prod)
    return complex(math.fsum(z.real for z in res), math.fsum(z.imag for z in res))


def reciprocity_lhs(fvec: Sequence[PeriodicFn], nu, boundary_mode: str = "principal") -> Scalar:
    """Jump-weighted total ``sum_k delta(f_k) * S_f(nu | nu_k)``."""
    ent = _entries(nu)
    r = len(ent) - 1
    if len(fvec) != r + 1:
        raise ValueError("function vector length must match entry count")
    exact = all(f.is_polynomial for f in fvec)
    total: Scalar = Fraction(0) if exact else complex(0.0)
    for k in range(r + 1):
        d = jump(fvec[k]).delta
        if d == 0:
            continue
        s = dedekind_sum(fvec, nu, k, boundary_mode)
        total = total + d * s if exact else total + complex(d) * complex(s)
    return total


def rademacher_rhs(nu) -> Fraction:
    """Exact right side of the three-sawtooth reciprocity formula."""
    ent = _entries(nu)
    if len(ent) != 3:
        raise ValueError("needs exactly three entries")
    a, b, c = ent
    return Fraction(a * a + b * b + c * c, 12 * a * b * c) - Fraction(1, 4)


def shifted_rhs(nu, avec) -> Fraction:
    """Exact right side for three shifted sawtooths ``{x} - a_j``."""
    ent = _entries(nu)
    if len(ent) != 3:
        raise ValueError("needs exactly three entries")
    a = [Fraction(x) for x in avec]
    if len(a) != 3:
        raise ValueError("needs exactly three shifts")
    for x in a:
        if not 0 < x < 1:
            raise ValueError("shifts must lie strictly between 0 and 1")
    total = Fraction(-1)
    total += a[0] + a[1] + a[2]
    total -= a[0] * a[1] + a[0] * a[2] + a[1] * a[2]
    half = Fraction(1, 2)
    for j in range(3):
        for k in range(j + 1, 3):
            l = 3 - j - k
            total += ent[l] * (half - a[j]) * (half - a[k])
    total += Fraction(ent[0] ** 2 + ent[1] ** 2 + ent[2] ** 2, 12 * ent[0] * ent[1] * ent[2])
    return total


def r1_closed_form(nu, q: int) -> Fraction:
    """Closed form of the two-entry reciprocity with factors ``(b_1, b_q)``.

    Zero for odd ``q`` (principal-value vanishing; the ``q = 1``
    convention is included), and ``B_q * (nu_0**(1-q) - 1)`` for even
    ``q``, where ``nu_0`` is the entry paired with the ``b_1`` factor.
    """
    ent = _entries(nu)
    if len(ent) != 2:
        raise ValueError("needs exactly two entries")
    if q < 1:
        raise ValueError("q must be positive")
    if q % 2 == 1:
        return Fraction(0)
    return bernoulli_number(q) * (Fraction(1, ent[0] ** (q - 1)) - 1)


def exp_closed_form(nu, k: int) -> int:
    """Closed form of ``S`` for all factors ``exp(2 pi i x)``.

    ``nu_k - 1`` when ``nu_k`` divides the sum of the other entries,
    else ``-1`` (full root-of-unity cancellation).
    """
    ent = _entries(nu)
    if not 0 <= k < len(ent):
        raise IndexError("index k out of range")
    other = sum(ent) - ent[k]
    return ent[k] - 1 if other % ent[k] == 0 else -1


def _sign_vectors(r: int):
    out = []
    for mask in range(1 << r):
        out.append(tuple(1 if (mask >> j) & 1 == 0 else -1 for j in range(r)))
    return out


def cos_closed_form(nu, k: int) -> Fraction:
    """Closed form of ``S`` for all factors ``cos(2 pi x)``.

    ``nu_k * beta / 2**r - 1`` where ``beta`` counts the sign vectors
    ``u`` of length ``r`` with ``nu_k`` dividing ``<u, nu-minus-k>``.
    """
    ent = _entries(nu)
    if not 0 <= k < len(ent):
        raise IndexError("index k out of range")
    r = len(ent) - 1
    others = [ent[j] for j in range(len(ent)) if j != k]
    beta = 0
    for u in _sign_vectors(r):
        if sum(uj * vj for uj, vj in zip(u, others)) % ent[k] == 0:
            beta += 1
    return Fraction(ent[k] * beta, 1 << r) - 1


def sin_closed_form(nu, k: int) -> SymbolicValue:
    """Closed form of ``S`` for all factors ``sin(2 pi x)``.

    Exactly zero for odd ``r``; for even ``r`` it is
    ``2 * nu_k * betabar / (2 i)**r`` with ``betabar`` the
    coordinate-product-signed count over antipodal classes of the
    divisibility sign vectors.
    """
    ent = _entries(nu)
    if not 0 <= k < len(ent):
        raise IndexError("index k out of range")
    r = len(ent) - 1
    if r % 2 == 1:
        return SymbolicValue(Fraction(0))
    others = [ent[j] for j in range(len(ent)) if j != k]
    betabar = 0
    for u in _sign_vectors(r):
        if u[0] != 1:
            continue  # one representative per antipodal class
        if sum(uj * vj for uj, vj in zip(u, others)) % ent[k] == 0:
            betabar += math.prod(u)
    return SymbolicValue(Fraction(2 * betabar * ent[k], 1 << r), 0, -r)


def franel_integral(qvec: Sequence[int], nuvec: Sequence[int]) -> Fraction:
    """Exact ``integral_0^1 prod_j B_{q_j}({nu_j x}) dx``.

    Splits [0, 1] at every breakpoint ``i / nu_j``, where each factor is
    a genuine polynomial, and integrates the exact product piecewise.
    """
    q = [int(x) for x in qvec]
    ent = [int(x) for x in nuvec]
    if len(q) != len(ent):
        raise ValueError("exponent and entry lists must have equal length")
    if any(x < 0 for x in q):
        raise ValueError("exponents must be nonnegative")
    if any(v < 1 for v in ent):
        raise ValueError("entries must be positive")
    if len(set(ent)) != len(ent):
        raise ValueError("entries must be distinct")
    fvec = [bernoulli_fn(s) for s in q]
    return _piecewise_product_integral(fvec, ent, None)


def _breakpoints(ent: Sequence[int]) -> list[Fraction]:
    cuts = {Fraction(0), Fraction(1)}
    for v in ent:
        for i in range(1, v):
            cuts.add(Fraction(i, v))
    return sorted(cuts)


def _piecewise_product_integral(fvec, ent, deriv_k) -> Fraction:
    """Exact ``integral_0^1 (g_k)'(x) * prod_{j != k} g_j(x) dx`` with
    ``g_j(x) = F_j(nu_j x - floor(nu_j x))``; ``deriv_k = None`` means a
    plain product integral with no derivative factor."""
    cuts = _breakpoints(ent)
    units = [f.unit_poly() for f in fvec]
    total = Fraction(0)
    for t0, t1 in zip(cuts, cuts[1:]):
        mid = (t0 + t1) / 2
        pieces = []
        for F, v in zip(units, ent):
            shift = (v * mid).numerator // (v * mid).denominator
            pieces.append(F.compose_affine(-shift, v))
        if deriv_k is None:
            prod = Poly([1])
            for G in pieces:
                prod = prod * G
        else:
            prod = pieces[deriv_k].derivative()
            for j, G in enumerate(pieces):
                if j != deriv_k:
                    prod = prod * G
        total += prod.integrate(t0, t1)
    return total


def integral_recip_rhs(fvec: Sequence[PeriodicFn], nu) -> Fraction:
    """Integral form of the reciprocity right side, evaluated exactly.

    ``-jump_product(f) + sum_k nu_k * integral_0^1 f_k'(nu_k x) *
    prod_{j != k} f_j(nu_j x) dx`` where ``f_k'`` is the piecewise
    polynomial derivative (jump contributions live on the left side).
    The ``nu_k`` prefactor is absorbed by differentiating the composed
    piece polynomial. Polynomial-family descriptors only.
    """
    ent = _entries(nu)
    if len(fvec) != len(ent):
        raise ValueError("function vector length must match entry count")
    if not all(f.is_polynomial for f in fvec):
        raise ValueError("integral form requires polynomial-family descriptors")
    total = -jump_product(fvec)
    for k in range(len(ent)):
        total += _piecewise_product_integral(fvec, ent, k)
    return total


@lru_cache(maxsize=None)
def _bernoulli_recip_lhs(ent: tuple[int, ...], svec: tuple[int, ...]) -> Fraction:
    return reciprocity_lhs([bernoulli_fn(s) for s in svec], ent)


def power_basis_recip_check(qvec: Sequence[int], nu) -> ReciprocityReport:
    """Verify the change of basis from ``{x}**q`` factors to Bernoulli factors.

    lhs: reciprocity total for the power descriptors. rhs: the
    binomial-weighted combination of Bernoulli reciprocity totals
    obtained by expanding every factor. Exact; residual must be zero.
    """
    from .periodic import power_fn

    ent = _entries(nu)
    q = [int(x) for x in qvec]
    if len(q) != len(ent):
        raise ValueError("exponent and entry lists must have equal length")
    if any(x < 1 for x in q):
        raise ValueError("exponents must be at least 1")
    lhs = reciprocity_lhs([power_fn(x) for x in q], nu)
    pref = Fraction(1)
    for x in q:
        pref /= x + 1
    rhs = Fraction(0)
    ranges = [range(x + 1) for x in q]
    svec = [0] * len(q)

    def rec(j: int, weight: Fraction):
        nonlocal rhs
        if j == len(q):
            rhs += weight * _bernoulli_recip_lhs(tuple(ent), tuple(svec))
            return
        for s in ranges[j]:
            svec[j] = s
            rec(j + 1, weight * math.comb(q[j] + 1, s))

    rec(0, pref)
    return make_report("power-basis", lhs, rhs)
