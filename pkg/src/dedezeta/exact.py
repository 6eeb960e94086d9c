"""Exact rational building blocks.

Bernoulli numbers and polynomials, fractional-part reduction, a small exact
polynomial type used for piecewise integration, and a symbolic value type
for quantities of the form ``coeff * pi**p * i**e`` with rational ``coeff``.

Everything here is exact: inputs and outputs are ``int`` or
``fractions.Fraction``, never floats, except the explicit ``numeric``
conversions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Rational = Union[int, Fraction]

gcd = math.gcd


def frac_part(x: Rational) -> Fraction:
    """Fractional part ``{x} = x - floor(x)``, always in ``[0, 1)``."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def floor_frac(x: Rational) -> int:
    """``floor(x)`` for exact rational input."""
    x = Fraction(x)
    return x.numerator // x.denominator


def residue_mod(x: Rational, m: Rational) -> Fraction:
    """Reduce ``x`` into ``[0, m)`` modulo a positive modulus ``m``."""
    m = Fraction(m)
    if m <= 0:
        raise ValueError("modulus must be positive")
    return frac_part(Fraction(x) / m) * m


_BERNOULLI_CACHE: list[Fraction] = [Fraction(1)]


def bernoulli_number(q: int) -> Fraction:
    """Bernoulli number ``B_q`` with the convention ``B_1 = -1/2``.

    Computed by the defining recursion
    ``sum_{j=0}^{q} comb(q+1, j) * B_j = 0`` and cached.
    """
    if q < 0:
        raise ValueError("index must be nonnegative")
    while len(_BERNOULLI_CACHE) <= q:
        n = len(_BERNOULLI_CACHE)
        acc = Fraction(0)
        for j in range(n):
            acc += math.comb(n + 1, j) * _BERNOULLI_CACHE[j]
        _BERNOULLI_CACHE.append(-acc / (n + 1))
    return _BERNOULLI_CACHE[q]


class Poly:
    """Polynomial with exact rational coefficients, ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Rational]):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Rational) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(
            [
                (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                for i in range(n)
            ]
        )

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    def scale(self, c: Rational) -> "Poly":
        c = Fraction(c)
        return Poly([c * a for a in self.coeffs])

    def compose_affine(self, a0: Rational, a1: Rational) -> "Poly":
        """Substitute ``x -> a1*x + a0``."""
        inner = Poly([a0, a1])
        acc = Poly([0])
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def derivative(self) -> "Poly":
        if len(self.coeffs) == 1:
            return Poly([0])
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "Poly":
        return Poly([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def integrate(self, a: Rational, b: Rational) -> Fraction:
        F = self.antiderivative()
        return F(b) - F(a)


def bernoulli_poly(q: int) -> Poly:
    """Bernoulli polynomial ``B_q(x)`` as an exact :class:`Poly`."""
    if q < 0:
        raise ValueError("index must be nonnegative")
    return Poly([math.comb(q, m) * bernoulli_number(q - m) for m in range(q + 1)])


def eval_periodic_bernoulli(q: int, x: Rational, boundary_mode: str = "principal") -> Fraction:
    """Evaluate the 1-periodic Bernoulli function ``B_q({x})`` exactly.

    At integer arguments the one-sided limits disagree for ``q = 1``;
    ``boundary_mode`` selects ``right`` (limit from above), ``left``
    (limit from below) or ``principal`` (their average).
    """
    B = bernoulli_poly(q)
    x = Fraction(x)
    if x.denominator == 1:
        if boundary_mode == "right":
            return B(0)
        if boundary_mode == "left":
            return B(1)
        if boundary_mode == "principal":
            return (B(0) + B(1)) / 2
        raise ValueError(f"unknown boundary_mode {boundary_mode!r}")
    return B(frac_part(x))


@dataclass(frozen=True)
class SymbolicValue:
    """Exact value ``coeff * pi**pi_power * i**iota_power``.

    ``coeff`` is rational, ``pi_power`` any integer (Fourier coefficients
    carry negative powers), and ``iota_power`` is canonicalized to 0 or 1 by
    folding ``i**2 = -1`` into the coefficient. A zero coefficient
    canonicalizes both powers to 0.
    """

    coeff: Fraction
    pi_power: int = 0
    iota_power: int = 0

    def __post_init__(self) -> None:
        c = Fraction(self.coeff)
        e = self.iota_power % 4
        if e >= 2:
            c = -c
            e -= 2
        if c == 0:
            object.__setattr__(self, "coeff", Fraction(0))
            object.__setattr__(self, "pi_power", 0)
            object.__setattr__(self, "iota_power", 0)
            return
        object.__setattr__(self, "coeff", c)
        object.__setattr__(self, "iota_power", e)

    def __mul__(self, other: "SymbolicValue | Rational") -> "SymbolicValue":
        if isinstance(other, SymbolicValue):
            return SymbolicValue(
                self.coeff * other.coeff,
                self.pi_power + other.pi_power,
                self.iota_power + other.iota_power,
            )
        return SymbolicValue(self.coeff * Fraction(other), self.pi_power, self.iota_power)

    __rmul__ = __mul__

    def __neg__(self) -> "SymbolicValue":
        return SymbolicValue(-self.coeff, self.pi_power, self.iota_power)

    def __add__(self, other: "SymbolicValue") -> "SymbolicValue":
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if (self.pi_power, self.iota_power) != (other.pi_power, other.iota_power):
            raise ValueError("cannot add symbolic values of different signatures")
        return SymbolicValue(self.coeff + other.coeff, self.pi_power, self.iota_power)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def is_real(self) -> bool:
        return self.iota_power == 0 or self.coeff == 0

    def numeric(self) -> complex:
        v = float(self.coeff) * math.pi ** self.pi_power
        return complex(0.0, v) if self.iota_power == 1 else complex(v, 0.0)

    def real(self) -> float:
        if not self.is_real():
            raise ValueError("value has a nonzero imaginary part")
        return float(self.coeff) * math.pi ** self.pi_power

    def to_json(self) -> dict:
        return {
            "coeff": format_rational(self.coeff),
            "pi_power": self.pi_power,
            "iota_power": self.iota_power,
        }


def format_rational(x: Rational) -> str:
    """Render an exact rational as ``"p"`` or ``"p/q"``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a :class:`Fraction`."""
    return Fraction(s.strip())
