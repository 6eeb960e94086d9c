"""Descriptors for 1-periodic functions and their jump/Fourier data.

A :class:`PeriodicFn` names one of the supported period-1 functions:

==========  =======================================  ==============
kind        function on ``x``                        token
==========  =======================================  ==============
bernoulli   ``B_q({x})`` (Bernoulli polynomial)      ``b:q``
powfrac     ``{x}**q``                               ``pow:q``
shiftfrac   ``{x} - a``                              ``shift:p/q``
polyfrac    ``c0 + c1*{x} + ... + cd*{x}**d``        ``poly:c0,...``
sin         ``sin(2 pi x)``                          ``sin``
cos         ``cos(2 pi x)``                          ``cos``
expe        ``exp(2 pi i x)``                        ``e``
==========  =======================================  ==============

Polynomial kinds evaluate exactly over rationals; trig kinds evaluate in
floating point (``expe`` returns complex). At integer arguments the
polynomial kinds have one-sided limits selected by ``boundary_mode``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact import (
    Poly,
    Rational,
    SymbolicValue,
    bernoulli_number,
    bernoulli_poly,
    format_rational,
    frac_part,
    parse_rational,
)

_POLY_KINDS = ("bernoulli", "powfrac", "shiftfrac", "polyfrac")
_TRIG_KINDS = ("sin", "cos", "expe")


@dataclass(frozen=True)
class PeriodicFn:
    kind: str
    q: int = 0
    shift: Fraction = Fraction(0)
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in _POLY_KINDS + _TRIG_KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "bernoulli" and self.q < 0:
            raise ValueError("bernoulli index must be nonnegative")
        if self.kind == "powfrac" and self.q < 1:
            raise ValueError("power must be at least 1")
        if self.kind == "shiftfrac" and not (0 < self.shift < 1):
            raise ValueError("shift must lie strictly between 0 and 1")
        if self.kind == "polyfrac" and not self.coeffs:
            raise ValueError("polyfrac needs at least one coefficient")

    @property
    def is_polynomial(self) -> bool:
        return self.kind in _POLY_KINDS

    def unit_poly(self) -> Poly:
        """The exact polynomial ``F`` with ``f(x) = F({x})``."""
        if self.kind == "bernoulli":
            return bernoulli_poly(self.q)
        if self.kind == "powfrac":
            return Poly([0] * self.q + [1])
        if self.kind == "shiftfrac":
            return Poly([-self.shift, 1])
        if self.kind == "polyfrac":
            return Poly(self.coeffs)
        raise ValueError(f"{self.kind} is not polynomial on the unit interval")

    def __repr__(self) -> str:
        return f"PeriodicFn({descriptor_token(self)!r})"


def bernoulli_fn(q: int) -> PeriodicFn:
    return PeriodicFn("bernoulli", q=q)


def power_fn(q: int) -> PeriodicFn:
    return PeriodicFn("powfrac", q=q)


def shifted_fn(a: Rational) -> PeriodicFn:
    return PeriodicFn("shiftfrac", shift=Fraction(a))


def poly_fn(coeffs) -> PeriodicFn:
    return PeriodicFn("polyfrac", coeffs=tuple(Fraction(c) for c in coeffs))


def sin_fn() -> PeriodicFn:
    return PeriodicFn("sin")


def cos_fn() -> PeriodicFn:
    return PeriodicFn("cos")


def exp_fn() -> PeriodicFn:
    return PeriodicFn("expe")


def parse_descriptor(token: str) -> PeriodicFn:
    """Parse a descriptor token (see module table) into a :class:`PeriodicFn`."""
    token = token.strip()
    if token == "sin":
        return sin_fn()
    if token == "cos":
        return cos_fn()
    if token == "e":
        return exp_fn()
    head, sep, tail = token.partition(":")
    if not sep or not tail:
        raise ValueError(f"malformed descriptor {token!r}")
    if head == "b":
        return bernoulli_fn(int(tail))
    if head == "pow":
        return power_fn(int(tail))
    if head == "shift":
        return shifted_fn(parse_rational(tail))
    if head == "poly":
        return poly_fn(parse_rational(c) for c in tail.split(","))
    raise ValueError(f"malformed descriptor {token!r}")


def descriptor_token(f: PeriodicFn) -> str:
    """Inverse of :func:`parse_descriptor`; round-trips exactly."""
    if f.kind == "bernoulli":
        return f"b:{f.q}"
    if f.kind == "powfrac":
        return f"pow:{f.q}"
    if f.kind == "shiftfrac":
        return f"shift:{format_rational(f.shift)}"
    if f.kind == "polyfrac":
        return "poly:" + ",".join(format_rational(c) for c in f.coeffs)
    return {"sin": "sin", "cos": "cos", "expe": "e"}[f.kind]


def eval_periodic(
    f: PeriodicFn, x: Rational, boundary_mode: str = "principal"
) -> Union[Fraction, float, complex]:
    """Evaluate ``f`` at ``x``.

    Polynomial kinds take exact rational ``x`` and return a Fraction; at
    integers, ``boundary_mode`` picks ``right`` (``F(0)``), ``left``
    (``F(1)``) or ``principal`` (their average). Trig kinds reduce the
    argument exactly mod 1 first and return float (complex for ``expe``).
    """
    if f.is_polynomial:
        F = f.unit_poly()
        x = Fraction(x)
        if x.denominator == 1:
            if boundary_mode == "right":
                return F(0)
            if boundary_mode == "left":
                return F(1)
            if boundary_mode == "principal":
                return (F(0) + F(1)) / 2
            raise ValueError(f"unknown boundary_mode {boundary_mode!r}")
        return F(frac_part(x))
    t = 2.0 * math.pi * float(frac_part(Fraction(x)))
    if f.kind == "sin":
        return math.sin(t)
    if f.kind == "cos":
        return math.cos(t)
    return cmath.exp(1j * t)


@dataclass(frozen=True)
class JumpData:
    """One-sided limits of a period-1 function at the integers.

    ``at_zero`` is the limit from above at 0, ``at_one`` the limit from
    below at 1, and ``delta = at_one - at_zero`` the downward jump the
    function takes when crossing an integer from the left.
    """

    at_zero: Fraction
    at_one: Fraction
    delta: Fraction


def jump(f: PeriodicFn) -> JumpData:
    """Exact one-sided limit data of ``f`` at integer arguments."""
    if f.is_polynomial:
        F = f.unit_poly()
        z, o = F(0), F(1)
    elif f.kind == "sin":
        z = o = Fraction(0)
    else:
        # cos(0) = 1 and exp(0) = 1; both are continuous across integers.
        z = o = Fraction(1)
    return JumpData(at_zero=z, at_one=o, delta=o - z)


def jump_product(fvec) -> Fraction:
    """Jump of the product: ``prod f_j(1-) - prod f_j(0+)``, exact."""
    hi = Fraction(1)
    lo = Fraction(1)
    for f in fvec:
        d = jump(f)
        hi *= d.at_one
        lo *= d.at_zero
    return hi - lo


def jump_ratio_single(f: PeriodicFn, r: int) -> Fraction:
    """Ratio of the product jump to the single jump for ``r+1`` copies of ``f``.

    When ``f`` jumps at integers this is the geometric power sum
    ``sum_{k=0}^{r} f(1-)**k * f(0+)**(r-k)``. When ``f`` is continuous at
    integers the removable limit ``(r+1) * f(0)**(r+1)`` is returned;
    callers using it as a defect term apply the limit's minus sign
    themselves.
    """
    if r < 0:
        raise ValueError("need r >= 0")
    d = jump(f)
    if d.delta != 0:
        return sum(
            (d.at_one**k * d.at_zero ** (r - k) for k in range(r + 1)),
            Fraction(0),
        )
    return (r + 1) * d.at_zero ** (r + 1)


def fourier_coeff(f: PeriodicFn, n: int) -> SymbolicValue:
    """Exact Fourier coefficient ``c_n(f)`` against ``exp(2 pi i n x)``.

    Covered kinds: ``bernoulli`` (any order), ``shiftfrac``, ``powfrac``
    with ``q = 1``, and the trig kinds. Higher powers and ``polyfrac``
    have multi-term expansions; rewrite them with
    :func:`power_to_bernoulli` first.
    """
    if f.kind == "bernoulli":
        if f.q == 0:
            return SymbolicValue(Fraction(1 if n == 0 else 0))
        if n == 0:
            return SymbolicValue(Fraction(0))
        # c_n(B_q({x})) = -q! / (2 pi i n)**q
        return SymbolicValue(
            Fraction(-math.factorial(f.q), (2 * n) ** f.q), -f.q, -f.q
        )
    if f.kind == "shiftfrac":
        if n == 0:
            return SymbolicValue(Fraction(1, 2) - f.shift)
        return SymbolicValue(Fraction(-1, 2 * n), -1, -1)
    if f.kind == "powfrac":
        if f.q == 1:
            if n == 0:
                return SymbolicValue(Fraction(1, 2))
            return SymbolicValue(Fraction(-1, 2 * n), -1, -1)
        raise ValueError(
            "powfrac with q >= 2 expands to several Bernoulli terms; "
            "use power_to_bernoulli and take coefficients of b:s"
        )
    if f.kind == "polyfrac":
        raise ValueError(
            "polyfrac expands to several Bernoulli terms; "
            "use power_to_bernoulli on each power and combine"
        )
    if f.kind == "expe":
        return SymbolicValue(Fraction(1 if n == 1 else 0))
    if f.kind == "cos":
        return SymbolicValue(Fraction(1, 2) if abs(n) == 1 else Fraction(0))
    # sin = (e(x) - e(-x)) / (2i)
    if n == 1:
        return SymbolicValue(Fraction(1, 2), 0, 3)
    if n == -1:
        return SymbolicValue(Fraction(-1, 2), 0, 3)
    return SymbolicValue(Fraction(0))


def power_to_bernoulli(q: int) -> list[tuple[int, Fraction]]:
    """Expand ``{x}**q`` in periodic Bernoulli functions.

    Returns ``[(s, c_s), ...]`` with
    ``{x}**q = sum_s c_s * B_s({x})`` away from integers, via
    ``x**q = (1/(q+1)) * sum_s comb(q+1, s) * B_s(x)``.
    """
    if q < 0:
        raise ValueError("power must be nonnegative")
    return [
        (s, Fraction(math.comb(q + 1, s), q + 1))
        for s in range(q + 1)
    ]
