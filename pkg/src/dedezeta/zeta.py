"""Lattice zeta sums: truncated evaluators and exact closed forms.

Values here come in three flavors. Exact closed forms (even Riemann
zeta values, single-ray sums, the coordinate-zero sub-lattice sum)
return :class:`~dedezeta.exact.SymbolicValue`. Truncated lattice sums
return floats controlled by a :class:`TruncationPlan`. The cone-based
reciprocity evaluators mix both: everything that can be exact is kept
as a rational for as long as possible, and the genuinely infinite parts
are evaluated per subdivision cone with the inner parameter summed in
closed form (Hurwitz zeta / digamma) and only the outer parameter
truncated, which converges orders of magnitude faster than a plain
box truncation at the same cutoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _iproduct
from typing import Optional, Sequence

import numpy as _np
from scipy import special as _sp

from . import kernels
from .dedekind import ReciprocityReport, _entries, make_report, reciprocity_lhs
from .exact import SymbolicValue, bernoulli_number
from .lattice import ConeFan, canonical_sign_vectors, hj_generators, r2_cone_generators
from .periodic import bernoulli_fn


@dataclass(frozen=True)
class TruncationPlan:
    """How a truncated lattice sum is carried out.

    ``N`` bounds the enumeration parameters, ``pairing`` is
    ``"symmetric"`` (antipodal points added as pairs, mandatory when any
    active exponent weight is odd) or ``"none"``, and ``compensated``
    selects Neumaier compensated accumulation.
    """

    N: int = 2000
    pairing: str = "symmetric"
    compensated: bool = True

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError("N must be positive")
        if self.pairing not in ("symmetric", "none"):
            raise ValueError(f"unknown pairing {self.pairing!r}")

    def to_json(self) -> dict:
        return {"N": self.N, "pairing": self.pairing, "compensated": self.compensated}


def default_plan(r: int) -> TruncationPlan:
    """Default truncation: generous for lines, moderate for planes."""
    if r <= 1:
        return TruncationPlan(N=10_000)
    if r == 2:
        return TruncationPlan(N=2000)
    return TruncationPlan(N=60)


# ---------------------------------------------------------------------------
# Riemann zeta values


def riemann_zeta_even_exact(q: int) -> SymbolicValue:
    """zeta(q) for even q >= 2 as an exact rational times pi^q."""
    if not isinstance(q, int) or q < 2 or q % 2 != 0:
        raise ValueError("need an even integer q >= 2")
    coeff = Fraction((-1) ** (q // 2 + 1) * 2 ** (q - 1), math.factorial(q)) * bernoulli_number(q)
    return SymbolicValue(coeff, q, 0)


_ZETA_NUM_CACHE: dict = {}
_ZETA_NUM_LIMIT = 60_000_000


def riemann_zeta_numeric(s: float, tol: float = 1e-10) -> float:
    """Partial sum of zeta(s) with the cutoff chosen from the tail bound.

    The integral tail bound ``N^(1-s)/(s-1) <= tol`` fixes the number of
    terms. Raises when s <= 1 or when the required cutoff is infeasible;
    the error suggests the exact even-weight route where it applies.
    """
    s = float(s)
    if not s > 1:
        raise ValueError("zeta partial sums need s > 1")
    if not tol > 0:
        raise ValueError("tol must be positive")
    key = (s, float(tol))
    if key in _ZETA_NUM_CACHE:
        return _ZETA_NUM_CACHE[key]
    need = (1.0 / (tol * (s - 1.0))) ** (1.0 / (s - 1.0))
    n_terms = max(1, math.ceil(need))
    if n_terms > _ZETA_NUM_LIMIT:
        raise ValueError(
            f"tolerance {tol} at s={s} needs {n_terms} terms; "
            "use riemann_zeta_even_exact for even integer weights or relax tol"
        )
    chunk = 1 << 20
    parts = []
    lo = 1
    while lo <= n_terms:
        hi = min(lo + chunk - 1, n_terms)
        arr = _np.arange(lo, hi + 1, dtype=_np.float64)
        parts.append(float(_np.sum(arr ** (-s))))
        lo = hi + 1
    val = math.fsum(parts)
    _ZETA_NUM_CACHE[key] = val
    return val


_ZETA_FLOAT_CACHE: dict = {}


def _zeta_float(s: int) -> float:
    """Float zeta(s) for integer s >= 2: exact-even, tight-numeric-odd."""
    if s in _ZETA_FLOAT_CACHE:
        return _ZETA_FLOAT_CACHE[s]
    if s % 2 == 0:
        v = riemann_zeta_even_exact(s)
        out = float(v.coeff) * math.pi ** v.pi_power
    else:
        out = riemann_zeta_numeric(s, 1e-10)
    _ZETA_FLOAT_CACHE[s] = out
    return out


def ray_zeta_exact(q: Sequence[int], v: Sequence[int]):
    """Sum of the masked term over positive multiples of a primitive ray.

    Equals ``zeta(|q|) / prod v_j^{q_j}``. Even total weight returns a
    :class:`SymbolicValue`; odd total weight has no such closed form and
    routes to the numeric zeta evaluator, returning a float.
    """
    q = tuple(int(x) for x in q)
    v = tuple(int(x) for x in v)
    if len(q) != len(v):
        raise ValueError("q and v must have equal length")
    if any(e < 0 for e in q):
        raise ValueError("exponents must be nonnegative")
    if any(e > 0 and c == 0 for e, c in zip(q, v)):
        raise ValueError("active coordinate of v is zero; the sum is undefined")
    if math.gcd(*[abs(c) for c in v]) != 1:
        raise ValueError("v must be primitive")
    w = sum(q)
    if w < 2:
        raise ValueError("total weight must be at least 2 for convergence")
    den = Fraction(1)
    for e, c in zip(q, v):
        if e:
            den *= Fraction(c) ** e
    if w % 2 == 0:
        return riemann_zeta_even_exact(w) * (1 / den)
    return _zeta_float(w) / float(den)


# ---------------------------------------------------------------------------
# Truncated sums over cones and lattices


def _pad3(vec: Sequence[int]) -> tuple[int, int, int]:
    t = tuple(int(x) for x in vec)
    if len(t) > 3:
        raise ValueError("at most three coordinates supported")
    return t + (0,) * (3 - len(t))


def conical_zeta_trunc(
    q: Sequence[int],
    gens: Sequence[Sequence[int]],
    region: str = "relative_interior",
    plan: Optional[TruncationPlan] = None,
) -> float:
    """Truncated masked sum over a ray or a 2-generator cone.

    The truncation is in the cone parameters: multiples ``c <= N`` for a
    ray, grid ``(a, b)`` with both parameters ``<= N`` for a cone.
    ``region`` is ``"closed"`` (parameters from 0) or
    ``"relative_interior"`` (parameters from 1); the origin never
    contributes.
    """
    if region not in ("closed", "relative_interior"):
        raise ValueError(f"unknown region {region!r}")
    gens = [tuple(int(c) for c in g) for g in gens]
    if len(gens) not in (1, 2):
        raise ValueError("gens must hold one or two generators")
    dim = len(gens[0])
    if any(len(g) != dim for g in gens) or len(q) != dim:
        raise ValueError("generators and q must share one length")
    if all(c == 0 for g in gens for c in g):
        raise ValueError("zero generator")
    plan = plan or TruncationPlan()
    lo = 0 if region == "closed" else 1
    e = _pad3([int(x) for x in q])
    if any(x < 0 for x in e):
        raise ValueError("exponents must be nonnegative")
    if len(gens) == 1:
        v = _pad3(gens[0])
        val, _ = kernels.ray_grid_sum(*v, *e, lo, plan.N, 0, plan.compensated)
        return val
    g1, g2 = _pad3(gens[0]), _pad3(gens[1])
    if g1[0] * g2[1] - g1[1] * g2[0] == 0 and g1[0] * g2[2] - g1[2] * g2[0] == 0 and g1[1] * g2[2] - g1[2] * g2[1] == 0:
        raise ValueError("generators are proportional; not a 2-cone")
    val, _ = kernels.cone_grid_sum(*g1, *g2, *e, lo, plan.N, lo, plan.N, 0, plan.compensated)
    return val


def _neumaier_add(state: tuple[float, float], t: float) -> tuple[float, float]:
    s, comp = state
    u = s + t
    if abs(s) >= abs(t):
        comp += (s - u) + t
    else:
        comp += (t - u) + s
    return (u, comp)


def _generic_term(n: Sequence[int], e: Sequence[int]) -> float:
    den = 1.0
    neg = 0
    for nj, ej in zip(n, e):
        if ej == 0:
            continue
        if nj == 0:
            return 0.0
        if nj < 0 and ej % 2 == 1:
            neg ^= 1
        den *= math.pow(float(abs(nj)), float(ej))
    t = 1.0 / den
    return -t if neg else t


def _generic_lattice_sum(
    ent: Sequence[int],
    e: Sequence[int],
    bound: int,
    all_nonzero: bool,
    paired: bool,
    compensated: bool,
    weights: Optional[Sequence[int]] = None,
) -> tuple[float, int]:
    """Reference enumeration for any rank; plain Python, any r.

    Eliminates the largest-weight coordinate, iterates the free block in
    ascending lexicographic order, and accumulates with the same term
    and compensation conventions as the fused kernels.
    """
    dim = len(ent)
    c = max(range(dim), key=lambda j: (ent[j], -j))
    free = [j for j in range(dim) if j != c]
    wc = ent[c]
    state = (0.0, 0.0)
    count = 0
    for combo in _iproduct(range(-bound, bound + 1), repeat=len(free)):
        if paired:
            lead = next((x for x in combo if x != 0), 0)
            if lead <= 0:
                continue
        s = sum(ent[j] * x for j, x in zip(free, combo))
        if s % wc != 0:
            continue
        z = -(s // wc)
        if abs(z) > bound:
            continue
        n = [0] * dim
        for j, x in zip(free, combo):
            n[j] = x
        n[c] = z
        if all(v == 0 for v in n):
            continue
        if all_nonzero and any(v == 0 for v in n):
            continue
        if weights is None:
            t = _generic_term(n, e)
            if paired:
                t += _generic_term([-v for v in n], e)
                count += 2
            else:
                count += 1
        else:
            wsum = sum(w * v for w, v in zip(weights, n))
            t = float(wsum) * _generic_term(n, e)
            if paired:
                t += float(-wsum) * _generic_term([-v for v in n], e)
                count += 2
            else:
                count += 1
        if compensated:
            state = _neumaier_add(state, t)
        else:
            state = (state[0] + t, 0.0)
    return state[0] + state[1], count


def multiple_zeta_trunc_info(
    nu,
    q: Sequence[int],
    k: Optional[int] = None,
    variant: str = "full",
    plan: Optional[TruncationPlan] = None,
) -> tuple[float, int]:
    """Truncated orthogonal-lattice zeta sum, returning (value, points).

    Variants: ``full`` sums the k-masked term over every nonzero lattice
    vector; ``Y`` restricts to vectors with all coordinates nonzero;
    ``Z`` restricts to vectors with coordinate k zero (identical, term
    by term, to ``plain`` on the k-deleted subvector); ``plain`` uses
    the unmasked exponents. Symmetric pairing is required whenever the
    active exponent weight is odd.
    """
    ent = _entries(nu)
    r = len(ent) - 1
    q = tuple(int(x) for x in q)
    if len(q) != len(ent):
        raise ValueError("q must match nu in length")
    if any(x < 1 for x in q):
        raise ValueError("exponents must be >= 1")
    if variant not in ("full", "Y", "Z", "plain"):
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "plain":
        e = q
    else:
        if k is None or not 0 <= k <= r:
            raise ValueError("variants full/Y/Z need a coordinate index k")
        e = tuple(0 if j == k else q[j] for j in range(len(q)))
    plan = plan or default_plan(r)
    paired = plan.pairing == "symmetric"
    if not paired and sum(e) % 2 == 1:
        raise ValueError("odd active weight requires symmetric pairing")
    if variant == "Y":
        if any(q[j] == 1 for j in range(len(q)) if j != k):
            raise ValueError(
                "standalone Y-sums need every unmasked exponent >= 2; "
                "weight-1 slots only converge inside combined_y_identity"
            )
    if variant == "Z":
        if r == 1:
            return 0.0, 0  # the line holds no nonzero vector with a zero slot
        sub_ent = tuple(v for j, v in enumerate(ent) if j != k)
        sub_q = tuple(x for j, x in enumerate(q) if j != k)
        return multiple_zeta_trunc_info(sub_ent, sub_q, None, "plain", plan)
    if r == 1:
        d = (ent[1], -ent[0])
        val, cnt = kernels.line_zeta_sum(d[0], d[1], e[0], e[1], plan.N, paired, plan.compensated)
        return val, cnt
    if r == 2:
        val, cnt = kernels.plane_zeta_sum(
            ent[0], ent[1], ent[2], e[0], e[1], e[2], plan.N,
            variant in ("Y", "plain"), paired, plan.compensated,
        )
        return val, cnt
    return _generic_lattice_sum(ent, e, plan.N, variant in ("Y", "plain"), paired, plan.compensated)


def multiple_zeta_trunc(
    nu,
    q: Sequence[int],
    k: Optional[int] = None,
    variant: str = "full",
    plan: Optional[TruncationPlan] = None,
) -> float:
    return multiple_zeta_trunc_info(nu, q, k, variant, plan)[0]


def combined_y_identity(nu, q: Sequence[int], plan: Optional[TruncationPlan] = None) -> tuple[float, float]:
    """Both sides of the weighted all-nonzero cancellation identity.

    Left: the merged sum of ``nu_k * (k-masked term)`` over weight-1
    slots, evaluated in one pass with the integer weight
    ``sum(nu_k n_k)`` per point so the cancellation happens term by
    term. Right: minus the plain sums with one unit shaved off each
    heavier exponent. The two agree in the limit; truncated values
    agree to the plan's resolution.
    """
    ent = _entries(nu)
    r = len(ent) - 1
    q = tuple(int(x) for x in q)
    if len(q) != len(ent):
        raise ValueError("q must match nu in length")
    if any(x < 1 for x in q):
        raise ValueError("exponents must be >= 1")
    plan = plan or default_plan(r)
    weights = tuple(ent[j] if q[j] == 1 else 0 for j in range(len(q)))
    if r == 2:
        lhs, _ = kernels.combined_y_r2(
            ent[0], ent[1], ent[2], q[0], q[1], q[2],
            weights[0], weights[1], weights[2], plan.N, plan.compensated,
        )
    else:
        lhs, _ = _generic_lattice_sum(ent, q, plan.N, True, True, plan.compensated, weights=weights)
    parts = []
    for j in range(len(q)):
        if q[j] > 1:
            reduced = tuple(q[m] - 1 if m == j else q[m] for m in range(len(q)))
            val, _ = multiple_zeta_trunc_info(ent, reduced, None, "plain", plan)
            parts.append(ent[j] * val)
    rhs = -math.fsum(parts)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Closed forms on the subdivided cones


def _sigma(q: Sequence[int], k: int, l: int) -> int:
    """Sign picked up by the k-masked term on sign class l."""
    u = canonical_sign_vectors()[l]
    s = 1
    for j in range(len(q)):
        if j != k and u[j] < 0 and q[j] % 2 == 1:
            s = -s
    return s


def coord_zero_zeta_closed(nu, q: Sequence[int], k: int) -> SymbolicValue:
    """Exact value of the coordinate-zero sub-lattice sum (r = 2).

    The vectors with ``n_k = 0`` form the line through ``v_k``; the
    masked sum collapses to ``zeta(w) * (sum of class signs) / v_k^q``
    with ``w`` the active weight. Odd ``w`` gives exactly zero.
    """
    ent = _entries(nu)
    if len(ent) != 3:
        raise ValueError("needs exactly three entries")
    q = tuple(int(x) for x in q)
    if len(q) != 3 or any(x < 1 for x in q):
        raise ValueError("q must hold three exponents >= 1")
    if not 0 <= k <= 2:
        raise IndexError("k out of range")
    w = sum(q[j] for j in range(3) if j != k)
    if w % 2 == 1:
        return SymbolicValue(Fraction(0), 0, 0)
    v = r2_cone_generators(ent)[k]
    den = Fraction(1)
    for j in range(3):
        if j != k:
            den *= Fraction(v[j]) ** q[j]
    ssum = sum(_sigma(q, k, l) for l in range(3) if l != k)
    return riemann_zeta_even_exact(w) * (Fraction(ssum) / den)


@lru_cache(maxsize=512)
def _fan(ent: tuple[int, ...], l: int) -> ConeFan:
    return hj_generators(ent, l)


def _interior_ray_fraction(fan: ConeFan, e: Sequence[int]) -> Fraction:
    """Exact sum of 1/g^e over the fan's interior generators."""
    total = Fraction(0)
    for g in fan.interior_generators:
        den = Fraction(1)
        for j in range(3):
            if e[j]:
                if g[j] <= 0:
                    raise ValueError("interior generator hits an active zero coordinate")
                den *= Fraction(g[j]) ** e[j]
        total += 1 / den
    return total


# ---------------------------------------------------------------------------
# Inner-exact cone evaluation

# A masked product over one subdivision cone is sum_{a,b>=1} of
# prod_j (g1_j a + g2_j b)^(-e_j). Partial fractions in `a` (the
# coefficients are exact rationals times powers of b, fixed by
# homogeneity) turn the inner sum into Hurwitz zeta / digamma values,
# leaving a single truncated sum over b. Pieces whose b-dependence is a
# pure power are summed in closed form instead. Divergent pieces must
# cancel exactly across the weighted masks or the evaluator refuses.


def _pf_gamma(forms: Sequence[tuple[int, int, int]]) -> dict:
    """Partial-fraction coefficients of prod (alpha x + beta)^(-e).

    ``forms`` holds pairwise non-proportional (alpha, beta, e) with
    alpha > 0. Returns {(alpha, beta, i): gamma} with exact rationals,
    solved by sampling at pole-free points and Gaussian elimination.
    """
    unknowns = []
    for alpha, beta, e in forms:
        for i in range(1, e + 1):
            unknowns.append((alpha, beta, i))
    m = len(unknowns)
    for denom in (2, 3, 5, 7, 11):
        xs = [Fraction(denom * s + 1, denom) for s in range(m)]
        rows = []
        rhs = []
        for x in xs:
            row = [1 / (Fraction(alpha) * x + beta) ** i for (alpha, beta, i) in unknowns]
            val = Fraction(1)
            for alpha, beta, e in forms:
                val /= (Fraction(alpha) * x + beta) ** e
            rows.append(row)
            rhs.append(val)
        sol = _solve_fraction_system(rows, rhs)
        if sol is not None:
            return {u: g for u, g in zip(unknowns, sol)}
    raise ValueError("partial-fraction system was singular at every sample offset")


def _solve_fraction_system(rows: list, rhs: list) -> Optional[list]:
    n = len(rows)
    a = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = None
        for r_ in range(col, n):
            if a[r_][col] != 0:
                piv = r_
                break
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r_ in range(n):
            if r_ != col and a[r_][col] != 0:
                f = a[r_][col]
                a[r_] = [x - f * y for x, y in zip(a[r_], a[col])]
    return [a[i][n] for i in range(n)]


def _cone_pieces(g1: Sequence[int], g2: Sequence[int], weighted_masks: Sequence[tuple]) -> dict:
    """Aggregate exact partial-fraction pieces for one subdivision cone.

    Keys are ``(alpha, beta, i, p)`` where the piece contributes
    ``coeff * b^p / (alpha a + beta b)^i`` before the inner summation
    (the ``alpha^-i`` of the inner sum is already folded into coeff).
    Raises if the digamma-at-infinity parts fail to cancel or if any
    surviving piece diverges in b.
    """
    pieces: dict = {}
    psi_div: dict = {}
    for w, e in weighted_masks:
        if w == 0:
            continue
        merged: dict = {}
        scalar = Fraction(1)
        deg = 0
        for j in range(3):
            ej = int(e[j])
            if ej == 0:
                continue
            alpha, beta = int(g1[j]), int(g2[j])
            if alpha == 0 and beta == 0:
                raise ValueError("active coordinate vanishes on the whole cone")
            if alpha < 0 or beta < 0:
                raise ValueError("cone generators must have nonnegative coordinates")
            g = math.gcd(alpha, beta)
            scalar /= Fraction(g) ** ej
            key = (alpha // g, beta // g)
            merged[key] = merged.get(key, 0) + ej
            deg += ej
        active = [(a_, b_, e_) for (a_, b_), e_ in merged.items() if a_ > 0]
        bonly = [(b_, e_) for (a_, b_), e_ in merged.items() if a_ == 0]
        for b_, e_ in bonly:
            assert b_ == 1  # primitive
        if not active:
            raise ValueError("mask is constant in the inner parameter; divergent")
        gam = _pf_gamma(active)
        for (alpha, beta, i), g_ in gam.items():
            coef = Fraction(w) * scalar * g_ / Fraction(alpha) ** i
            if coef == 0:
                continue
            p = i - deg
            key4 = (alpha, beta, i, p)
            pieces[key4] = pieces.get(key4, Fraction(0)) + coef
            if i == 1:
                psi_div[p] = psi_div.get(p, Fraction(0)) + coef
    for p, tot in psi_div.items():
        if tot != 0:
            raise ValueError("divergent digamma parts fail to cancel; combination has no limit")
    pieces = {key: c for key, c in pieces.items() if c != 0}
    for (alpha, beta, i, p), c in pieces.items():
        if beta == 0 or i == 1:
            if p > -2:
                raise ValueError("divergent boundary piece survives aggregation")
        elif p > i - 3:
            raise ValueError("piece decays too slowly in the outer parameter")
    return pieces


def _cone_exact_inner(g1: Sequence[int], g2: Sequence[int], weighted_masks: Sequence[tuple], N: int) -> float:
    """Inner-exact evaluation of the aggregated masked sums on one cone.

    Inner parameter summed in closed form; pure-power pieces in the
    outer parameter are also closed (full zeta values); the remaining
    Hurwitz/digamma pieces are truncated at ``N``.
    """
    pieces = _cone_pieces(g1, g2, weighted_masks)
    if not pieces:
        return 0.0
    barr = _np.arange(1, N + 1, dtype=_np.float64)
    fb = _np.zeros_like(barr)
    extra = []
    for (alpha, beta, i, p), coef in sorted(pieces.items()):
        cf = float(coef)
        if beta == 0:
            if i >= 2:
                extra.append(cf * _zeta_float(i) * _zeta_float(-p))
            else:
                extra.append(-cf * float(_sp.psi(1.0)) * _zeta_float(-p))
            continue
        c = beta / alpha
        if i >= 2:
            fb = fb + cf * barr ** p * _sp.zeta(i, 1.0 + c * barr)
        else:
            fb = fb - cf * barr ** p * _sp.psi(1.0 + c * barr)
    return math.fsum(fb.tolist()) + math.fsum(extra)


def _grid_cone_value(g1, g2, e, plan: TruncationPlan) -> float:
    val, _ = kernels.cone_grid_sum(*g1, *g2, *e, 1, plan.N, 1, plan.N, 0, plan.compensated)
    return val


def q_sum(nu, q: Sequence[int], k: int, plan: Optional[TruncationPlan] = None, strategy: str = "auto") -> float:
    """Normalized positive-cone aggregate of the k-masked term.

    Sums, over the three sign classes, the class sign times (exact
    interior-ray sums plus per-cone interior sums divided by zeta of the
    active weight). ``strategy`` picks the cone evaluator:
    ``exact_inner``, ``grid``, or ``auto`` (exact with grid fallback
    when a combination is genuinely divergent standalone).
    """
    ent = _entries(nu)
    if len(ent) != 3:
        raise ValueError("needs exactly three entries")
    q = tuple(int(x) for x in q)
    if len(q) != 3 or any(x < 1 for x in q):
        raise ValueError("q must hold three exponents >= 1")
    if not 0 <= k <= 2:
        raise IndexError("k out of range")
    if strategy not in ("auto", "exact_inner", "grid"):
        raise ValueError(f"unknown strategy {strategy!r}")
    plan = plan or TruncationPlan(2000)
    e = tuple(0 if j == k else q[j] for j in range(3))
    w = sum(e)
    if w < 2:
        raise ValueError("active weight must be at least 2")
    if strategy in ("auto", "exact_inner"):
        try:
            return _q_sum_eval(ent, q, k, e, w, plan, exact=True)
        except ValueError:
            if strategy == "exact_inner":
                raise
    return _q_sum_eval(ent, q, k, e, w, plan, exact=False)


def _q_sum_eval(ent, q, k, e, w, plan: TruncationPlan, exact: bool) -> float:
    zf = _zeta_float(w)
    ray_total = Fraction(0)
    cone_parts = []
    for l in range(3):
        fan = _fan(tuple(ent), l)
        sig = _sigma(q, k, l)
        ray_total += sig * _interior_ray_fraction(fan, e)
        for (a, b) in fan.cones:
            if exact:
                cone_parts.append(sig * _cone_exact_inner(a, b, [(1, e)], plan.N))
            else:
                cone_parts.append(sig * _grid_cone_value(a, b, e, plan))
    return float(ray_total) + math.fsum(cone_parts) / zf


def q_weighted_total(nu, q: Sequence[int], plan: Optional[TruncationPlan] = None, strategy: str = "auto") -> float:
    """Weighted aggregate ``sum nu_k * q_sum`` over the weight-1 slots.

    Evaluated with the weights pushed inside the per-cone aggregation so
    exact cancellations happen before any floating-point work; the
    all-ones exponent vector collapses to exactly 0.0.
    """
    ent = _entries(nu)
    if len(ent) != 3:
        raise ValueError("needs exactly three entries")
    q = tuple(int(x) for x in q)
    if len(q) != 3 or any(x < 1 for x in q):
        raise ValueError("q must hold three exponents >= 1")
    if strategy not in ("auto", "exact_inner", "grid"):
        raise ValueError(f"unknown strategy {strategy!r}")
    plan = plan or TruncationPlan(2000)
    kset = [k for k in range(3) if q[k] == 1]
    if not kset:
        return 0.0
    w = sum(q) - 1
    if strategy in ("auto", "exact_inner"):
        try:
            return _q_weighted_eval(ent, q, kset, w, plan, exact=True)
        except ValueError:
            if strategy == "exact_inner":
                raise
    return _q_weighted_eval(ent, q, kset, w, plan, exact=False)


def _mask_of(q: Sequence[int], k: int) -> tuple[int, int, int]:
    return tuple(0 if j == k else q[j] for j in range(3))


def _q_weighted_eval(ent, q, kset, w, plan: TruncationPlan, exact: bool) -> float:
    zf = _zeta_float(w)
    ray_total = Fraction(0)
    cone_parts = []
    for l in range(3):
        fan = _fan(tuple(ent), l)
        wm = [(ent[k] * _sigma(q, k, l), _mask_of(q, k)) for k in kset]
        for wk, mask in wm:
            ray_total += wk * _interior_ray_fraction(fan, mask)
        for (a, b) in fan.cones:
            if exact:
                cone_parts.append(_cone_exact_inner(a, b, wm, plan.N))
            else:
                for wk, mask in wm:
                    cone_parts.append(wk * _grid_cone_value(a, b, mask, plan))
    return float(ray_total) + math.fsum(cone_parts) / zf


# ---------------------------------------------------------------------------
# Reciprocity through the cone machinery


def _jump_scale(q: Sequence[int]) -> Fraction:
    """Product of jumps: (1 - (-1)^ones) / 2^ones times heavy Bernoulli."""
    ones = sum(1 for x in q if x == 1)
    val = Fraction(1 - (-1) ** ones, 2 ** ones)
    for x in q:
        if x > 1:
            val *= bernoulli_number(x)
    return val


def _cone_prefactor(q: Sequence[int]) -> Fraction:
    """Real rational collapsing the zeta normalization with the kernel factor."""
    w = sum(q) - 1
    p = -bernoulli_number(w) / math.factorial(w)
    out = Fraction(p)
    for x in q:
        if x > 1:
            out *= math.factorial(x)
    return out


def bernoulli_recip_r2(
    nu,
    q: Sequence[int],
    plan: Optional[TruncationPlan] = None,
    strategy: str = "auto",
) -> ReciprocityReport:
    """Reciprocity for Bernoulli descriptors via cone subdivision (r = 2).

    The exact left side is the jump-weighted sum of the generalized
    sums. The right side is assembled from the subdivided cones: exact
    rational parts (coordinate-zero line, interior rays) plus the
    inner-exact cone evaluations. All-ones exponents collapse to an
    exact rational; odd reduced weight gives an exact zero.
    """
    ent = _entries(nu)
    if len(ent) != 3:
        raise ValueError("needs exactly three entries")
    q = tuple(int(x) for x in q)
    if len(q) != 3 or any(x < 1 for x in q):
        raise ValueError("q must hold three exponents >= 1")
    if strategy not in ("auto", "exact_inner", "grid"):
        raise ValueError(f"unknown strategy {strategy!r}")
    plan = plan or TruncationPlan(2000)
    fvec = tuple(bernoulli_fn(x) for x in q)
    lhs = reciprocity_lhs(fvec, ent)
    wbar = sum(q) - 1
    jump = _jump_scale(q)
    extra = {"N": plan.N, "reduced_weight": wbar}

    if all(x == 1 for x in q):
        pref = _cone_prefactor(q)
        gens = r2_cone_generators(ent)
        half = Fraction(0)
        for k in range(3):
            ssum = sum(_sigma(q, k, l) for l in range(3) if l != k)
            den = Fraction(1)
            for j in range(3):
                if j != k:
                    den *= gens[k][j]
            half += ent[k] * Fraction(ssum, 2) / den
        rays = Fraction(0)
        for l in range(3):
            fan = _fan(tuple(ent), l)
            for k in range(3):
                rays += ent[k] * _sigma(q, k, l) * _interior_ray_fraction(fan, _mask_of(q, k))
            wm = [(ent[k] * _sigma(q, k, l), _mask_of(q, k)) for k in range(3)]
            for (a, b) in fan.cones:
                leftover = _cone_pieces(a, b, wm)
                if leftover:
                    raise ValueError("all-ones cone pieces failed to cancel exactly")
        rhs = pref * (half + rays) - jump
        extra["branch"] = "symbolic"
        return make_report("bernoulli-r2", lhs, rhs, **extra)

    if wbar % 2 == 1:
        assert jump == 0
        extra["branch"] = "odd-vanishing"
        return make_report("bernoulli-r2", lhs, Fraction(0), **extra)

    pref = _cone_prefactor(q)
    kset = [k for k in range(3) if q[k] == 1]
    extra["branch"] = "cone-subdivision"
    extra["strategy"] = strategy
    if not kset:
        rhs = -jump
        return make_report("bernoulli-r2", lhs, rhs, **extra)
    gens = r2_cone_generators(ent)
    half = Fraction(0)
    for k in kset:
        ssum = sum(_sigma(q, k, l) for l in range(3) if l != k)
        den = Fraction(1)
        for j in range(3):
            if j != k:
                den *= Fraction(gens[k][j]) ** q[j]
        half += ent[k] * Fraction(ssum, 2) / den
    if strategy in ("auto", "exact_inner"):
        try:
            cone_val, rays = _recip_cone_total(ent, q, kset, plan, exact=True)
        except ValueError:
            if strategy == "exact_inner":
                raise
            cone_val, rays = _recip_cone_total(ent, q, kset, plan, exact=False)
    else:
        cone_val, rays = _recip_cone_total(ent, q, kset, plan, exact=False)
    rhs = float(pref) * (float(half + rays) + cone_val) - float(jump)
    return make_report("bernoulli-r2", lhs, rhs, **extra)


def _recip_cone_total(ent, q, kset, plan: TruncationPlan, exact: bool) -> tuple[float, Fraction]:
    wbar = sum(q) - 1
    zf = _zeta_float(wbar)
    rays = Fraction(0)
    cone_parts = []
    for l in range(3):
        fan = _fan(tuple(ent), l)
        wm = [(ent[k] * _sigma(q, k, l), _mask_of(q, k)) for k in kset]
        for wk, mask in wm:
            rays += wk * _interior_ray_fraction(fan, mask)
        for (a, b) in fan.cones:
            if exact:
                cone_parts.append(_cone_exact_inner(a, b, wm, plan.N))
            else:
                for wk, mask in wm:
                    cone_parts.append(wk * _grid_cone_value(a, b, mask, plan))
    return math.fsum(cone_parts) / zf, rays


def bernoulli_recip_general(nu, q: Sequence[int], plan: Optional[TruncationPlan] = None) -> ReciprocityReport:
    """Reciprocity for Bernoulli descriptors via lattice sums (any rank).

    Rank 1 is fully symbolic (the lattice is a line and the sums are
    Riemann zeta values); higher ranks pair the merged all-nonzero sum
    with the coordinate-zero closed/truncated parts. Odd reduced weight
    short-circuits to an exact zero right side.
    """
    ent = _entries(nu)
    r = len(ent) - 1
    q = tuple(int(x) for x in q)
    if len(q) != len(ent):
        raise ValueError("q must match nu in length")
    if any(x < 1 for x in q):
        raise ValueError("exponents must be >= 1")
    if r < 1:
        raise ValueError("needs at least two entries")
    plan = plan or default_plan(r)
    fvec = tuple(bernoulli_fn(x) for x in q)
    lhs = reciprocity_lhs(fvec, ent)
    wbar = sum(q) - 1
    jump = _jump_scale(q)
    extra = {"N": plan.N, "reduced_weight": wbar}

    if r == 1:
        total = SymbolicValue(Fraction(0), 0, 0)
        for k in range(2):
            if q[k] != 1:
                continue
            qo = q[1 - k]
            if qo % 2 == 1:
                continue
            zv = riemann_zeta_even_exact(qo)
            total = total + zv * Fraction(2 * ent[k], ent[k] ** qo)
        pref = SymbolicValue(
            Fraction(-1, 2 ** wbar) * math.prod(math.factorial(x) for x in q if x > 1),
            -wbar,
            -wbar,
        )
        prod = pref * total
        if prod.pi_power != 0 or prod.iota_power != 0:
            raise ValueError("rank-1 value failed to collapse to a rational")
        rhs = prod.coeff - jump
        extra["branch"] = "symbolic-line"
        return make_report("fourier", lhs, rhs, **extra)

    if wbar % 2 == 1:
        assert jump == 0
        extra["branch"] = "odd-vanishing"
        return make_report("fourier", lhs, Fraction(0), **extra)

    weights = tuple(ent[j] if q[j] == 1 else 0 for j in range(len(q)))
    if r == 2:
        y_merged, _ = kernels.combined_y_r2(
            ent[0], ent[1], ent[2], q[0], q[1], q[2],
            weights[0], weights[1], weights[2], plan.N, plan.compensated,
        )
    else:
        y_merged, _ = _generic_lattice_sum(ent, q, plan.N, True, True, plan.compensated, weights=weights)
    z_parts = []
    for k in range(len(q)):
        if q[k] != 1:
            continue
        zval, _ = multiple_zeta_trunc_info(ent, q, k, "Z", plan)
        z_parts.append(ent[k] * zval)
    total = y_merged + math.fsum(z_parts)
    i_real = (-1) ** (r % 2) * (-1) ** (wbar // 2) * math.prod(
        math.factorial(x) for x in q if x > 1
    ) / (2.0 * math.pi) ** wbar
    rhs = i_real * total - float(jump)
    extra["branch"] = "lattice-trunc"
    return make_report("fourier", lhs, rhs, **extra)


# ---------------------------------------------------------------------------
# Per-class convergence bounds


def bound_check(nu, q: Sequence[int], k: int, plan: Optional[TruncationPlan] = None) -> bool:
    """Check the per-sign-class bounds on the truncated masked sums.

    For exponents all >= 2: each coordinate-zero class sum is bounded by
    the product of zeta values of the unmasked exponents; each strict
    class sum additionally carries twice the smallest unmasked entry
    raised to its exponent; the full masked sum is bounded by
    ``2^r (1 + 4 min^q) prod zeta``. Truncated sums only undershoot the
    limits, so the inequalities must hold up to a tiny epsilon.
    """
    ent = _entries(nu)
    if len(ent) != 3:
        raise ValueError("needs exactly three entries")
    q = tuple(int(x) for x in q)
    if len(q) != 3 or any(x < 2 for x in q):
        raise ValueError("bounds need every exponent >= 2")
    if not 0 <= k <= 2:
        raise IndexError("k out of range")
    plan = plan or TruncationPlan(500)
    e = _mask_of(q, k)
    prodz = 1.0
    for j in range(3):
        if j != k:
            prodz *= _zeta_float(q[j])
    others = [j for j in range(3) if j != k]
    lmin = min(others, key=lambda j: (ent[j], j))
    spike = float(ent[lmin]) ** q[lmin]
    eps = 1e-9
    classes = list(canonical_sign_vectors()) + [(1, 1, 1)]
    ok = True
    for u in classes:
        zval, _ = kernels.orthant_plane_sum(
            ent[0], ent[1], ent[2], e[0], e[1], e[2], u[0], u[1], u[2], plan.N, k, plan.compensated,
        )
        if abs(zval) > prodz + eps:
            ok = False
        yval, _ = kernels.orthant_plane_sum(
            ent[0], ent[1], ent[2], e[0], e[1], e[2], u[0], u[1], u[2], plan.N, -1, plan.compensated,
        )
        if abs(yval) > 2.0 * spike * prodz + eps:
            ok = False
    full, _ = kernels.plane_zeta_sum(
        ent[0], ent[1], ent[2], e[0], e[1], e[2], plan.N, False,
        plan.pairing == "symmetric", plan.compensated,
    )
    if abs(full) > 4.0 * (1.0 + 4.0 * spike) * prodz + eps:
        ok = False
    return ok
