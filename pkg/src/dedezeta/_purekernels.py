"""Pure-Python twins of the compiled summation kernels.

Reference implementations of the hot loops: box-truncated lattice zeta
sums over orthogonal lattices, cone/ray grid sums, and the exhaustive
unimodularity probe. The compiled module ``_speedups`` mirrors these
routines operation for operation (same libm ``pow`` calls, same
multiplication order, same Neumaier-compensated accumulation in the same
iteration order), so both backends return bit-identical floats; only
speed differs.

Conventions shared by every summation routine here:

- a term is ``prod_j n_j**(-e_j)`` with ``e_j >= 0``; a factor with
  ``e_j = 0`` contributes 1 even at ``n_j = 0`` (the ``0**0 = 1``
  convention), while a point with ``n_j = 0`` and ``e_j > 0`` lies
  outside the summation region and contributes exactly 0;
- paired sums iterate lexicographically positive representatives of
  antipodal pairs and add ``term(n) + term(-n)`` per pair, which makes
  odd-weight sums vanish exactly in IEEE arithmetic;
- accumulation is Neumaier-compensated unless ``compensated`` is false;
- every routine returns ``(value, points_used)``.
"""

from __future__ import annotations

import math


def b1_pair_numer(p: int, q: int, m: int) -> int:
    """Integer numerator of a sawtooth pair sum.

    Returns ``sum_{i=1}^{m-1} (2*(i*p % m) - m) * (2*(i*q % m) - m)``,
    so the sawtooth-product sum ``sum b1(i*p/m) * b1(i*q/m)`` equals the
    result divided by ``4*m*m``. Requires ``gcd(p, m) = gcd(q, m) = 1``
    so no sample hits an integer.
    """
    total = 0
    rp = 0
    rq = 0
    for _ in range(1, m):
        rp += p
        if rp >= m:
            rp -= m * (rp // m)
        rq += q
        if rq >= m:
            rq -= m * (rq // m)
        total += (2 * rp - m) * (2 * rq - m)
    return total


def _term3(n0: int, n1: int, n2: int, e0: int, e1: int, e2: int) -> float:
    neg = 0
    den = 1.0
    if e0 > 0:
        if n0 == 0:
            return 0.0
        if n0 < 0:
            neg ^= e0 & 1
        den *= math.pow(float(abs(n0)), float(e0))
    if e1 > 0:
        if n1 == 0:
            return 0.0
        if n1 < 0:
            neg ^= e1 & 1
        den *= math.pow(float(abs(n1)), float(e1))
    if e2 > 0:
        if n2 == 0:
            return 0.0
        if n2 < 0:
            neg ^= e2 & 1
        den *= math.pow(float(abs(n2)), float(e2))
    t = 1.0 / den
    return -t if neg else t


def _term2(n0: int, n1: int, e0: int, e1: int) -> float:
    neg = 0
    den = 1.0
    if e0 > 0:
        if n0 == 0:
            return 0.0
        if n0 < 0:
            neg ^= e0 & 1
        den *= math.pow(float(abs(n0)), float(e0))
    if e1 > 0:
        if n1 == 0:
            return 0.0
        if n1 < 0:
            neg ^= e1 & 1
        den *= math.pow(float(abs(n1)), float(e1))
    t = 1.0 / den
    return -t if neg else t


def line_zeta_sum(
    d0: int,
    d1: int,
    e0: int,
    e1: int,
    bound: int,
    paired: bool,
    compensated: bool,
) -> tuple[float, int]:
    """Truncated zeta sum over the integer multiples of ``(d0, d1)``.

    Sums ``term(c*d)`` over ``0 < |c|`` with ``max_j |c*d_j| <= bound``.
    With ``paired`` true, iterates ``c = 1..cmax`` adding the antipodal
    pair at once; otherwise iterates ``c`` ascending over both signs.
    """
    dmax = max(abs(d0), abs(d1))
    if dmax == 0:
        return 0.0, 0
    cmax = bound // dmax
    s = 0.0
    comp = 0.0
    count = 0
    if paired:
        for c in range(1, cmax + 1):
            t = _term2(c * d0, c * d1, e0, e1) + _term2(-c * d0, -c * d1, e0, e1)
            count += 2
            if compensated:
                u = s + t
                if abs(s) >= abs(t):
                    comp += (s - u) + t
                else:
                    comp += (t - u) + s
                s = u
            else:
                s += t
    else:
        for c in range(-cmax, cmax + 1):
            if c == 0:
                continue
            t = _term2(c * d0, c * d1, e0, e1)
            count += 1
            if compensated:
                u = s + t
                if abs(s) >= abs(t):
                    comp += (s - u) + t
                else:
                    comp += (t - u) + s
                s = u
            else:
                s += t
    return s + comp, count


def plane_zeta_sum(
    w0: int,
    w1: int,
    w2: int,
    e0: int,
    e1: int,
    e2: int,
    bound: int,
    all_nonzero: bool,
    paired: bool,
    compensated: bool,
) -> tuple[float, int]:
    """Truncated zeta sum over ``{n : w.n = 0, 0 < max|n_j| <= bound}``.

    The coordinate with the largest ``|w_j|`` (first maximum) is
    eliminated; the two free coordinates are scanned in ascending index
    order, x outer, y inner, both ascending. ``all_nonzero`` restricts
    to points with every coordinate nonzero.
    """
    aw0, aw1, aw2 = abs(w0), abs(w1), abs(w2)
    if aw0 >= aw1 and aw0 >= aw2:
        c, a, b = 0, 1, 2
        wc, wa, wb = w0, w1, w2
    elif aw1 >= aw2:
        c, a, b = 1, 0, 2
        wc, wa, wb = w1, w0, w2
    else:
        c, a, b = 2, 0, 1
        wc, wa, wb = w2, w0, w1
    n = [0, 0, 0]
    s = 0.0
    comp = 0.0
    count = 0
    xlo = 0 if paired else -bound
    for x in range(xlo, bound + 1):
        if paired:
            ylo = 1 if x == 0 else -bound
        else:
            ylo = -bound
        for y in range(ylo, bound + 1):
            m = wa * x + wb * y
            if m % wc != 0:
                continue
            z = -(m // wc)
            if z > bound or z < -bound:
                continue
            if x == 0 and y == 0 and z == 0:
                continue
            n[a] = x
            n[b] = y
            n[c] = z
            n0, n1, n2 = n[0], n[1], n[2]
            if all_nonzero and (n0 == 0 or n1 == 0 or n2 == 0):
                continue
            t = _term3(n0, n1, n2, e0, e1, e2)
            count += 1
            if paired:
                t += _term3(-n0, -n1, -n2, e0, e1, e2)
                count += 1
            if compensated:
                u = s + t
                if abs(s) >= abs(t):
                    comp += (s - u) + t
                else:
                    comp += (t - u) + s
                s = u
            else:
                s += t
    return s + comp, count


def orthant_plane_sum(
    w0: int,
    w1: int,
    w2: int,
    e0: int,
    e1: int,
    e2: int,
    u0: int,
    u1: int,
    u2: int,
    bound: int,
    zero_k: int,
    compensated: bool,
) -> tuple[float, int]:
    """Sum over one sign-restricted slice of the plane ``w.n = 0``.

    With ``zero_k < 0``: points with ``n_j * u_j > 0`` for every j.
    With ``zero_k = k``: points with ``n_k = 0`` and ``n_j * u_j > 0``
    for the other coordinates. Not antipodally symmetric, so never
    paired; scan order matches :func:`plane_zeta_sum` unpaired.
    """
    aw0, aw1, aw2 = abs(w0), abs(w1), abs(w2)
    if aw0 >= aw1 and aw0 >= aw2:
        c, a, b = 0, 1, 2
        wc, wa, wb = w0, w1, w2
    elif aw1 >= aw2:
        c, a, b = 1, 0, 2
        wc, wa, wb = w1, w0, w2
    else:
        c, a, b = 2, 0, 1
        wc, wa, wb = w2, w0, w1
    n = [0, 0, 0]
    s = 0.0
    comp = 0.0
    count = 0
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            m = wa * x + wb * y
            if m % wc != 0:
                continue
            z = -(m // wc)
            if z > bound or z < -bound:
                continue
            n[a] = x
            n[b] = y
            n[c] = z
            n0, n1, n2 = n[0], n[1], n[2]
            if zero_k == 0:
                if n0 != 0 or n1 * u1 <= 0 or n2 * u2 <= 0:
                    continue
            elif zero_k == 1:
                if n1 != 0 or n0 * u0 <= 0 or n2 * u2 <= 0:
                    continue
            elif zero_k == 2:
                if n2 != 0 or n0 * u0 <= 0 or n1 * u1 <= 0:
                    continue
            else:
                if n0 * u0 <= 0 or n1 * u1 <= 0 or n2 * u2 <= 0:
                    continue
            t = _term3(n0, n1, n2, e0, e1, e2)
            count += 1
            if compensated:
                u = s + t
                if abs(s) >= abs(t):
                    comp += (s - u) + t
                else:
                    comp += (t - u) + s
                s = u
            else:
                s += t
    return s + comp, count


def combined_y_r2(
    nu0: int,
    nu1: int,
    nu2: int,
    q0: int,
    q1: int,
    q2: int,
    w0: int,
    w1: int,
    w2: int,
    bound: int,
    compensated: bool,
) -> tuple[float, int]:
    """Merged weighted sum ``sum (w.n) / n**q`` over all-nonzero points.

    Runs over ``{n : nu.n = 0, all n_j != 0, max|n_j| <= bound}`` with
    the integer weight ``w.n`` computed exactly per point before the
    float conversion; always paired. This single pass realizes the
    cancellation that makes the jump-weighted combination converge even
    when the individual weighted sums do not.
    """
    aw0, aw1, aw2 = nu0, nu1, nu2
    if aw0 >= aw1 and aw0 >= aw2:
        c, a, b = 0, 1, 2
        wc, wa, wb = nu0, nu1, nu2
    elif aw1 >= aw2:
        c, a, b = 1, 0, 2
        wc, wa, wb = nu1, nu0, nu2
    else:
        c, a, b = 2, 0, 1
        wc, wa, wb = nu2, nu0, nu1
    n = [0, 0, 0]
    s = 0.0
    comp = 0.0
    count = 0
    for x in range(0, bound + 1):
        ylo = 1 if x == 0 else -bound
        for y in range(ylo, bound + 1):
            m = wa * x + wb * y
            if m % wc != 0:
                continue
            z = -(m // wc)
            if z > bound or z < -bound:
                continue
            n[a] = x
            n[b] = y
            n[c] = z
            n0, n1, n2 = n[0], n[1], n[2]
            if n0 == 0 or n1 == 0 or n2 == 0:
                continue
            wsum = w0 * n0 + w1 * n1 + w2 * n2
            base = _term3(n0, n1, n2, q0, q1, q2)
            t = float(wsum) * base
            base = _term3(-n0, -n1, -n2, q0, q1, q2)
            t += float(-wsum) * base
            count += 2
            if compensated:
                u = s + t
                if abs(s) >= abs(t):
                    comp += (s - u) + t
                else:
                    comp += (t - u) + s
                s = u
            else:
                s += t
    return s + comp, count


def cone_grid_sum(
    g10: int,
    g11: int,
    g12: int,
    g20: int,
    g21: int,
    g22: int,
    e0: int,
    e1: int,
    e2: int,
    amin: int,
    amax: int,
    bmin: int,
    bmax: int,
    box: int,
    compensated: bool,
) -> tuple[float, int]:
    """Rectangle-truncated cone sum over ``n = a*g1 + b*g2``.

    ``a`` runs ``amin..amax`` (outer), ``b`` runs ``bmin..bmax``
    (inner), both ascending. With ``box > 0`` points outside
    ``max|n_j| <= box`` are skipped, which makes grid truncations
    comparable point-for-point with box truncations.
    """
    s = 0.0
    comp = 0.0
    count = 0
    for a in range(amin, amax + 1):
        for b in range(bmin, bmax + 1):
            n0 = a * g10 + b * g20
            n1 = a * g11 + b * g21
            n2 = a * g12 + b * g22
            if box > 0:
                m = abs(n0)
                if abs(n1) > m:
                    m = abs(n1)
                if abs(n2) > m:
                    m = abs(n2)
                if m > box:
                    continue
            if n0 == 0 and n1 == 0 and n2 == 0:
                continue
            t = _term3(n0, n1, n2, e0, e1, e2)
            count += 1
            if compensated:
                u = s + t
                if abs(s) >= abs(t):
                    comp += (s - u) + t
                else:
                    comp += (t - u) + s
                s = u
            else:
                s += t
    return s + comp, count


def ray_grid_sum(
    v0: int,
    v1: int,
    v2: int,
    e0: int,
    e1: int,
    e2: int,
    cmin: int,
    cmax: int,
    box: int,
    compensated: bool,
) -> tuple[float, int]:
    """Truncated sum over one ray: ``n = c*v`` for ``c = cmin..cmax``."""
    s = 0.0
    comp = 0.0
    count = 0
    for c in range(cmin, cmax + 1):
        n0 = c * v0
        n1 = c * v1
        n2 = c * v2
        if box > 0:
            m = abs(n0)
            if abs(n1) > m:
                m = abs(n1)
            if abs(n2) > m:
                m = abs(n2)
            if m > box:
                continue
        if n0 == 0 and n1 == 0 and n2 == 0:
            continue
        t = _term3(n0, n1, n2, e0, e1, e2)
        count += 1
        if compensated:
            u = s + t
            if abs(s) >= abs(t):
                comp += (s - u) + t
            else:
                comp += (t - u) + s
            s = u
        else:
            s += t
    return s + comp, count


def fan_probe_r2(
    w0: int,
    w1: int,
    w2: int,
    gens_flat: list[int],
    bound: int,
) -> int:
    """Exhaustive cover probe of a planar cone fan; returns violations.

    Scans every lattice point of the plane ``w.n = 0`` with
    ``max|n_j| <= bound`` that lies in the closed big cone spanned by
    the first and last generators, counts the subcones representing it
    as a nonnegative *integer* combination of their two generators, and
    compares with the expected count: 2 on an interior generator ray,
    1 everywhere else (boundary rays and strict cone interiors). Any
    mismatch (including non-integer-representable points) is a
    violation.
    """
    ngens = len(gens_flat) // 3
    if ngens < 2:
        return 0
    aw0, aw1, aw2 = abs(w0), abs(w1), abs(w2)
    if aw0 >= aw1 and aw0 >= aw2:
        a, b = 1, 2
        wc, wa, wb = w0, w1, w2
    elif aw1 >= aw2:
        a, b = 0, 2
        wc, wa, wb = w1, w0, w2
    else:
        a, b = 0, 1
        wc, wa, wb = w2, w0, w1
    gx = [gens_flat[3 * i + a] for i in range(ngens)]
    gy = [gens_flat[3 * i + b] for i in range(ngens)]
    dets = [gx[i] * gy[i + 1] - gy[i] * gx[i + 1] for i in range(ngens - 1)]
    fx, fy = gx[0], gy[0]
    lx, ly = gx[ngens - 1], gy[ngens - 1]
    dbig = fx * ly - fy * lx
    orient = 1 if dbig > 0 else -1
    violations = 0
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            m = wa * x + wb * y
            if m % wc != 0:
                continue
            z = -(m // wc)
            if z > bound or z < -bound:
                continue
            if x == 0 and y == 0:
                continue
            if orient * (fx * y - fy * x) < 0:
                continue
            if orient * (x * ly - y * lx) < 0:
                continue
            cnt = 0
            for i in range(ngens - 1):
                d = dets[i]
                anum = x * gy[i + 1] - y * gx[i + 1]
                bnum = gx[i] * y - gy[i] * x
                if d < 0:
                    d = -d
                    anum = -anum
                    bnum = -bnum
                if anum < 0 or bnum < 0:
                    continue
                if anum % d != 0 or bnum % d != 0:
                    continue
                cnt += 1
            expected = 1
            for i in range(1, ngens - 1):
                if gx[i] * y - gy[i] * x == 0 and gx[i] * x + gy[i] * y > 0:
                    expected = 2
                    break
            if cnt != expected:
                violations += 1
    return violations
