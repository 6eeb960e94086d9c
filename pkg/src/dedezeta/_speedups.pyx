# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled twins of the pure-Python summation kernels.

Mirrors ``_purekernels`` operation for operation: the same libm ``pow``
calls in the same order, the same Neumaier compensation expressions, the
same iteration order, so results are bit-identical to the pure backend.
Integer work stays in 64-bit C; divisions only happen where exactness is
already established, so C and Python division semantics agree.
"""

from libc.math cimport fabs, pow
from libc.stdlib cimport free, malloc


def b1_pair_numer(long long p, long long q, long long m):
    cdef long long total = 0
    cdef long long rp = 0
    cdef long long rq = 0
    cdef long long i
    for i in range(1, m):
        rp += p
        if rp >= m:
            rp -= m * (rp // m)
        rq += q
        if rq >= m:
            rq -= m * (rq // m)
        total += (2 * rp - m) * (2 * rq - m)
    return total


cdef inline double _term3(long long n0, long long n1, long long n2,
                          long long e0, long long e1, long long e2):
    cdef int neg = 0
    cdef double den = 1.0
    cdef double t
    if e0 > 0:
        if n0 == 0:
            return 0.0
        if n0 < 0:
            neg ^= <int>(e0 & 1)
        den *= pow(<double>(-n0 if n0 < 0 else n0), <double>e0)
    if e1 > 0:
        if n1 == 0:
            return 0.0
        if n1 < 0:
            neg ^= <int>(e1 & 1)
        den *= pow(<double>(-n1 if n1 < 0 else n1), <double>e1)
    if e2 > 0:
        if n2 == 0:
            return 0.0
        if n2 < 0:
            neg ^= <int>(e2 & 1)
        den *= pow(<double>(-n2 if n2 < 0 else n2), <double>e2)
    t = 1.0 / den
    return -t if neg else t


cdef inline double _term2(long long n0, long long n1, long long e0, long long e1):
    cdef int neg = 0
    cdef double den = 1.0
    cdef double t
    if e0 > 0:
        if n0 == 0:
            return 0.0
        if n0 < 0:
            neg ^= <int>(e0 & 1)
        den *= pow(<double>(-n0 if n0 < 0 else n0), <double>e0)
    if e1 > 0:
        if n1 == 0:
            return 0.0
        if n1 < 0:
            neg ^= <int>(e1 & 1)
        den *= pow(<double>(-n1 if n1 < 0 else n1), <double>e1)
    t = 1.0 / den
    return -t if neg else t


def line_zeta_sum(long long d0, long long d1, long long e0, long long e1,
                  long long bound, bint paired, bint compensated):
    cdef long long dmax = max(abs(d0), abs(d1))
    if dmax == 0:
        return 0.0, 0
    cdef long long cmax = bound // dmax
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double t, u
    cdef long long count = 0
    cdef long long c
    if paired:
        for c in range(1, cmax + 1):
            t = _term2(c * d0, c * d1, e0, e1) + _term2(-c * d0, -c * d1, e0, e1)
            count += 2
            if compensated:
                u = s + t
                if fabs(s) >= fabs(t):
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
                if fabs(s) >= fabs(t):
                    comp += (s - u) + t
                else:
                    comp += (t - u) + s
                s = u
            else:
                s += t
    return s + comp, count


def plane_zeta_sum(long long w0, long long w1, long long w2,
                   long long e0, long long e1, long long e2,
                   long long bound, bint all_nonzero, bint paired, bint compensated):
    cdef long long aw0 = abs(w0), aw1 = abs(w1), aw2 = abs(w2)
    cdef int c, a, b
    cdef long long wc, wa, wb
    if aw0 >= aw1 and aw0 >= aw2:
        c, a, b = 0, 1, 2
        wc, wa, wb = w0, w1, w2
    elif aw1 >= aw2:
        c, a, b = 1, 0, 2
        wc, wa, wb = w1, w0, w2
    else:
        c, a, b = 2, 0, 1
        wc, wa, wb = w2, w0, w1
    cdef long long n[3]
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double t, u
    cdef long long count = 0
    cdef long long x, y, m, z, xlo, ylo
    cdef long long n0, n1, n2
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
            n0 = n[0]
            n1 = n[1]
            n2 = n[2]
            if all_nonzero and (n0 == 0 or n1 == 0 or n2 == 0):
                continue
            t = _term3(n0, n1, n2, e0, e1, e2)
            count += 1
            if paired:
                t += _term3(-n0, -n1, -n2, e0, e1, e2)
                count += 1
            if compensated:
                u = s + t
                if fabs(s) >= fabs(t):
                    comp += (s - u) + t
                else:
                    comp += (t - u) + s
                s = u
            else:
                s += t
    return s + comp, count


def orthant_plane_sum(long long w0, long long w1, long long w2,
                      long long e0, long long e1, long long e2,
                      long long u0, long long u1, long long u2,
                      long long bound, long long zero_k, bint compensated):
    cdef long long aw0 = abs(w0), aw1 = abs(w1), aw2 = abs(w2)
    cdef int c, a, b
    cdef long long wc, wa, wb
    if aw0 >= aw1 and aw0 >= aw2:
        c, a, b = 0, 1, 2
        wc, wa, wb = w0, w1, w2
    elif aw1 >= aw2:
        c, a, b = 1, 0, 2
        wc, wa, wb = w1, w0, w2
    else:
        c, a, b = 2, 0, 1
        wc, wa, wb = w2, w0, w1
    cdef long long n[3]
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double t, uu
    cdef long long count = 0
    cdef long long x, y, m, z
    cdef long long n0, n1, n2
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
            n0 = n[0]
            n1 = n[1]
            n2 = n[2]
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
                uu = s + t
                if fabs(s) >= fabs(t):
                    comp += (s - uu) + t
                else:
                    comp += (t - uu) + s
                s = uu
            else:
                s += t
    return s + comp, count


def combined_y_r2(long long nu0, long long nu1, long long nu2,
                  long long q0, long long q1, long long q2,
                  long long w0, long long w1, long long w2,
                  long long bound, bint compensated):
    cdef long long aw0 = nu0, aw1 = nu1, aw2 = nu2
    cdef int c, a, b
    cdef long long wc, wa, wb
    if aw0 >= aw1 and aw0 >= aw2:
        c, a, b = 0, 1, 2
        wc, wa, wb = nu0, nu1, nu2
    elif aw1 >= aw2:
        c, a, b = 1, 0, 2
        wc, wa, wb = nu1, nu0, nu2
    else:
        c, a, b = 2, 0, 1
        wc, wa, wb = nu2, nu0, nu1
    cdef long long n[3]
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double t, u, base
    cdef long long count = 0
    cdef long long x, y, m, z, ylo, wsum
    cdef long long n0, n1, n2
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
            n0 = n[0]
            n1 = n[1]
            n2 = n[2]
            if n0 == 0 or n1 == 0 or n2 == 0:
                continue
            wsum = w0 * n0 + w1 * n1 + w2 * n2
            base = _term3(n0, n1, n2, q0, q1, q2)
            t = (<double>wsum) * base
            base = _term3(-n0, -n1, -n2, q0, q1, q2)
            t += (<double>(-wsum)) * base
            count += 2
            if compensated:
                u = s + t
                if fabs(s) >= fabs(t):
                    comp += (s - u) + t
                else:
                    comp += (t - u) + s
                s = u
            else:
                s += t
    return s + comp, count


def cone_grid_sum(long long g10, long long g11, long long g12,
                  long long g20, long long g21, long long g22,
                  long long e0, long long e1, long long e2,
                  long long amin, long long amax, long long bmin, long long bmax,
                  long long box, bint compensated):
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double t, u
    cdef long long count = 0
    cdef long long a, b, n0, n1, n2, m
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
                if fabs(s) >= fabs(t):
                    comp += (s - u) + t
                else:
                    comp += (t - u) + s
                s = u
            else:
                s += t
    return s + comp, count


def ray_grid_sum(long long v0, long long v1, long long v2,
                 long long e0, long long e1, long long e2,
                 long long cmin, long long cmax, long long box, bint compensated):
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double t, u
    cdef long long count = 0
    cdef long long c, n0, n1, n2, m
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
            if fabs(s) >= fabs(t):
                comp += (s - u) + t
            else:
                comp += (t - u) + s
            s = u
        else:
            s += t
    return s + comp, count


def fan_probe_r2(long long w0, long long w1, long long w2, gens_flat, long long bound):
    cdef long long ngens = len(gens_flat) // 3
    if ngens < 2:
        return 0
    cdef long long aw0 = abs(w0), aw1 = abs(w1), aw2 = abs(w2)
    cdef int a, b
    cdef long long wc, wa, wb
    if aw0 >= aw1 and aw0 >= aw2:
        a, b = 1, 2
        wc, wa, wb = w0, w1, w2
    elif aw1 >= aw2:
        a, b = 0, 2
        wc, wa, wb = w1, w0, w2
    else:
        a, b = 0, 1
        wc, wa, wb = w2, w0, w1
    cdef long long *gx = <long long *>malloc(ngens * sizeof(long long))
    cdef long long *gy = <long long *>malloc(ngens * sizeof(long long))
    cdef long long *dets = <long long *>malloc((ngens - 1) * sizeof(long long))
    if gx == NULL or gy == NULL or dets == NULL:
        if gx != NULL:
            free(gx)
        if gy != NULL:
            free(gy)
        if dets != NULL:
            free(dets)
        raise MemoryError()
    cdef long long i
    for i in range(ngens):
        gx[i] = gens_flat[3 * i + a]
        gy[i] = gens_flat[3 * i + b]
    for i in range(ngens - 1):
        dets[i] = gx[i] * gy[i + 1] - gy[i] * gx[i + 1]
    cdef long long fx = gx[0], fy = gy[0]
    cdef long long lx = gx[ngens - 1], ly = gy[ngens - 1]
    cdef long long dbig = fx * ly - fy * lx
    cdef long long orient = 1 if dbig > 0 else -1
    cdef long long violations = 0
    cdef long long x, y, m, z, cnt, expected, d, anum, bnum
    try:
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
    finally:
        free(gx)
        free(gy)
        free(dets)
    return violations
