# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: C twins of toruscert._kernels_py.

Same algorithms, same scan order, same results, over C int64.  Callers
(toruscert._speedups) are responsible for the magnitude guards that make
int64 arithmetic safe; anything larger is routed to the pure twins.
"""

from libc.stdint cimport int64_t

IMPLEMENTATION = "cython"


cdef int64_t _gcd(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int64_t _floordiv(int64_t n, int64_t d) noexcept nogil:
    # C division truncates toward zero; continued fractions need floors.
    cdef int64_t q = n / d
    if (n % d != 0) and ((n < 0) != (d < 0)):
        q -= 1
    return q


cdef int64_t _farey_distance(int64_t p1, int64_t q1, int64_t p2, int64_t q2) noexcept nogil:
    cdef int64_t old_r, r, old_x, x, old_y, y, quot
    cdef int64_t num, den, rem, a
    cdef int64_t dist_conv, dist_bump, tmp
    if p1 == p2 and q1 == q2:
        return 0
    old_r = p1; r = q1
    old_x = 1; x = 0
    old_y = 0; y = 1
    while r != 0:
        quot = _floordiv(old_r, r)
        tmp = old_r - quot * r; old_r = r; r = tmp
        tmp = old_x - quot * x; old_x = x; x = tmp
        tmp = old_y - quot * y; old_y = y; y = tmp
    if old_r < 0:
        old_x = -old_x
        old_y = -old_y
    num = old_x * p2 + old_y * q2
    den = p1 * q2 - q1 * p2
    if den < 0:
        num = -num
        den = -den
    if den == 0:
        return 0
    if den == 1:
        return 1
    rem = num - _floordiv(num, den) * den
    dist_conv = 1
    dist_bump = 1
    num = den
    den = rem
    while den > 0:
        a = num / den
        tmp = num - a * den
        num = den
        den = tmp
        tmp = dist_conv + 1
        if dist_bump + a - 1 < tmp:
            dist_conv = dist_bump + a - 1
        else:
            dist_conv = tmp
        if dist_bump + a < tmp:
            dist_bump = dist_bump + a
        else:
            dist_bump = tmp
    return dist_conv


def farey_distance(p1, q1, p2, q2):
    """Farey-graph distance between canonical coprime slopes p1/q1, p2/q2."""
    return _farey_distance(p1, q1, p2, q2)


def fixed_slope_scan(a, b, c, d, bound):
    """All slopes with |p|, |q| <= bound fixed by the integer-scaled map."""
    cdef int64_t ca = a, cb = b, cc = c, cd = d, cbound = bound
    cdef int64_t p, q
    hits = []
    if (ca * 1 + cb * 0) * 0 == (cc * 1 + cd * 0) * 1:
        hits.append((1, 0))
    for q in range(1, cbound + 1):
        for p in range(-cbound, cbound + 1):
            if _gcd(p, q) == 1:
                if (ca * p + cb * q) * q == (cc * p + cd * q) * p:
                    hits.append((p, q))
    return hits


def min_displacement_scan(a, b, c, d, bound, stop_at):
    """Minimum Farey displacement over the slope box, with early stop."""
    cdef int64_t ca = a, cb = b, cc = c, cd = d
    cdef int64_t cbound = bound, cstop = stop_at
    cdef int64_t p, q, x, y, g, dist
    cdef int64_t best = -1, best_p = 0, best_q = 0
    cdef bint done = False
    # Infinity first, then the q >= 1 rows: same order as the pure twin.
    x = ca; y = cc
    g = _gcd(x, y)
    x = x / g; y = y / g
    if y < 0 or (y == 0 and x < 0):
        x = -x; y = -y
    best = _farey_distance(1, 0, x, y)
    best_p = 1; best_q = 0
    if best <= cstop:
        done = True
    if not done:
        for q in range(1, cbound + 1):
            for p in range(-cbound, cbound + 1):
                if _gcd(p, q) != 1:
                    continue
                x = ca * p + cb * q
                y = cc * p + cd * q
                g = _gcd(x, y)
                x = x / g
                y = y / g
                if y < 0 or (y == 0 and x < 0):
                    x = -x
                    y = -y
                dist = _farey_distance(p, q, x, y)
                if dist < best:
                    best = dist
                    best_p = p
                    best_q = q
                    if best <= cstop:
                        done = True
                        break
            if done:
                break
    return int(best), int(best_p), int(best_q)
