# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cython kernel: the hot loops behind normalized Dedekind sums and the
pair search, for operands that fit comfortably in 64-bit words.

Same contract and same algorithm as ``dedsum._kernel_py``; the dispatcher
in ``dedsum._backend`` picks whichever is importable and routes oversize
operands to the pure version.  Operands are capped at MAX_OPERAND so
every intermediate (at most ~2*b**2) stays below 2**63.
"""

COMPILED = True
MAX_OPERAND = 1 << 30

ctypedef long long i64


cdef inline i64 _gcd(i64 a, i64 b) noexcept nogil:
    cdef i64 t
    if a < 0:
        a = -a
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline int _eval(i64 a, i64 b, i64* num, i64* den) noexcept nogil:
    """12*s(a,b) in lowest terms for 0 <= a < b; 0 if gcd(a,b) != 1."""
    cdef i64 alt = 0, sign = 1, q_prev = 0, q = 1, r0 = b, r1 = a, c, t, g
    cdef int n_odd = 0
    if a == 0:
        if b != 1:
            return 0
        num[0] = 0
        den[0] = 1
        return 1
    while r1:
        c = r0 / r1
        alt += sign * c
        sign = -sign
        n_odd ^= 1
        t = q
        q = c * q + q_prev
        q_prev = t
        t = r1
        r1 = r0 - c * r1
        r0 = t
    if r0 != 1:
        return 0
    t = (alt - 3 * n_odd) * b + a
    if n_odd:
        t += q_prev
    else:
        t -= q_prev
    g = _gcd(t, b)
    num[0] = t / g
    den[0] = b / g
    return 1


def normalized_sum_parts(a, b):
    """Reduced (num, den) of 12*s(a, b); raises on a non-coprime pair."""
    cdef i64 ca = a, cb = b, num = 0, den = 1
    if not _eval(ca, cb, &num, &den):
        raise ValueError("not coprime")
    return int(num), int(den)


def scan_slice(u, v, lo, hi, prune):
    """Hits and scanned-count for lo <= b < hi; mirrors the pure version."""
    cdef i64 cu = u, cv = v, clo = lo, chi = hi
    cdef i64 twice_v = 2 * cv
    cdef i64 b, a, num = 0, den = 1
    cdef long long scanned = 0
    cdef bint do_prune = bool(prune)
    hits = []
    b = clo
    while b < chi:
        # only the == 0 test matters, so C's negative-modulo quirk is harmless
        if do_prune and (b * cu) % twice_v != 0:
            b += 1
            continue
        a = 1
        while a < b:
            if _eval(a, b, &num, &den):
                scanned += 1
                if num == cu and den == cv:
                    hits.append((int(a), int(b)))
            a += 1
        b += 1
    return hits, int(scanned)
