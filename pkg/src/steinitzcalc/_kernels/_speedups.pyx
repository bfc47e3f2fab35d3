# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cython accelerator kernels.

Same functions and contracts as `steinitzcalc._kernels.pure`; the dispatch
wrapper in `steinitzcalc._kernels` routes calls here only when the operands
fit the int64 windows these implementations assume (see the wrapper guards).
Division helpers reproduce Python floor/mod semantics on C integers.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

BACKEND = "speedups"

ctypedef long long i64


cdef inline i64 _floordiv(i64 x, i64 y) nogil:
    cdef i64 q = x / y
    if x % y != 0 and ((x < 0) != (y < 0)):
        q -= 1
    return q


cdef inline i64 _pymod(i64 x, i64 y) nogil:
    cdef i64 r = x % y
    if r != 0 and ((r < 0) != (y < 0)):
        r += y
    return r


cdef inline i64 _powmod(i64 base, i64 exp, i64 mod) nogil:
    cdef i64 result = 1
    base = _pymod(base, mod)
    while exp > 0:
        if exp & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        exp >>= 1
    return result


cdef i64 _kronecker(i64 a, i64 n) nogil:
    cdef int result = 1
    cdef i64 t
    if n == 0:
        return 1 if (a == 1 or a == -1) else 0
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        while n % 2 == 0:
            n //= 2
            t = _pymod(a, 8)
            if t == 3 or t == 5:
                result = -result
    a = _pymod(a, n)
    while a != 0:
        while a % 2 == 0:
            a //= 2
            t = n % 8
            if t == 3 or t == 5:
                result = -result
        t = a
        a = n
        n = t
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a = _pymod(a, n)
    return result if n == 1 else 0


def kronecker(a, n):
    """Kronecker symbol (a|n), defined for all integers n."""
    return int(_kronecker(a, n))


def primes_in_range(lo, hi):
    """Primes p with lo <= p < hi, by a segmented sieve of Eratosthenes."""
    cdef i64 clo = lo, chi = hi
    cdef i64 root, p, start, i, seg_lo, seg_hi, n
    cdef unsigned char *base
    cdef unsigned char *seg
    cdef list out = []
    cdef list base_primes = []
    if chi <= 2 or chi <= clo:
        return out
    if clo < 2:
        clo = 2
    root = <i64> ((chi - 1) ** 0.5)
    while root * root > chi - 1:
        root -= 1
    while (root + 1) * (root + 1) <= chi - 1:
        root += 1
    base = <unsigned char *> malloc(root + 1)
    if base == NULL:
        raise MemoryError()
    memset(base, 1, root + 1)
    base[0] = 0
    if root >= 1:
        base[1] = 0
    p = 2
    while p * p <= root:
        if base[p]:
            i = p * p
            while i <= root:
                base[i] = 0
                i += p
        p += 1
    for p in range(2, root + 1):
        if base[p]:
            base_primes.append(p)
    free(base)

    cdef i64 seg_size = 1 << 16
    seg = <unsigned char *> malloc(seg_size)
    if seg == NULL:
        raise MemoryError()
    try:
        seg_lo = clo
        while seg_lo < chi:
            seg_hi = seg_lo + seg_size
            if seg_hi > chi:
                seg_hi = chi
            n = seg_hi - seg_lo
            memset(seg, 1, n)
            for bp in base_primes:
                p = bp
                start = p * p
                if start < seg_lo:
                    start = ((seg_lo + p - 1) // p) * p
                i = start - seg_lo
                while i < n:
                    seg[i] = 0
                    i += p
            for i in range(n):
                if seg[i]:
                    out.append(seg_lo + i)
            seg_lo = seg_hi
    finally:
        free(seg)
    return out


cdef i64 _sqrt_mod_prime(i64 a, i64 p) nogil:
    cdef i64 q, s, z, m, c, t, r, t2, i, b
    a = _pymod(a, p)
    if p % 4 == 3:
        return _powmod(a, (p + 1) // 4, p)
    if p % 8 == 5:
        r = _powmod(a, (p + 3) // 8, p)
        if (r * r) % p != a:
            r = (r * _powmod(2, (p - 1) // 4, p)) % p
        return r
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while _kronecker(z, p) != -1:
        z += 1
    m = s
    c = _powmod(z, q, p)
    t = _powmod(a, q, p)
    r = _powmod(a, (q + 1) // 2, p)
    while t != 1:
        t2 = (t * t) % p
        i = 1
        while t2 != 1:
            t2 = (t2 * t2) % p
            i += 1
        b = _powmod(c, (<i64> 1) << (m - i - 1), p)
        m = i
        c = (b * b) % p
        t = (t * c) % p
        r = (r * b) % p
    return r


def sqrt_mod_prime(a, p):
    """A square root of a mod p (p an odd prime, a a nonzero QR mod p)."""
    return int(_sqrt_mod_prime(a, p))


cdef void _reduce(i64 *a, i64 *b, i64 *c) nogil:
    cdef i64 k, t
    while True:
        if not (-a[0] < b[0] <= a[0]):
            k = _floordiv(a[0] - b[0], 2 * a[0])
            c[0] += (a[0] * k + b[0]) * k
            b[0] += 2 * k * a[0]
        if a[0] > c[0]:
            t = a[0]
            a[0] = c[0]
            c[0] = t
            b[0] = -b[0]
            continue
        if a[0] == c[0] and b[0] < 0:
            b[0] = -b[0]
        return


def reduce_form(a, b, c):
    """The reduced form equivalent to (a, b, c)."""
    cdef i64 ca = a, cb = b, cc = c
    _reduce(&ca, &cb, &cc)
    return int(ca), int(cb), int(cc)


cdef i64 _ext_gcd(i64 x, i64 y, i64 *u_out) nogil:
    cdef i64 u0 = 1, u1 = 0, g0 = x, g1 = y, q, t
    while g1:
        q = _floordiv(g0, g1)
        t = u0 - q * u1
        u0 = u1
        u1 = t
        t = g0 - q * g1
        g0 = g1
        g1 = t
    u_out[0] = u0
    return g0


def compose_reduced(a1, b1, c1, a2, b2, c2):
    """Gauss composition of two primitive forms of one discriminant."""
    cdef i64 x1 = a1, y1f = b1, z1 = c1, x2 = a2, y2f = b2, z2 = c2
    cdef i64 s, n, d, d1, y1, y2, x2c, u, v1, v2, r, a3, b3, c3, t
    if x1 > x2:
        t = x1; x1 = x2; x2 = t
        t = y1f; y1f = y2f; y2f = t
        t = z1; z1 = z2; z2 = t
    s = _floordiv(y1f + y2f, 2)
    n = y2f - s
    if x2 % x1 == 0:
        y1 = 0
        d = x1
    else:
        d = _ext_gcd(x2, x1, &u)
        y1 = u
    if _pymod(s, d) == 0:
        y2 = -1
        x2c = 0
        d1 = d
    else:
        d1 = _ext_gcd(s, d, &u)
        x2c = u
        y2 = -_floordiv(d1 - u * s, d)
    v1 = x1 // d1
    v2 = x2 // d1
    r = _pymod(y1 * y2 * n - x2c * z2, v1)
    a3 = v1 * v2
    b3 = y2f + 2 * v2 * r
    c3 = (z2 * d1 + r * (y2f + v2 * r)) // v1
    _reduce(&a3, &b3, &c3)
    return int(a3), int(b3), int(c3)


cdef int _prime_form(i64 disc, i64 p, i64 *b_out, i64 *c_out) nogil:
    cdef i64 m8, b, r
    if p == 2:
        m8 = _pymod(disc, 8)
        if m8 == 1:
            b = 1
        elif m8 == 0:
            b = 0
        elif m8 == 4:
            b = 2
        else:
            return 0
    elif _pymod(disc, p) == 0:
        b = 0 if disc % 2 == 0 else p
    else:
        if _kronecker(disc, p) != 1:
            return 0
        r = _sqrt_mod_prime(_pymod(disc, p), p)
        b = r if _pymod(r - disc, 2) == 0 else p - r
        if 2 * p - b < b:
            b = 2 * p - b
    b_out[0] = b
    c_out[0] = (b * b - disc) // (4 * p)
    return 1


def prime_form(disc, p):
    """Canonical unreduced form (p, b, c) of a degree-1 prime over p."""
    cdef i64 b, c
    if _prime_form(disc, p, &b, &c):
        return int(p), int(b), int(c)
    return None


def reduced_forms(disc):
    """All reduced primitive forms of discriminant disc (< 0), sorted."""
    cdef i64 d = disc
    cdef i64 amax, a, b, num, c, g, t, x, y
    cdef list out = []
    amax = <i64> ((-d / 3.0) ** 0.5)
    while amax * amax > -d // 3:
        amax -= 1
    while (amax + 1) * (amax + 1) <= -d // 3:
        amax += 1
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if _pymod(b - d, 2) != 0:
                continue
            num = b * b - d
            if num % (4 * a) != 0:
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            x = a
            y = b if b >= 0 else -b
            while y:
                t = x % y
                x = y
                y = t
            y = c
            while y:
                t = x % y
                x = y
                y = t
            if x != 1:
                continue
            out.append((int(a), int(b), int(c)))
    out.sort()
    return out


def scan_w_forms(disc, m, members, lo, hi):
    """Reduced forms of qualifying primes p in [lo, hi)."""
    cdef i64 d = disc, cm = m
    cdef i64 p, b, c, a
    cdef set found = set()
    for p in primes_in_range(lo, hi):
        if cm % p == 0:
            continue
        if (p % cm if cm > 1 else 0) not in members:
            continue
        if not _prime_form(d, p, &b, &c):
            continue
        a = p
        _reduce(&a, &b, &c)
        found.add((int(a), int(b), int(c)))
    return found
