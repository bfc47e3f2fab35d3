"""Pure-Python arithmetic kernels.

These are the hot inner loops of the library: prime sieving, Kronecker
symbols, square roots mod p, binary-quadratic-form reduction/composition and
the fused "qualifying prime" scan used by the W-group enumeration.  A Cython
twin (`_speedups.pyx`) implements the same functions with the same contracts;
`steinitzcalc._kernels` picks one at import time.

All forms are positive definite: a > 0 and b*b - 4*a*c = D < 0.
"""

from math import gcd, isqrt

BACKEND = "pure"


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), defined for all integers n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        while n % 2 == 0:
            n //= 2
            if a % 8 in (3, 5):
                result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def primes_in_range(lo: int, hi: int) -> list:
    """Primes p with lo <= p < hi, by a segmented sieve of Eratosthenes."""
    if hi <= 2 or hi <= lo:
        return []
    lo = max(lo, 2)
    root = isqrt(hi - 1)
    base = bytearray([1]) * (root + 1)
    base[0:2] = b"\x00\x00"
    for p in range(2, isqrt(root) + 1):
        if base[p]:
            base[p * p :: p] = bytearray(len(range(p * p, root + 1, p)))
    base_primes = [p for p in range(2, root + 1) if base[p]]

    out = []
    seg_size = 1 << 16
    for seg_lo in range(lo, hi, seg_size):
        seg_hi = min(seg_lo + seg_size, hi)
        seg = bytearray([1]) * (seg_hi - seg_lo)
        for p in base_primes:
            start = max(p * p, ((seg_lo + p - 1) // p) * p)
            if start >= seg_hi:
                continue
            seg[start - seg_lo :: p] = bytearray(len(range(start, seg_hi, p)))
        out.extend(i + seg_lo for i, flag in enumerate(seg) if flag and i + seg_lo >= 2)
    return out


def sqrt_mod_prime(a: int, p: int) -> int:
    """A square root of a mod p (p an odd prime, a a nonzero QR mod p).

    Tonelli-Shanks with the usual p % 4 == 3 and p % 8 == 5 shortcuts.
    """
    a %= p
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    if p % 8 == 5:
        x = pow(a, (p + 3) // 8, p)
        if x * x % p != a:
            x = x * pow(2, (p - 1) // 4, p) % p
        return x
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while kronecker(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t * t % p, 1
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def reduce_form(a: int, b: int, c: int):
    """The reduced form equivalent to (a, b, c)."""
    while True:
        if not (-a < b <= a):
            k = (a - b) // (2 * a)
            c += (a * k + b) * k
            b += 2 * k * a
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return a, b, c


def _ext_gcd(x: int, y: int):
    """(g, u, v) with u*x + v*y = g = gcd(x, y)."""
    u0, u1, g0, g1 = 1, 0, x, y
    while g1:
        q = g0 // g1
        u0, u1 = u1, u0 - q * u1
        g0, g1 = g1, g0 - q * g1
    v = (g0 - u0 * x) // y if y else 0
    return g0, u0, v


def compose_reduced(a1: int, b1: int, c1: int, a2: int, b2: int, c2: int):
    """Gauss composition of two primitive forms of one discriminant.

    Returns the reduced representative of the product class.
    """
    if a1 > a2:
        a1, b1, c1, a2, b2, c2 = a2, b2, c2, a1, b1, c1
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, u, _ = _ext_gcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, u, v = _ext_gcd(s, d)
        x2, y2 = u, -v
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    a3 = v1 * v2
    b3 = b2 + 2 * v2 * r
    c3 = (c2 * d1 + r * (b2 + v2 * r)) // v1
    return reduce_form(a3, b3, c3)


def prime_form(disc: int, p: int):
    """Canonical unreduced form (p, b, c) of a degree-1 prime over p.

    b is the smallest nonnegative solution of b*b = disc mod 4p (the other
    choice, the conjugate, gives the inverse class).  Returns None when p is
    inert.
    """
    if p == 2:
        m8 = disc % 8
        if m8 == 1:
            b = 1
        elif m8 == 0:
            b = 0
        elif m8 == 4:
            b = 2
        else:
            return None
    elif disc % p == 0:
        b = 0 if disc % 2 == 0 else p
    else:
        if kronecker(disc, p) != 1:
            return None
        r = sqrt_mod_prime(disc % p, p)
        b = r if (r - disc) % 2 == 0 else p - r
        b = min(b, 2 * p - b)
    return p, b, (b * b - disc) // (4 * p)


def reduced_forms(disc: int) -> list:
    """All reduced primitive forms of discriminant disc (< 0), sorted."""
    out = []
    amax = isqrt(-disc // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if (b - disc) % 2:
                continue
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            out.append((a, b, c))
    out.sort()
    return out


def scan_w_forms(disc: int, m: int, members, lo: int, hi: int):
    """Reduced forms of qualifying primes p in [lo, hi).

    Qualifying: p does not divide m, p is split or ramified in the field of
    discriminant disc, and p mod m lies in `members` (the Frobenius target).
    """
    found = set()
    for p in primes_in_range(lo, hi):
        if m % p == 0:
            continue
        if (p % m if m > 1 else 0) not in members:
            continue
        f = prime_form(disc, p)
        if f is None:
            continue
        found.add(reduce_form(*f))
    return found
