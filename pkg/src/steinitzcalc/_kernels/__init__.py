"""Arithmetic kernel dispatch.

Imports the compiled accelerator when it is available (and not disabled via
STEINITZCALC_PURE=1) and falls back to the pure-Python implementation
otherwise.  Each public function guards the compiled path with the int64
windows `_speedups` assumes and silently uses the pure path beyond them, so
callers never need to care which backend is active.
"""

import os

from . import pure

_fast = None
if not os.environ.get("STEINITZCALC_PURE"):
    try:
        from . import _speedups as _fast  # type: ignore[no-redef]
    except ImportError:
        _fast = None

BACKEND = "speedups" if _fast is not None else "pure"

# Safe operand windows for the compiled kernels (see _speedups.pyx).
_LIM_GENERIC = 1 << 62
_LIM_PRIME = 1 << 30
_LIM_FORM_A = 1 << 30
_LIM_FORM_B = 1 << 30
_LIM_FORM_C = 1 << 58
_LIM_COMPOSE_AB = 1 << 15
_LIM_COMPOSE_C = 1 << 45
_LIM_DISC = 1 << 45


if _fast is None:
    kronecker = pure.kronecker
    primes_in_range = pure.primes_in_range
    sqrt_mod_prime = pure.sqrt_mod_prime
    reduce_form = pure.reduce_form
    compose_reduced = pure.compose_reduced
    prime_form = pure.prime_form
    reduced_forms = pure.reduced_forms
    scan_w_forms = pure.scan_w_forms
else:

    def kronecker(a, n):
        if abs(a) < _LIM_GENERIC and abs(n) < _LIM_GENERIC:
            return _fast.kronecker(a, n)
        return pure.kronecker(a, n)

    def primes_in_range(lo, hi):
        if hi < _LIM_GENERIC:
            return _fast.primes_in_range(lo, hi)
        return pure.primes_in_range(lo, hi)

    def sqrt_mod_prime(a, p):
        if p < _LIM_PRIME and abs(a) < _LIM_GENERIC:
            return _fast.sqrt_mod_prime(a, p)
        return pure.sqrt_mod_prime(a, p)

    def reduce_form(a, b, c):
        if a < _LIM_FORM_A and abs(b) < _LIM_FORM_B and abs(c) < _LIM_FORM_C:
            return _fast.reduce_form(a, b, c)
        return pure.reduce_form(a, b, c)

    def compose_reduced(a1, b1, c1, a2, b2, c2):
        if (
            max(a1, a2, abs(b1), abs(b2)) < _LIM_COMPOSE_AB
            and max(abs(c1), abs(c2)) < _LIM_COMPOSE_C
        ):
            return _fast.compose_reduced(a1, b1, c1, a2, b2, c2)
        return pure.compose_reduced(a1, b1, c1, a2, b2, c2)

    def prime_form(disc, p):
        if p < _LIM_PRIME and abs(disc) < _LIM_DISC:
            return _fast.prime_form(disc, p)
        return pure.prime_form(disc, p)

    def reduced_forms(disc):
        if abs(disc) < _LIM_DISC:
            return _fast.reduced_forms(disc)
        return pure.reduced_forms(disc)

    def scan_w_forms(disc, m, members, lo, hi):
        if hi < _LIM_PRIME and abs(disc) < _LIM_DISC:
            return _fast.scan_w_forms(disc, m, members, lo, hi)
        return pure.scan_w_forms(disc, m, members, lo, hi)
