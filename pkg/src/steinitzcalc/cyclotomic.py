"""Cyclotomic Galois groups as unit subgroups mod m, and W-groups.

Gal(k(zeta_m)/k) embeds in (Z/mZ)* through its action on zeta_m; over Q it
is everything, over an imaginary quadratic field it is the kernel of the
quadratic character when the field sits inside Q(zeta_m).  W(k, E), for E the
fixed field of a subgroup S of that Galois group, is the subgroup of Cl(k)
generated by classes of degree-1 primes whose Frobenius lands in S; it is
computed by sieving rational primes and certified by a doubling-window
stabilization rule (two consecutive quiet windows), since no closed formula
is available.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd, log

from . import _kernels, grouptree
from .classgroup import ClassGroup, ClassSubgroup, QuadField, class_group
from .errors import (
    EnumerationCeilingError,
    InadmissibleError,
    InternalInvariantError,
)

DEFAULT_HARD_CEILING = 100_000_000
INITIAL_BOUND_CAP = 1_000_000
_SCAN_CHUNK = 1 << 16


def hard_ceiling() -> int:
    value = os.environ.get("STEINITZ_PRIME_CEILING")
    if value is None:
        return DEFAULT_HARD_CEILING
    try:
        return int(value)
    except ValueError:
        raise InadmissibleError(f"STEINITZ_PRIME_CEILING={value!r} is not an integer")


@dataclass(frozen=True)
class CycloSubgroup:
    """A subgroup of (Z/mZ)*, given by its sorted member set."""

    modulus: int
    members: frozenset

    def __post_init__(self):
        m = self.modulus
        if m < 1:
            raise InadmissibleError(f"modulus {m} < 1")
        mem = frozenset(int(a) % m if m > 1 else 0 for a in self.members)
        object.__setattr__(self, "members", mem)
        if m == 1:
            if mem != frozenset([0]):
                raise InadmissibleError("mod-1 subgroup must be {0}")
            return
        if 1 not in mem:
            raise InadmissibleError("subgroup must contain 1")
        for a in mem:
            if gcd(a, m) != 1:
                raise InadmissibleError(f"member {a} not coprime to {m}")
            if pow(a, -1, m) not in mem:
                raise InadmissibleError(f"member set not closed under inverse ({a})")
            for b in mem:
                if (a * b) % m not in mem:
                    raise InadmissibleError(
                        f"member set not closed under multiplication ({a},{b})"
                    )

    @property
    def order(self) -> int:
        return len(self.members)

    def sorted_members(self):
        return sorted(self.members)

    def contains(self, other: "CycloSubgroup") -> bool:
        return self.modulus == other.modulus and other.members <= self.members

    def __str__(self):
        return f"<{','.join(map(str, self.sorted_members()))}> mod {self.modulus}"


@dataclass(frozen=True)
class FixedFieldDescriptor:
    """Cache key naming the fixed field of a subgroup of Gal(k(zeta_m)/k)."""

    modulus: int
    members: tuple

    def label(self) -> str:
        return f"fixed field of {{{','.join(map(str, self.members))}}} in k(zeta_{self.modulus})"


def fixed_field_descriptor(s: CycloSubgroup) -> FixedFieldDescriptor:
    return FixedFieldDescriptor(s.modulus, tuple(s.sorted_members()))


def unit_group(m: int) -> CycloSubgroup:
    if m == 1:
        return CycloSubgroup(1, frozenset([0]))
    return CycloSubgroup(m, frozenset(a for a in range(1, m + 1) if gcd(a, m) == 1))


def galois_group(field: QuadField, m: int) -> CycloSubgroup:
    """Gal(k(zeta_m)/k) inside (Z/mZ)*.

    Over Q this is the full unit group.  Over the field of discriminant D it
    is the kernel of the character a -> kronecker(D, a) when |D| divides m
    (i.e. k lies in Q(zeta_m)), and the full unit group otherwise.
    """
    if m < 1:
        raise InadmissibleError(f"modulus {m} < 1")
    full = unit_group(m)
    if field.is_rationals or m == 1:
        return full
    if m % (-field.disc):
        return full
    kept = frozenset(
        a for a in full.members if _kernels.kronecker(field.disc, a) == 1
    )
    return CycloSubgroup(m, kept)


def g_k_mu_tau(
    field: QuadField,
    g_tree: grouptree.GroupTree,
    mu: grouptree.Action,
    tau: grouptree.AbElement,
) -> CycloSubgroup:
    """Exponents a in Gal(k(zeta_o)/k) realized by the action on tau.

    Collects { a : mu(g1)(tau) = tau^a for some g1 }.  This is a subgroup
    whenever mu is an action (closure under products and inverses holds by
    the same calculation that proves it abstractly); failure of that check
    here is an internal error, not bad input.
    """
    h = mu.h
    o = h.element_order(tau)
    if o == 1:
        raise InadmissibleError("tau must not be the identity")
    if mu.g_tree != g_tree:
        raise InadmissibleError("action does not belong to the given acting tree")
    if grouptree.order(g_tree) > grouptree.ENUMERATION_CAP:
        raise InadmissibleError("acting group exceeds the enumeration cap")
    gal = galois_group(field, o)
    powers = {}
    cur = h.identity
    for a in range(o):
        powers.setdefault(cur, a)
        cur = h.add(cur, tau)
    realized = set()
    for g_el in grouptree.elements(g_tree):
        img = mu.apply(g_el, tau)
        a = powers.get(img)
        if a is not None:
            realized.add(a % o)
    members = frozenset(a for a in gal.members if (a % o if o > 1 else 0) in realized)
    try:
        return CycloSubgroup(o, members)
    except InadmissibleError as exc:
        raise InternalInvariantError(
            f"realized exponent set is not a subgroup: {exc}"
        ) from exc


@dataclass(frozen=True)
class WCertificate:
    """Audit record of one W-group enumeration.

    `qualifying_hits` counts distinct reduced forms met among qualifying
    primes (a lower bound on the number of qualifying primes; what matters
    is that it is positive before stabilization is accepted)."""

    initial_bound: int
    final_bound: int
    windows: tuple  # (lo, hi, new_generator_count) per window
    qualifying_hits: int
    full_group_early_exit: bool


@dataclass(frozen=True)
class WGroup:
    subgroup: ClassSubgroup
    descriptor: FixedFieldDescriptor
    certificate: WCertificate


def default_initial_bound(field: QuadField, m: int) -> int:
    h = class_group(field.disc).order
    est = int(10 * (h * m * log(abs(field.disc) + 3)) ** 2)
    return max(100, min(est, INITIAL_BOUND_CAP))


def w_group(
    field: QuadField,
    m: int,
    s: CycloSubgroup,
    bound: int = None,
    ceiling: int = None,
) -> WGroup:
    """Subgroup of Cl(k) generated by classes of degree-1 primes p with
    p mod m in s (p not dividing m; split and ramified primes both count).

    Scans [2, bound], then doubling windows until the generated subgroup is
    unchanged across two consecutive windows with at least one qualifying
    prime seen overall; stops early once the full class group is reached.
    Raises EnumerationCeilingError at the hard ceiling: either no qualifying
    prime was ever found (a configuration error; qualifying primes have
    positive density) or the subgroup kept growing.
    """
    if s.modulus != m:
        raise InadmissibleError(f"subgroup modulus {s.modulus} != {m}")
    gal = galois_group(field, m)
    if not gal.contains(s):
        raise InadmissibleError(f"{s} is not inside Gal(k(zeta_{m})/k) = {gal}")
    descriptor = fixed_field_descriptor(s)

    cg = class_group(field.disc)
    if bound is None:
        bound = default_initial_bound(field, m)
    if ceiling is None:
        ceiling = hard_ceiling()
    if bound < 2:
        raise InadmissibleError(f"initial bound {bound} < 2")
    if bound > ceiling:
        raise InadmissibleError(f"initial bound {bound} exceeds the ceiling {ceiling}")

    gens: set = set()
    members = frozenset([cg.principal_index])
    n_qual = 0

    def full() -> bool:
        return len(members) == cg.order

    def scan(lo: int, hi: int) -> int:
        """Absorb qualifying primes in [lo, hi); returns # new generators."""
        nonlocal members, n_qual
        new = 0
        for chunk_lo in range(lo, hi, _SCAN_CHUNK):
            if full():
                break
            chunk_hi = min(chunk_lo + _SCAN_CHUNK, hi)
            found = _kernels.scan_w_forms(
                field.disc, m, s.members, chunk_lo, chunk_hi
            )
            n_qual += len(found)  # distinct forms, enough for the "seen one" rule
            fresh = {cg._index[t] for t in found} - gens
            if fresh:
                new += len(fresh)
                gens.update(fresh)
                members = _grow(cg, members, fresh)
        return new

    windows = []
    if full():  # trivial class group: nothing to enumerate
        cert = WCertificate(bound, 0, (), 0, True)
        return WGroup(_as_subgroup(cg, members, gens), descriptor, cert)

    windows.append((2, bound, scan(2, bound + 1)))
    quiet = 0
    lo, hi = bound + 1, 2 * bound
    while not full() and not (quiet >= 2 and n_qual > 0):
        if lo > ceiling:
            if n_qual == 0:
                raise EnumerationCeilingError(
                    f"no qualifying prime below ceiling {ceiling} for W "
                    f"({field}, m={m}, S={s}); check the configuration"
                )
            raise EnumerationCeilingError(
                f"W enumeration did not stabilize below ceiling {ceiling}"
            )
        hi = min(hi, ceiling)
        new = scan(lo, hi + 1)
        windows.append((lo, hi, new))
        quiet = quiet + 1 if (new == 0 and n_qual > 0) else 0
        lo, hi = hi + 1, 2 * hi

    cert = WCertificate(
        initial_bound=bound,
        final_bound=windows[-1][1],
        windows=tuple(windows),
        qualifying_hits=n_qual,
        full_group_early_exit=full() and quiet < 2,
    )
    return WGroup(_as_subgroup(cg, members, gens), descriptor, cert)


def _grow(cg: ClassGroup, members: frozenset, fresh) -> frozenset:
    """Closure of the subgroup `members` with new generators, coset by coset
    (the parent is abelian, so the union of cosets S*g^k is the subgroup)."""
    out = set(members)
    for g in fresh:
        if g in out:
            continue
        coset = {cg.compose_idx(x, g) for x in out}
        while not coset <= out:
            out |= coset
            coset = {cg.compose_idx(x, g) for x in coset}
    return frozenset(out)


def _as_subgroup(cg: ClassGroup, members: frozenset, gens) -> ClassSubgroup:
    return ClassSubgroup(cg, members, tuple(sorted(gens)), validate=False)
