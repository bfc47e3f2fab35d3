"""Base fields and ideal class groups.

The base field k is either Q or an imaginary quadratic field of fundamental
discriminant D < 0.  Ideal classes of O_k are represented by reduced
positive-definite binary quadratic forms of discriminant D; the group law is
Gauss composition.  Q is encoded as discriminant 0 with a one-element
sentinel class group (display form (1,0,0)) that never touches the form
kernels.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import _kernels
from .errors import InadmissibleError, InternalInvariantError

# Class groups are stored fully enumerated; beyond this the reduced-form
# enumeration itself becomes the bottleneck and callers get a loud error.
MAX_ABS_DISC = 10_000_000


def _squarefree(n: int) -> bool:
    if n % 4 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 2
    return True


def is_fundamental(disc: int) -> bool:
    """True if disc is the discriminant of an imaginary quadratic field."""
    if disc >= 0:
        return False
    if disc % 4 == 1:
        return _squarefree(-disc)
    if disc % 4 == 0:
        d = disc // 4
        return d % 4 in (2, 3) and _squarefree(-d)
    return False


@dataclass(frozen=True)
class QuadField:
    """Q (disc == 0) or the imaginary quadratic field of discriminant disc."""

    disc: int

    def __post_init__(self):
        if self.disc == 0:
            return
        if not is_fundamental(self.disc):
            raise InadmissibleError(
                f"{self.disc} is not a fundamental discriminant < 0 (use 0 for Q)"
            )
        if -self.disc > MAX_ABS_DISC:
            raise InadmissibleError(
                f"|disc| = {-self.disc} exceeds the supported cap {MAX_ABS_DISC}"
            )

    @staticmethod
    def rationals() -> "QuadField":
        return QuadField(0)

    @staticmethod
    def imaginary_quadratic(disc: int) -> "QuadField":
        if disc == 0:
            raise InadmissibleError("imaginary quadratic field needs disc < 0")
        return QuadField(disc)

    @property
    def is_rationals(self) -> bool:
        return self.disc == 0

    def class_group(self) -> "ClassGroup":
        return class_group(self.disc)

    def __str__(self):
        return "Q" if self.is_rationals else f"Q(sqrt({self.disc}))"


@dataclass(frozen=True, order=True)
class QuadForm:
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        return abs(b) <= a <= c and (b >= 0 if (abs(b) == a or a == c) else True)

    def as_tuple(self):
        return (self.a, self.b, self.c)

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


def principal_form(disc: int) -> QuadForm:
    b = disc % 2
    return QuadForm(1, b, (b * b - disc) // 4)


def reduce(form: QuadForm) -> QuadForm:
    """The reduced form equivalent to `form` (positive definite)."""
    if form.a <= 0:
        raise InadmissibleError(f"form {form} must have a > 0")
    if form.disc >= 0:
        raise InadmissibleError(f"form {form} must have negative discriminant")
    if not form.is_primitive:
        raise InadmissibleError(f"form {form} is not primitive")
    return QuadForm(*_kernels.reduce_form(form.a, form.b, form.c))


def compose(f1: QuadForm, f2: QuadForm) -> QuadForm:
    """Reduced representative of the product of the classes of f1 and f2."""
    if f1.disc != f2.disc:
        raise InadmissibleError(f"discriminant mismatch: {f1.disc} vs {f2.disc}")
    r1, r2 = reduce(f1), reduce(f2)
    return QuadForm(*_kernels.compose_reduced(r1.a, r1.b, r1.c, r2.a, r2.b, r2.c))


class Splitting(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


def splitting(p: int, field: QuadField) -> Splitting:
    """Decomposition type of the rational prime p in the field."""
    if field.is_rationals:
        return Splitting.SPLIT
    if field.disc % p == 0:
        return Splitting.RAMIFIED
    return Splitting.SPLIT if _kernels.kronecker(field.disc, p) == 1 else Splitting.INERT


class ClassGroup:
    """The ideal class group of a QuadField, fully enumerated.

    Elements are indices into the sorted tuple of reduced forms; composition,
    powers and inverses work on indices.  The invariant-factor structure and
    matching generators are computed on first use.
    """

    def __init__(self, disc: int):
        if disc == 0:
            self.disc = 0
            self.forms = (QuadForm(1, 0, 0),)
        else:
            QuadField(disc)  # validation
            self.disc = disc
            self.forms = tuple(QuadForm(*t) for t in _kernels.reduced_forms(disc))
        self._index = {f.as_tuple(): i for i, f in enumerate(self.forms)}
        self.principal_index = (
            0 if disc == 0 else self._index[principal_form(disc).as_tuple()]
        )
        self._comp: dict = {}
        self._inv: dict = {}
        self._structure = None

    # -- basic protocol ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.forms)

    def __eq__(self, other):
        return isinstance(other, ClassGroup) and other.disc == self.disc

    def __hash__(self):
        return hash(("ClassGroup", self.disc))

    def __repr__(self):
        return f"ClassGroup(disc={self.disc}, order={self.order})"

    # -- index arithmetic --------------------------------------------------

    def index_of(self, form: QuadForm) -> int:
        try:
            return self._index[form.as_tuple()]
        except KeyError:
            raise InadmissibleError(f"{form} is not a reduced form of disc {self.disc}")

    def compose_idx(self, i: int, j: int) -> int:
        if self.disc == 0:
            return 0
        if i > j:
            i, j = j, i
        key = (i, j)
        out = self._comp.get(key)
        if out is None:
            f1, f2 = self.forms[i], self.forms[j]
            t = _kernels.compose_reduced(f1.a, f1.b, f1.c, f2.a, f2.b, f2.c)
            out = self._index[t]
            self._comp[key] = out
        return out

    def inverse_idx(self, i: int) -> int:
        if self.disc == 0:
            return 0
        out = self._inv.get(i)
        if out is None:
            f = self.forms[i]
            out = self._index[_kernels.reduce_form(f.a, -f.b, f.c)]
            self._inv[i] = out
        return out

    def pow_idx(self, i: int, e: int) -> int:
        if e < 0:
            i, e = self.inverse_idx(i), -e
        out = self.principal_index
        base = i
        while e:
            if e & 1:
                out = self.compose_idx(out, base)
            base = self.compose_idx(base, base)
            e >>= 1
        return out

    def order_of_idx(self, i: int) -> int:
        o = self.order
        for l in _prime_factors(self.order):
            while o % l == 0 and self.pow_idx(i, o // l) == self.principal_index:
                o //= l
        return o

    # -- public element / subgroup API --------------------------------------

    @property
    def identity(self) -> "IdealClass":
        return IdealClass(self, self.principal_index)

    def class_of(self, form: QuadForm) -> "IdealClass":
        return IdealClass(self, self.index_of(reduce(form)))

    def all_classes(self):
        return [IdealClass(self, i) for i in range(self.order)]

    def trivial_subgroup(self) -> "ClassSubgroup":
        return ClassSubgroup(self, frozenset([self.principal_index]), (), validate=False)

    def full_subgroup(self) -> "ClassSubgroup":
        return ClassSubgroup(
            self, frozenset(range(self.order)), self.structure()[1], validate=False
        )

    def structure(self):
        """(invariant_factors, generator_indices) with factors in a chain
        d_{i+1} | d_i, largest first."""
        if self._structure is None:
            self._structure = _abelian_structure(
                list(range(self.order)),
                self.compose_idx,
                self.pow_idx,
                self.principal_index,
                self.order_of_idx,
            )
        return self._structure

    @property
    def invariant_factors(self):
        return self.structure()[0]

    @property
    def generator_forms(self):
        return tuple(self.forms[i] for i in self.structure()[1])


@lru_cache(maxsize=None)
def class_group(disc: int) -> ClassGroup:
    """The class group of discriminant disc (0 encodes Q)."""
    return ClassGroup(disc)


@dataclass(frozen=True)
class IdealClass:
    group: ClassGroup
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.group.order:
            raise InadmissibleError(f"class index {self.index} out of range")

    @property
    def form(self) -> QuadForm:
        return self.group.forms[self.index]

    @property
    def is_principal(self) -> bool:
        return self.index == self.group.principal_index

    def __mul__(self, other: "IdealClass") -> "IdealClass":
        _check_same_group(self.group, other.group)
        return IdealClass(self.group, self.group.compose_idx(self.index, other.index))

    def __pow__(self, e: int) -> "IdealClass":
        return IdealClass(self.group, self.group.pow_idx(self.index, e))

    def inverse(self) -> "IdealClass":
        return IdealClass(self.group, self.group.inverse_idx(self.index))

    def order(self) -> int:
        return self.group.order_of_idx(self.index)

    def __str__(self):
        return str(self.form)


def _check_same_group(g1: ClassGroup, g2: ClassGroup):
    if g1.disc != g2.disc:
        raise InadmissibleError(
            f"operands live in different class groups ({g1.disc} vs {g2.disc})"
        )


class ClassSubgroup:
    """A subgroup of a ClassGroup: member index set plus generator indices.

    Constructions that are subgroups by algebra (closures, powers, products)
    pass validate=False; member sets supplied from outside get the O(|S|^2)
    closure check."""

    def __init__(
        self,
        group: ClassGroup,
        members: frozenset,
        generators: tuple = (),
        validate: bool = True,
    ):
        self.group = group
        self.members = frozenset(members)
        self.generators = tuple(generators)
        if group.principal_index not in self.members:
            raise InadmissibleError("subgroup must contain the principal class")
        if validate:
            for i in self.members:
                if group.inverse_idx(i) not in self.members:
                    raise InadmissibleError("member set not closed under inverse")
                for j in self.members:
                    if group.compose_idx(i, j) not in self.members:
                        raise InadmissibleError(
                            "member set not closed under composition"
                        )

    # -- queries -------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index_in_parent(self) -> int:
        return self.group.order // self.order

    def is_full(self) -> bool:
        return self.order == self.group.order

    def is_trivial(self) -> bool:
        return self.order == 1

    def sorted_members(self):
        return sorted(self.members)

    def member_forms(self):
        return [self.group.forms[i] for i in self.sorted_members()]

    def contains_class(self, cls: IdealClass) -> bool:
        _check_same_group(self.group, cls.group)
        return cls.index in self.members

    def structure(self):
        return _abelian_structure(
            self.sorted_members(),
            self.group.compose_idx,
            self.group.pow_idx,
            self.group.principal_index,
            self.group.order_of_idx,
        )

    @property
    def invariant_factors(self):
        return self.structure()[0]

    def generator_forms(self):
        return tuple(self.group.forms[i] for i in self.structure()[1])

    # -- algebra -------------------------------------------------------------

    def power(self, e: int) -> "ClassSubgroup":
        """Image of the subgroup under x -> x**e (a subgroup again)."""
        if e < 0:
            raise InadmissibleError("subgroup power wants e >= 0")
        members = frozenset(self.group.pow_idx(i, e) for i in self.members)
        gens = tuple(sorted({self.group.pow_idx(i, e) for i in self.generators}))
        return ClassSubgroup(self.group, members, gens, validate=False)

    def product(self, other: "ClassSubgroup") -> "ClassSubgroup":
        _check_same_group(self.group, other.group)
        members = frozenset(
            self.group.compose_idx(i, j) for i in self.members for j in other.members
        )
        return ClassSubgroup(
            self.group,
            members,
            tuple(sorted(set(self.generators) | set(other.generators))),
            validate=False,
        )

    def __eq__(self, other):
        return (
            isinstance(other, ClassSubgroup)
            and self.group.disc == other.group.disc
            and self.members == other.members
        )

    def __hash__(self):
        return hash((self.group.disc, self.members))

    def __repr__(self):
        return (
            f"ClassSubgroup(disc={self.group.disc}, order={self.order}, "
            f"members={[str(f) for f in self.member_forms()]})"
        )


# -- module-level operations ---------------------------------------------------


def prime_class(p: int, field: QuadField, conjugate: bool = False) -> IdealClass:
    """Ideal class of a degree-1 prime over p.

    The canonical choice takes the smaller nonnegative b with b*b = D mod 4p;
    `conjugate` selects the other prime above p (the inverse class).
    """
    if field.is_rationals:
        return class_group(0).identity
    if splitting(p, field) is Splitting.INERT:
        raise InadmissibleError(f"{p} is inert in {field}; no degree-1 prime above it")
    t = _kernels.prime_form(field.disc, p)
    if t is None:
        raise InternalInvariantError(f"prime_form failed for split/ramified p={p}")
    a, b, c = t
    if conjugate:
        b = -b
    cg = class_group(field.disc)
    return IdealClass(cg, cg._index[_kernels.reduce_form(a, b, c)])


def subgroup_generate(cg: ClassGroup, gens) -> ClassSubgroup:
    """Smallest subgroup containing the given IdealClass generators."""
    gen_idx = []
    for g in gens:
        _check_same_group(cg, g.group)
        gen_idx.append(g.index)
    members = {cg.principal_index}
    for g in gen_idx:
        if g in members:
            continue
        coset = {cg.compose_idx(x, g) for x in members}
        while not coset <= members:
            members |= coset
            coset = {cg.compose_idx(x, g) for x in coset}
    return ClassSubgroup(
        cg, frozenset(members), tuple(sorted(set(gen_idx))), validate=False
    )


def subgroup_power(s: ClassSubgroup, e: int) -> ClassSubgroup:
    return s.power(e)


def subgroup_product(s1: ClassSubgroup, s2: ClassSubgroup) -> ClassSubgroup:
    return s1.product(s2)


def subgroup_eq(s1: ClassSubgroup, s2: ClassSubgroup) -> bool:
    _check_same_group(s1.group, s2.group)
    return s1 == s2


def subgroup_contains(s1: ClassSubgroup, s2: ClassSubgroup) -> bool:
    """True when s1 contains s2."""
    _check_same_group(s1.group, s2.group)
    return s2.members <= s1.members


# -- abelian structure ---------------------------------------------------------


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _abelian_structure(elems, mul, pow_fn, identity, order_fn):
    """Invariant factors and matching generators of a finite abelian group.

    `elems` lists the member indices; `mul`, `pow_fn`, `order_fn` operate on
    indices.  Works prime by prime: a basis of each Sylow subgroup is found by
    repeatedly taking an element of maximal order in the quotient by the span
    so far and lifting it through its coset to an element of that exact
    order (such a lift exists because the span is a direct summand at every
    step).  The per-prime bases are then merged into an invariant-factor
    chain, largest factor first.
    """
    h = len(elems)
    if h == 1:
        return (), ()
    per_prime = []  # (l, [(order, generator_index), ...] descending)
    for l in _prime_factors(h):
        sylow = [x for x in elems if _is_l_power(order_fn(x), l)]
        per_prime.append((l, _l_group_basis(sylow, l, mul, pow_fn, identity, order_fn)))

    width = max(len(basis) for _, basis in per_prime)
    factors, gens = [], []
    for i in range(width):
        d, g = 1, identity
        for l, basis in per_prime:
            if i < len(basis):
                o, x = basis[i]
                d *= o
                g = mul(g, x)
        factors.append(d)
        gens.append(g)

    # span must hit every element exactly once
    span = {identity}
    for d, g in zip(factors, gens):
        span = {mul(s, pow_fn(g, k)) for s in span for k in range(d)}
    if len(span) != h or any(x not in span for x in elems):
        raise InternalInvariantError("abelian structure generators do not span")
    return tuple(factors), tuple(gens)


def _is_l_power(n: int, l: int) -> bool:
    while n % l == 0:
        n //= l
    return n == 1


def _l_group_basis(sylow, l, mul, pow_fn, identity, order_fn):
    """Basis [(order, index), ...] of an abelian l-group, orders descending."""
    sylow = sorted(sylow)
    span = {identity}
    basis = []
    while len(span) < len(sylow):
        best_x, best_q = None, 0
        for x in sylow:
            if x in span:
                continue
            q, y = 1, x
            while y not in span:
                y = pow_fn(y, l)
                q *= l
            if q > best_q:
                best_q, best_x = q, x
        lifted = None
        for s in sorted(span):
            y = mul(best_x, s)
            if order_fn(y) == best_q:
                lifted = y
                break
        if lifted is None:
            raise InternalInvariantError("no exact-order lift in coset")
        basis.append((best_q, lifted))
        span = {mul(s, pow_fn(lifted, k)) for s in span for k in range(best_q)}
    return basis
