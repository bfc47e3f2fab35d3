"""Structure trees for the supported solvable groups.

A tree is built from abelian leaves (invariant factors, largest first, with a
divisibility chain), semidirect nodes H x| G (H abelian of odd order coprime
to |G|, with an explicit action of G on H) and direct-product nodes.  All
types are immutable after construction; every operation is pure.

Actions are accepted on any generating set of the acting group and completed
by breadth-first closure with consistency checking; matrices are r x r over
the integers, column j giving the exponent vector of the image of the j-th
generator of H.

Canonical element indexing is mixed-radix over coordinates, leaves first,
left-to-right, so tables and traces are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm
from random import Random

from .errors import InadmissibleError, InternalInvariantError

ENUMERATION_CAP = 100_000
_FULL_HOM_CHECK_CAP = 512
_FULL_ASSOC_CAP = 300


def _l_part(n: int, l: int) -> int:
    out = 1
    while n % l == 0:
        n //= l
        out *= l
    return out


def _prime_factors(n: int):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# -- abelian groups and their elements ----------------------------------------


@dataclass(frozen=True)
class AbElement:
    coords: tuple

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class AbelianGroup:
    """C(n_1) x ... x C(n_r) with n_{i+1} | n_i, each n_i >= 2."""

    invariant_factors: tuple

    def __post_init__(self):
        fac = tuple(int(n) for n in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fac)
        # empty factor list encodes the trivial group
        for n in fac:
            if n < 2:
                raise InadmissibleError(f"invariant factor {n} < 2")
        for a, b in zip(fac, fac[1:]):
            if a % b:
                raise InadmissibleError(
                    f"invariant factors {fac} violate the divisibility chain"
                )

    @property
    def order(self) -> int:
        out = 1
        for n in self.invariant_factors:
            out *= n
        return out

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def element(self, coords) -> AbElement:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise InadmissibleError(
                f"want {self.rank} coordinates, got {len(coords)}"
            )
        return AbElement(tuple(c % n for c, n in zip(coords, self.invariant_factors)))

    @property
    def identity(self) -> AbElement:
        return AbElement((0,) * self.rank)

    def add(self, a: AbElement, b: AbElement) -> AbElement:
        return AbElement(
            tuple((x + y) % n for x, y, n in zip(a.coords, b.coords, self.invariant_factors))
        )

    def neg(self, a: AbElement) -> AbElement:
        return AbElement(tuple((-x) % n for x, n in zip(a.coords, self.invariant_factors)))

    def scale(self, a: AbElement, k: int) -> AbElement:
        return AbElement(tuple((x * k) % n for x, n in zip(a.coords, self.invariant_factors)))

    def elements(self):
        for coords in product(*(range(n) for n in self.invariant_factors)):
            yield AbElement(coords)

    def index_of(self, a: AbElement) -> int:
        idx = 0
        for c, n in zip(a.coords, self.invariant_factors):
            idx = idx * n + c
        return idx

    def element_at(self, idx: int) -> AbElement:
        coords = []
        for n in reversed(self.invariant_factors):
            coords.append(idx % n)
            idx //= n
        return AbElement(tuple(reversed(coords)))

    def element_order(self, a: AbElement) -> int:
        return lcm(*(n // gcd(n, c) for c, n in zip(a.coords, self.invariant_factors)))

    def sylow_part(self, l: int):
        """All elements of the l-Sylow subgroup H(l), in canonical order."""
        if self.order % l:
            raise InadmissibleError(f"{l} does not divide |H| = {self.order}")
        axes = []
        for n in self.invariant_factors:
            nl = _l_part(n, l)
            stride = n // nl
            axes.append([k * stride for k in range(nl)])
        return [AbElement(coords) for coords in product(*axes)]

    def tau_l(self, a: AbElement, l: int) -> AbElement:
        """Projection of a into the l-Sylow: a ** (o(a) / o(a)_l)."""
        if self.order % l:
            raise InadmissibleError(f"{l} does not divide |H| = {self.order}")
        o = self.element_order(a)
        return self.scale(a, o // _l_part(o, l))

    def __str__(self):
        if not self.invariant_factors:
            return "C(1)"
        return " x ".join(f"C({n})" for n in self.invariant_factors)


# -- actions -------------------------------------------------------------------


def _canonical_matrix(matrix, factors):
    return tuple(
        tuple(int(x) % n for x in row) for row, n in zip(matrix, factors)
    )


def _mat_apply(matrix, coords, factors):
    return tuple(
        sum(m * c for m, c in zip(row, coords)) % n
        for row, n in zip(matrix, factors)
    )


def _mat_mul(m1, m2, factors):
    r = len(factors)
    return tuple(
        tuple(sum(m1[i][k] * m2[k][j] for k in range(r)) % factors[i] for j in range(r))
        for i in range(r)
    )


def _det(matrix) -> int:
    m = [list(row) for row in matrix]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


class Action:
    """A finished action table: every element of the acting tree mapped to an
    automorphism matrix of H.  Build with `validate_action`."""

    def __init__(self, h: AbelianGroup, g_tree: "GroupTree", table: dict):
        self.h = h
        self.g_tree = g_tree
        self._table = table
        self._items = tuple(sorted(table.items(), key=lambda kv: str(kv[0])))

    def matrix(self, g_el):
        try:
            return self._table[g_el]
        except KeyError:
            raise InadmissibleError(f"element {g_el} is not in the action table")

    def apply(self, g_el, a: AbElement) -> AbElement:
        return AbElement(
            _mat_apply(self.matrix(g_el), a.coords, self.h.invariant_factors)
        )

    def items(self):
        return self._items

    def __eq__(self, other):
        return (
            isinstance(other, Action)
            and self.h == other.h
            and self.g_tree == other.g_tree
            and self._items == other._items
        )

    def __hash__(self):
        return hash((self.h, self.g_tree, self._items))


def trivial_action(h: AbelianGroup, g_tree: "GroupTree") -> Action:
    if order(g_tree) > ENUMERATION_CAP:
        raise InadmissibleError("acting group exceeds the enumeration cap")
    ident = tuple(
        tuple(1 if i == j else 0 for j in range(h.rank)) for i in range(h.rank)
    )
    return validate_action(h, g_tree, [(el, ident) for el in elements(g_tree)])


def inversion_action(h: AbelianGroup, g_tree: "GroupTree", on) -> Action:
    """Action sending each generator of H to its inverse under tree element
    `on` (and fixing it under whatever closure dictates)."""
    inv = tuple(
        tuple(-1 if i == j else 0 for j in range(h.rank)) for i in range(h.rank)
    )
    return validate_action(h, g_tree, [(on, inv)])


def validate_action(h: AbelianGroup, g_tree: "GroupTree", mu, cap: int = None):
    """Complete an action given on a generating set and verify it.

    `mu` is an Action or an iterable of (tree element of g, matrix) pairs.
    Completion is breadth-first closure over left multiplication; two words
    reaching one element with different matrices is an error, as is a matrix
    that is not an automorphism of h, generators that do not generate, or an
    acting group larger than the enumeration cap.  Verifying an already
    complete table returns an equal Action (idempotence).
    """
    cap = ENUMERATION_CAP if cap is None else cap
    n_g = order(g_tree)
    if n_g > cap:
        raise InadmissibleError(f"acting group order {n_g} exceeds cap {cap}")
    factors = h.invariant_factors
    r = h.rank

    if isinstance(mu, Action):
        pairs = [(g, m) for g, m in mu.items()]
    else:
        pairs = list(mu)
    gens = []
    for g_el, matrix in pairs:
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        if len(matrix) != r or any(len(row) != r for row in matrix):
            raise InadmissibleError(f"action matrix for {g_el} is not {r}x{r}")
        canon = _canonical_matrix(matrix, factors)
        _check_automorphism(canon, h, g_el)
        gens.append((g_el, canon))

    ident_el = identity(g_tree)
    ident_mat = _canonical_matrix(
        [[1 if i == j else 0 for j in range(r)] for i in range(r)], factors
    )
    table = {ident_el: ident_mat}
    queue = [ident_el]
    while queue:
        cur = queue.pop(0)
        for g_el, g_mat in gens:
            nxt = multiply(g_tree, g_el, cur)
            mat = _mat_mul(g_mat, table[cur], factors)
            seen = table.get(nxt)
            if seen is None:
                table[nxt] = mat
                queue.append(nxt)
            elif seen != mat:
                raise InadmissibleError(
                    f"inconsistent action: two words for {nxt} give different matrices"
                )
    if len(table) != n_g:
        raise InadmissibleError(
            f"action generators reach {len(table)} of {n_g} elements"
        )

    for g_el, mat in table.items():
        _check_automorphism(mat, h, g_el)

    els = list(elements(g_tree))
    if n_g <= _FULL_HOM_CHECK_CAP:
        checks = ((a, b) for a in els for b in els)
    else:
        rng = Random(0)
        checks = ((rng.choice(els), rng.choice(els)) for _ in range(4 * n_g))
    for a, b in checks:
        left = table[multiply(g_tree, a, b)]
        right = _mat_mul(table[a], table[b], factors)
        if left != right:
            raise InadmissibleError(
                f"action is not a homomorphism at ({a}, {b})"
            )
    return Action(h, g_tree, table)


def _check_automorphism(mat, h: AbelianGroup, g_el):
    factors = h.invariant_factors
    r = h.rank
    for j in range(r):
        img = AbElement(tuple(mat[i][j] for i in range(r)))
        if factors[j] % h.element_order(img):
            raise InadmissibleError(
                f"matrix for {g_el} is not well defined: column {j} image has "
                f"order {h.element_order(img)}, want a divisor of {factors[j]}"
            )
    for l in _prime_factors(factors[0]):
        rl = sum(1 for n in factors if n % l == 0)
        sub = [row[:rl] for row in mat[:rl]]
        if _det(sub) % l == 0:
            raise InadmissibleError(
                f"matrix for {g_el} is not invertible mod {l}"
            )


# -- tree nodes ----------------------------------------------------------------


class GroupTree:
    pass


@dataclass(frozen=True)
class AbelianLeaf(GroupTree):
    group: AbelianGroup

    def __str__(self):
        return str(self.group)


@dataclass(frozen=True)
class Semidirect(GroupTree):
    h: AbelianGroup
    g: GroupTree
    mu: Action

    def __post_init__(self):
        if self.h.order % 2 == 0:
            raise InadmissibleError(
                f"semidirect kernel must have odd order, got |H| = {self.h.order}"
            )
        if gcd(self.h.order, order(self.g)) != 1:
            raise InadmissibleError(
                f"|H| = {self.h.order} and |G| = {order(self.g)} are not coprime"
            )
        if self.mu.h != self.h or self.mu.g_tree != self.g:
            raise InadmissibleError("action does not match the semidirect factors")

    def __str__(self):
        return f"({self.h}) x| ({self.g})"


@dataclass(frozen=True)
class Direct(GroupTree):
    left: GroupTree
    right: GroupTree

    def __post_init__(self):
        lo, ro = order(self.left), order(self.right)
        if lo % 2 == 0 and ro % 2 == 0:
            if two_sylow_cyclic(self.left) or two_sylow_cyclic(self.right):
                raise InadmissibleError(
                    "direct product of two even-order factors needs both "
                    "2-Sylow subgroups noncyclic"
                )

    def __str__(self):
        return f"({self.left}) x ({self.right})"


def leaf(*invariant_factors) -> AbelianLeaf:
    return AbelianLeaf(AbelianGroup(tuple(invariant_factors)))


def semidirect(h: AbelianGroup, g_tree: GroupTree, mu_pairs) -> Semidirect:
    mu = mu_pairs if isinstance(mu_pairs, Action) else validate_action(h, g_tree, mu_pairs)
    return Semidirect(h, g_tree, mu)


def dihedral_tree(n: int) -> Semidirect:
    """D_n = C(n) x| C(2) with the inversion action (n odd)."""
    h = AbelianGroup((n,))
    c2 = leaf(2)
    return Semidirect(h, c2, inversion_action(h, c2, AbElement((1,))))


# -- tree operations ------------------------------------------------------------


def order(tree: GroupTree) -> int:
    if isinstance(tree, AbelianLeaf):
        return tree.group.order
    if isinstance(tree, Semidirect):
        return tree.h.order * order(tree.g)
    if isinstance(tree, Direct):
        return order(tree.left) * order(tree.right)
    raise InadmissibleError(f"not a group tree: {tree!r}")


def is_odd(tree: GroupTree) -> bool:
    return order(tree) % 2 == 1


def two_sylow_cyclic(tree: GroupTree) -> bool:
    """True when the order is even and the 2-Sylow subgroup is cyclic.

    Odd-order trees report False; check `is_odd` separately (their trivial
    2-Sylow would otherwise count as cyclic)."""
    if isinstance(tree, AbelianLeaf):
        fac = tree.group.invariant_factors
        return bool(fac) and fac[0] % 2 == 0 and (len(fac) == 1 or fac[1] % 2 == 1)
    if isinstance(tree, Semidirect):
        return two_sylow_cyclic(tree.g)
    if isinstance(tree, Direct):
        lo, ro = order(tree.left), order(tree.right)
        if lo % 2 == 0 and ro % 2 == 1:
            return two_sylow_cyclic(tree.left)
        if lo % 2 == 1 and ro % 2 == 0:
            return two_sylow_cyclic(tree.right)
        return False
    raise InadmissibleError(f"not a group tree: {tree!r}")


def identity(tree: GroupTree):
    if isinstance(tree, AbelianLeaf):
        return tree.group.identity
    if isinstance(tree, Semidirect):
        return (tree.h.identity, identity(tree.g))
    if isinstance(tree, Direct):
        return (identity(tree.left), identity(tree.right))
    raise InadmissibleError(f"not a group tree: {tree!r}")


def multiply(tree: GroupTree, x, y):
    try:
        if isinstance(tree, AbelianLeaf):
            return tree.group.add(x, y)
        if isinstance(tree, Semidirect):
            (h1, g1), (h2, g2) = x, y
            return (
                tree.h.add(h1, tree.mu.apply(g1, h2)),
                multiply(tree.g, g1, g2),
            )
        if isinstance(tree, Direct):
            (l1, r1), (l2, r2) = x, y
            return (multiply(tree.left, l1, l2), multiply(tree.right, r1, r2))
    except (TypeError, ValueError, AttributeError) as exc:
        raise InadmissibleError(f"element shape does not match tree: {exc}") from exc
    raise InadmissibleError(f"not a group tree: {tree!r}")


def inverse(tree: GroupTree, x):
    if isinstance(tree, AbelianLeaf):
        return tree.group.neg(x)
    if isinstance(tree, Semidirect):
        h, g = x
        ginv = inverse(tree.g, g)
        return (tree.h.neg(tree.mu.apply(ginv, h)), ginv)
    if isinstance(tree, Direct):
        l, r = x
        return (inverse(tree.left, l), inverse(tree.right, r))
    raise InadmissibleError(f"not a group tree: {tree!r}")


def elements(tree: GroupTree):
    """All elements in canonical order (mixed-radix, leaves first)."""
    if isinstance(tree, AbelianLeaf):
        yield from tree.group.elements()
    elif isinstance(tree, Semidirect):
        for h in tree.h.elements():
            for g in elements(tree.g):
                yield (h, g)
    elif isinstance(tree, Direct):
        for l in elements(tree.left):
            for r in elements(tree.right):
                yield (l, r)
    else:
        raise InadmissibleError(f"not a group tree: {tree!r}")


def element_at(tree: GroupTree, idx: int):
    if isinstance(tree, AbelianLeaf):
        return tree.group.element_at(idx)
    if isinstance(tree, Semidirect):
        n_g = order(tree.g)
        return (tree.h.element_at(idx // n_g), element_at(tree.g, idx % n_g))
    if isinstance(tree, Direct):
        n_r = order(tree.right)
        return (element_at(tree.left, idx // n_r), element_at(tree.right, idx % n_r))
    raise InadmissibleError(f"not a group tree: {tree!r}")


def index_of(tree: GroupTree, el) -> int:
    if isinstance(tree, AbelianLeaf):
        return tree.group.index_of(el)
    if isinstance(tree, Semidirect):
        h, g = el
        return tree.h.index_of(h) * order(tree.g) + index_of(tree.g, g)
    if isinstance(tree, Direct):
        l, r = el
        return index_of(tree.left, l) * order(tree.right) + index_of(tree.right, r)
    raise InadmissibleError(f"not a group tree: {tree!r}")


def flatten_element(tree: GroupTree, el) -> list:
    """Flat integer coordinates of a tree element (pre-order)."""
    if isinstance(tree, AbelianLeaf):
        return list(el.coords)
    if isinstance(tree, Semidirect):
        h, g = el
        return list(h.coords) + flatten_element(tree.g, g)
    if isinstance(tree, Direct):
        l, r = el
        return flatten_element(tree.left, l) + flatten_element(tree.right, r)
    raise InadmissibleError(f"not a group tree: {tree!r}")


def coord_width(tree: GroupTree) -> int:
    if isinstance(tree, AbelianLeaf):
        return tree.group.rank
    if isinstance(tree, Semidirect):
        return tree.h.rank + coord_width(tree.g)
    if isinstance(tree, Direct):
        return coord_width(tree.left) + coord_width(tree.right)
    raise InadmissibleError(f"not a group tree: {tree!r}")


def unflatten_element(tree: GroupTree, flat):
    flat = list(flat)
    if len(flat) != coord_width(tree):
        raise InadmissibleError(
            f"want {coord_width(tree)} coordinates for {tree}, got {len(flat)}"
        )
    el, rest = _unflatten(tree, flat)
    assert not rest
    return el


def _unflatten(tree, flat):
    if isinstance(tree, AbelianLeaf):
        r = tree.group.rank
        return tree.group.element(flat[:r]), flat[r:]
    if isinstance(tree, Semidirect):
        r = tree.h.rank
        h = tree.h.element(flat[:r])
        g, rest = _unflatten(tree.g, flat[r:])
        return (h, g), rest
    if isinstance(tree, Direct):
        l, rest = _unflatten(tree.left, flat)
        r, rest = _unflatten(tree.right, rest)
        return (l, r), rest
    raise InadmissibleError(f"not a group tree: {tree!r}")


def to_multiplication_table(tree: GroupTree, cap: int = None):
    """Full multiplication table over the canonical element indexing."""
    cap = ENUMERATION_CAP if cap is None else cap
    n = order(tree)
    if n > cap:
        raise InadmissibleError(f"order {n} exceeds enumeration cap {cap}")
    els = list(elements(tree))
    idx = {el: i for i, el in enumerate(els)}
    return [[idx[multiply(tree, a, b)] for b in els] for a in els]


# -- multiplication-table verifier ----------------------------------------------


def _closure(table, seed):
    members = set(seed)
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            for z in (table[x][y], table[y][x]):
                if z not in members:
                    members.add(z)
                    frontier.append(z)
    return members


def is_solvable_a_group(table) -> bool:
    """Check a multiplication table for: being a group, being solvable, and
    having all Sylow subgroups abelian.

    Group axioms are verified first (identity, inverses, Latin square;
    associativity in full up to order 300, deterministically sampled beyond)
    and failures raise.  Solvability uses the derived series; each Sylow
    subgroup is grown greedily from elements of prime-power order.
    """
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise InadmissibleError("table is not square")
    rng = range(n)
    if any(x not in rng for row in table for x in row):
        raise InadmissibleError("table entries out of range")

    ident = None
    for e in rng:
        if all(table[e][j] == j and table[j][e] == j for j in rng):
            ident = e
            break
    if ident is None:
        raise InadmissibleError("table has no identity")

    inv = [None] * n
    for i in rng:
        for j in rng:
            if table[i][j] == ident and table[j][i] == ident:
                inv[i] = j
                break
        if inv[i] is None:
            raise InadmissibleError(f"element {i} has no inverse")

    for row in table:
        if len(set(row)) != n:
            raise InadmissibleError("table rows are not permutations")
    for j in rng:
        if len({table[i][j] for i in rng}) != n:
            raise InadmissibleError("table columns are not permutations")

    if n <= _FULL_ASSOC_CAP:
        triples = ((a, b, c) for a in rng for b in rng for c in rng)
    else:
        r = Random(0)
        triples = (
            (r.randrange(n), r.randrange(n), r.randrange(n)) for _ in range(50 * n)
        )
    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise InadmissibleError(f"associativity fails at ({a},{b},{c})")

    # derived series
    cur = set(rng)
    while True:
        comms = {
            table[table[a][b]][table[inv[a]][inv[b]]] for a in cur for b in cur
        }
        new = _closure(table, comms | {ident})
        if new == {ident}:
            break
        if new == cur:
            return False
        cur = new

    # Sylow subgroups, grown greedily; a maximal l-subgroup is an l-Sylow
    for l in _prime_factors(n):
        target = _l_part(n, l)
        l_els = [x for x in rng if _is_l_power(_order_in_table(table, ident, x), l)]
        sylow = {ident}
        while len(sylow) < target:
            for y in l_els:
                if y in sylow:
                    continue
                grown = _closure(table, sylow | {y})
                if _is_l_power(len(grown), l):
                    sylow = grown
                    break
            else:
                raise InternalInvariantError(
                    f"could not grow an {l}-Sylow subgroup past {len(sylow)}"
                )
        if any(table[a][b] != table[b][a] for a in sylow for b in sylow):
            return False
    return True


def _order_in_table(table, ident, x) -> int:
    cur, o = x, 1
    while cur != ident:
        cur = table[cur][x]
        o += 1
    return o


def _is_l_power(n, l):
    while n % l == 0:
        n //= l
    return n == 1


# -- JSON group-spec files -------------------------------------------------------


def tree_from_spec(obj) -> GroupTree:
    """Build a tree from the JSON group-spec object format.

    {"kind":"abelian","invariant_factors":[n1,...]}
    {"kind":"semidirect","h":{...abelian...},"g":{...},
     "action":{"on_generators":[{"g_element":[...],"matrix":[[...],...]}]}}
    {"kind":"direct","left":{...},"right":{...}}
    """
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InadmissibleError("group spec node must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "abelian":
        return AbelianLeaf(AbelianGroup(tuple(obj["invariant_factors"])))
    if kind == "semidirect":
        h_obj = obj["h"]
        if h_obj.get("kind") != "abelian":
            raise InadmissibleError("semidirect 'h' must be an abelian node")
        h = AbelianGroup(tuple(h_obj["invariant_factors"]))
        g_tree = tree_from_spec(obj["g"])
        try:
            spec_pairs = obj["action"]["on_generators"]
        except (KeyError, TypeError):
            raise InadmissibleError("semidirect needs action.on_generators")
        pairs = []
        for entry in spec_pairs:
            g_el = unflatten_element(g_tree, entry["g_element"])
            pairs.append((g_el, entry["matrix"]))
        return semidirect(h, g_tree, pairs)
    if kind == "direct":
        return Direct(tree_from_spec(obj["left"]), tree_from_spec(obj["right"]))
    raise InadmissibleError(f"unknown group spec kind {kind!r}")


def tree_to_spec(tree: GroupTree):
    if isinstance(tree, AbelianLeaf):
        return {"kind": "abelian", "invariant_factors": list(tree.group.invariant_factors)}
    if isinstance(tree, Semidirect):
        gens = [
            {
                "g_element": flatten_element(tree.g, g_el),
                "matrix": [list(row) for row in mat],
            }
            for g_el, mat in tree.mu.items()
            if g_el != identity(tree.g)
        ]
        return {
            "kind": "semidirect",
            "h": {"kind": "abelian", "invariant_factors": list(tree.h.invariant_factors)},
            "g": tree_to_spec(tree.g),
            "action": {"on_generators": gens},
        }
    if isinstance(tree, Direct):
        return {
            "kind": "direct",
            "left": tree_to_spec(tree.left),
            "right": tree_to_spec(tree.right),
        }
    raise InadmissibleError(f"not a group tree: {tree!r}")
