"""Recursive computation of the realizable Steinitz classes R_t(k, G).

For the supported trees the recursion is

  R_t(k, C(2))           = Cl(k)
  R_t(k, H) (|H| odd)    = prod over primes l | n, tau in H(l)\\{1} of
                           W(k, k(zeta_o(tau)))^(((l-1)/2) n/o(tau))
  R_t(k, H x| G)         = R_t(k, G)^n * prod over l, tau of
                           W(k, E_tau)^(((l-1)/2) m n/o(tau))
  R_t(k, G1 x G2)        = R_t(k, G1)^n2 * R_t(k, G2)^n1

where E_tau is the fixed field of the exponents of tau realized by the
action, powers of a subgroup mean images under x -> x^e, and W-groups come
from `cyclotomic.w_group`.  The engine accepts exactly the tree shapes the
underlying theorems cover (structural gate): abelian leaves of odd order or
exactly C(2), semidirect nodes with odd kernel of coprime order, direct
nodes under the parity rule.

Every run records a replayable trace: per node, the formula instance, the
W descriptors with their generators and stabilization bounds, and the
resulting subgroup.  `rt_trace_replay` re-evaluates a trace bottom-up from
the recorded generators and raises on any mismatch.

`rt_dihedral` is a deliberately separate code path for D_n (odd n) used as a
cross-check oracle for the generic engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import cyclotomic, grouptree
from .classgroup import ClassSubgroup, QuadField, class_group, prime_class, splitting, Splitting
from .errors import InadmissibleError, TraceMismatchError
from .steinitz import membership_exponents, w_exponent

_TRACE_VERSION = 1


def check_admissible(tree: grouptree.GroupTree):
    """Reject trees outside the supported family, with a reason."""
    if isinstance(tree, grouptree.AbelianLeaf):
        if tree.group.order % 2 == 1:
            return
        if tree.group.invariant_factors == (2,):
            return
        raise InadmissibleError(
            f"abelian leaf {tree.group} is inadmissible: even leaves other "
            "than C(2) are outside the supported family"
        )
    if isinstance(tree, grouptree.Semidirect):
        # oddness and coprimality are construction invariants; recurse
        check_admissible(tree.g)
        return
    if isinstance(tree, grouptree.Direct):
        check_admissible(tree.left)
        check_admissible(tree.right)
        return
    raise InadmissibleError(f"not a group tree: {tree!r}")


@dataclass(frozen=True)
class RtRequest:
    field: QuadField
    tree: grouptree.GroupTree
    prime_bound: int = None
    dedupe: bool = True

    def run(self) -> "RtResult":
        return rt(self.field, self.tree, bound=self.prime_bound, dedupe=self.dedupe)


@dataclass
class RtResult:
    subgroup: ClassSubgroup
    trace: dict


class _Engine:
    def __init__(self, field: QuadField, bound=None, dedupe=True):
        self.field = field
        self.cg = class_group(field.disc)
        self.bound = bound
        self.dedupe = dedupe
        self._memo = {}
        self._wcache = {}

    # -- W evaluation --------------------------------------------------------

    def w(self, s: cyclotomic.CycloSubgroup) -> cyclotomic.WGroup:
        key = cyclotomic.fixed_field_descriptor(s)
        out = self._wcache.get(key)
        if out is None:
            out = cyclotomic.w_group(self.field, s.modulus, s, bound=self.bound)
            self._wcache[key] = out
        return out

    # -- recursion -------------------------------------------------------------

    def run(self, tree):
        hit = self._memo.get(tree)
        if hit is not None:
            return hit
        if isinstance(tree, grouptree.AbelianLeaf):
            out = self._leaf(tree)
        elif isinstance(tree, grouptree.Semidirect):
            out = self._semidirect(tree)
        elif isinstance(tree, grouptree.Direct):
            out = self._direct(tree)
        else:
            raise InadmissibleError(f"not a group tree: {tree!r}")
        self._memo[tree] = out
        return out

    def _leaf(self, tree):
        h = tree.group
        if h.invariant_factors == (2,):
            sub = self.cg.full_subgroup()
            trace = {
                "kind": "c2-leaf",
                "order": 2,
                "members": _forms(sub),
            }
            return sub, trace
        sub = self.cg.trivial_subgroup()
        sub, w_entries = self._apply_w_product(sub, h, g_tree=None, mu=None, m=1)
        trace = {
            "kind": "abelian-leaf",
            "order": h.order,
            "invariant_factors": list(h.invariant_factors),
            "w_factors": w_entries,
            "members": _forms(sub),
        }
        return sub, trace

    def _semidirect(self, tree):
        base_sub, base_trace = self.run(tree.g)
        n = tree.h.order
        m = grouptree.order(tree.g)
        sub = base_sub.power(n)
        sub, w_entries = self._apply_w_product(sub, tree.h, tree.g, tree.mu, m)
        trace = {
            "kind": "semidirect",
            "order": n * m,
            "kernel_order": n,
            "base": {"power": n, "trace": base_trace},
            "w_factors": w_entries,
            "members": _forms(sub),
        }
        return sub, trace

    def _direct(self, tree):
        left_sub, left_trace = self.run(tree.left)
        right_sub, right_trace = self.run(tree.right)
        nl, nr = grouptree.order(tree.left), grouptree.order(tree.right)
        sub = left_sub.power(nr).product(right_sub.power(nl))
        trace = {
            "kind": "direct",
            "order": nl * nr,
            "left": {"power": nr, "trace": left_trace},
            "right": {"power": nl, "trace": right_trace},
            "members": _forms(sub),
        }
        return sub, trace

    def _apply_w_product(self, sub, h, g_tree, mu, m):
        """Fold the W(k, E_tau)^exp factors over tau in H(l)\\{1} into sub."""
        n = h.order
        contributions = []  # (CycloSubgroup, exponent, o_tau)
        for l in _prime_factors(n):
            for tau in h.sylow_part(l):
                o = h.element_order(tau)
                if o == 1:
                    continue
                if g_tree is None:
                    s = cyclotomic.CycloSubgroup(o, frozenset([1 % o]))
                else:
                    s = cyclotomic.g_k_mu_tau(self.field, g_tree, mu, tau)
                contributions.append((s, w_exponent(l, o, m, n), o))

        entries = []
        if self.dedupe:
            grouped = {}
            for s, exp, o in contributions:
                key = (cyclotomic.fixed_field_descriptor(s), exp)
                if key in grouped:
                    grouped[key][2] += 1
                else:
                    grouped[key] = [s, exp, 1, o]
            folds = list(grouped.values())
        else:
            folds = [[s, exp, 1, o] for s, exp, o in contributions]
        for s, exp, count, o in folds:
            wg = self.w(s)
            sub = sub.product(wg.subgroup.power(exp))
            entries.append(
                {
                    "modulus": s.modulus,
                    "frobenius_subgroup": s.sorted_members(),
                    "exponent": exp,
                    "tau_count": count,
                    "order_tau": o,
                    "w_generators": [list(f.as_tuple()) for f in _gen_forms(wg.subgroup)],
                    "initial_bound": wg.certificate.initial_bound,
                    "stabilized_bound": wg.certificate.final_bound,
                }
            )
        return sub, entries


def _gen_forms(sub: ClassSubgroup):
    return [sub.group.forms[i] for i in sub.generators]


def _forms(sub: ClassSubgroup):
    return [list(f.as_tuple()) for f in sub.member_forms()]


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


def rt(field: QuadField, tree: grouptree.GroupTree, bound=None, dedupe=True) -> RtResult:
    """R_t(k, G) for an admissible group tree over the given field."""
    check_admissible(tree)
    engine = _Engine(field, bound=bound, dedupe=dedupe)
    sub, node_trace = engine.run(tree)
    trace = {
        "version": _TRACE_VERSION,
        "disc": field.disc,
        "group": grouptree.tree_to_spec(tree),
        "dedupe": dedupe,
        "node": node_trace,
    }
    return RtResult(sub, trace)


def rt_dihedral(field: QuadField, n: int, bound=None) -> RtResult:
    """R_t(k, D_n) for odd n, computed without the generic recursion.

    Folds Cl(k)^n with W(k, E)^((l-1) n / o) where E is the fixed field of
    {+-1} inside Gal(k(zeta_o)/k), for each prime power o = l, l^2, ...
    dividing n.  Serves as an independent oracle for `rt` on dihedral trees.
    """
    if n < 3 or n % 2 == 0:
        raise InadmissibleError(f"dihedral path wants odd n >= 3, got {n}")
    cg = class_group(field.disc)
    sub = cg.full_subgroup().power(n)
    entries = []
    for l in _prime_factors(n):
        o = l
        while n % o == 0:
            gal = cyclotomic.galois_group(field, o)
            members = frozenset(a for a in gal.members if a % o in {1 % o, (o - 1) % o})
            s = cyclotomic.CycloSubgroup(o, members)
            exp = (l - 1) * (n // o)
            wg = cyclotomic.w_group(field, o, s, bound=bound)
            sub = sub.product(wg.subgroup.power(exp))
            entries.append(
                {
                    "modulus": o,
                    "frobenius_subgroup": s.sorted_members(),
                    "exponent": exp,
                    "tau_count": _euler_phi(o),
                    "order_tau": o,
                    "w_generators": [list(f.as_tuple()) for f in _gen_forms(wg.subgroup)],
                    "initial_bound": wg.certificate.initial_bound,
                    "stabilized_bound": wg.certificate.final_bound,
                }
            )
            o *= l
    node = {
        "kind": "dihedral",
        "order": 2 * n,
        "rotation_order": n,
        "w_factors": entries,
        "members": _forms(sub),
    }
    trace = {
        "version": _TRACE_VERSION,
        "disc": field.disc,
        "group": {"kind": "dihedral", "n": n},
        "dedupe": True,
        "node": node,
    }
    return RtResult(sub, trace)


def _euler_phi(n: int) -> int:
    out = n
    for p in _prime_factors(n):
        out -= out // p
    return out


# -- trace replay ---------------------------------------------------------------


def rt_trace_replay(result) -> ClassSubgroup:
    """Re-evaluate a recorded trace from its stored W generators.

    Accepts an RtResult or a bare trace dict.  Raises TraceMismatchError if
    any node's recomputed subgroup differs from the recorded one, or if the
    trace is structurally corrupt."""
    trace = result.trace if isinstance(result, RtResult) else result
    try:
        cg = class_group(trace["disc"])
        node = trace["node"]
    except (KeyError, TypeError) as exc:
        raise TraceMismatchError(f"corrupt trace: {exc}") from exc
    sub = _replay_node(cg, node)
    if isinstance(result, RtResult) and sub != result.subgroup:
        raise TraceMismatchError("replayed subgroup differs from the stored result")
    return sub


def _replay_node(cg, node) -> ClassSubgroup:
    try:
        kind = node["kind"]
        if kind == "c2-leaf":
            sub = cg.full_subgroup()
        elif kind in ("abelian-leaf", "dihedral"):
            sub = (
                cg.full_subgroup().power(node["rotation_order"])
                if kind == "dihedral"
                else cg.trivial_subgroup()
            )
            sub = _replay_w(cg, sub, node["w_factors"])
        elif kind == "semidirect":
            base = _replay_node(cg, node["base"]["trace"])
            sub = base.power(node["base"]["power"])
            sub = _replay_w(cg, sub, node["w_factors"])
        elif kind == "direct":
            left = _replay_node(cg, node["left"]["trace"])
            right = _replay_node(cg, node["right"]["trace"])
            sub = left.power(node["left"]["power"]).product(
                right.power(node["right"]["power"])
            )
        else:
            raise TraceMismatchError(f"corrupt trace: unknown node kind {kind!r}")
        recorded = [tuple(f) for f in node["members"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise TraceMismatchError(f"corrupt trace: {exc}") from exc
    if [f.as_tuple() for f in sub.member_forms()] != sorted(recorded):
        raise TraceMismatchError(
            f"replay mismatch at {node.get('kind')}: recomputed "
            f"{[str(f) for f in sub.member_forms()]}, recorded {sorted(recorded)}"
        )
    return sub


def _replay_w(cg, sub, w_factors) -> ClassSubgroup:
    from .classgroup import QuadForm, subgroup_generate

    for entry in w_factors:
        gens = [cg.class_of(QuadForm(*f)) for f in entry["w_generators"]]
        w_sub = subgroup_generate(cg, gens)
        sub = sub.product(w_sub.power(entry["exponent"]))
    return sub


# -- per-prime membership exponents ----------------------------------------------


def membership_check(field: QuadField, tree, ram_scenarios, rt_result=None):
    """For scenarios (p, e): verify class(p)^exp lies in R_t(k, G) for every
    exponent of the per-prime membership contract (and the half exponent
    when even).

    Scenario admissibility is only e >= 2, e | |G| and p not inert; whether a
    cyclic inertia group of order e actually embeds in G is not re-verified.
    Returns one report dict per scenario; raises on inadmissible scenarios.
    """
    if rt_result is None:
        rt_result = rt(field, tree)
    sub = rt_result.subgroup
    big_m = grouptree.order(tree)
    reports = []
    for p, e in ram_scenarios:
        if e < 2 or big_m % e:
            raise InadmissibleError(f"scenario e={e} does not divide |G|={big_m}")
        if splitting(p, field) is Splitting.INERT:
            raise InadmissibleError(f"scenario p={p} is inert in {field}")
        cls = prime_class(p, field)
        checks = []
        for l, exp, half in membership_exponents(e, big_m):
            checks.append(
                {"l": l, "exponent": exp, "ok": sub.contains_class(cls**exp)}
            )
            if half is not None:
                checks.append(
                    {
                        "l": l,
                        "exponent": half,
                        "half": True,
                        "ok": sub.contains_class(cls**half),
                    }
                )
        reports.append(
            {"p": p, "e": e, "ok": all(c["ok"] for c in checks), "checks": checks}
        )
    return reports
