"""Command-line front end.

Subcommands: classgroup, wgroup, steinitz, exponents, rt, check.  Output is
text by default, JSON with --json (stable key order, so identical invocations
are byte-identical).  Exit codes: 0 ok, 2 inadmissible input, 3 enumeration
ceiling reached, 4 internal invariant failure.  The environment variable
STEINITZ_PRIME_CEILING overrides the hard prime-enumeration ceiling;
STEINITZCALC_PURE=1 forces the pure-Python kernels.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd, isqrt

from . import cyclotomic, grouptree, realizable
from . import steinitz as st
from ._kernels import BACKEND
from .classgroup import QuadField
from .errors import (
    EnumerationCeilingError,
    InadmissibleError,
    InternalInvariantError,
)


def _field(disc: int) -> QuadField:
    return QuadField(disc)


def _structure_label(factors) -> str:
    if not factors:
        return "trivial"
    return " x ".join(f"C{d}" for d in factors)


def _forms_str(forms) -> str:
    return ", ".join(str(f) for f in forms) if forms else "-"


def _emit(payload: dict, text: str, as_json: bool):
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- subcommands -----------------------------------------------------------------


def _cmd_classgroup(args) -> int:
    cg = _field(args.disc).class_group()
    payload = {
        "disc": cg.disc,
        "order": cg.order,
        "invariant_factors": list(cg.invariant_factors),
        "generators": [list(f.as_tuple()) for f in cg.generator_forms],
    }
    text = (
        f"h = {cg.order}, Cl ≅ {_structure_label(cg.invariant_factors)}, "
        f"generators: {_forms_str(cg.generator_forms)}"
    )
    _emit(payload, text, args.json)
    return 0


def _cmd_wgroup(args) -> int:
    field = _field(args.disc)
    members = frozenset(int(x) for x in args.subgroup.split(","))
    s = cyclotomic.CycloSubgroup(args.modulus, members)
    wg = cyclotomic.w_group(field, args.modulus, s, bound=args.bound)
    sub = wg.subgroup
    payload = {
        "disc": field.disc,
        "modulus": args.modulus,
        "subgroup": s.sorted_members(),
        "order": sub.order,
        "index": sub.index_in_parent,
        "invariant_factors": list(sub.invariant_factors),
        "generators": [list(f.as_tuple()) for f in sub.generator_forms()],
        "initial_bound": wg.certificate.initial_bound,
        "stabilized_bound": wg.certificate.final_bound,
    }
    text = (
        f"W: order {sub.order} (index {sub.index_in_parent} in Cl), "
        f"invariant factors {_structure_label(sub.invariant_factors)}, "
        f"generators: {_forms_str(sub.generator_forms())}; "
        f"stabilized at bound {wg.certificate.final_bound} "
        f"(initial {wg.certificate.initial_bound})"
    )
    _emit(payload, text, args.json)
    return 0


def _parse_ram(spec: str):
    out = []
    for token in spec.split(","):
        parts = token.split(":")
        if len(parts) == 2:
            p, e = parts
            conj = False
        elif len(parts) == 3 and parts[2] == "conj":
            p, e = parts[:2]
            conj = True
        else:
            raise InadmissibleError(f"bad ramification token {token!r} (want p:e)")
        out.append(st.RamificationDatum(int(p), int(e), conj))
    return out


def _cmd_steinitz(args) -> int:
    field = _field(args.disc)
    ram = _parse_ram(args.ram) if args.ram else []
    cls = st.steinitz_from_ramification(field, ram, args.order)
    payload = {
        "disc": field.disc,
        "order": args.order,
        "ram": [{"p": d.p, "e": d.e, "conjugate": d.conjugate} for d in ram],
        "steinitz_class": list(cls.form.as_tuple()),
        "is_principal": cls.is_principal,
    }
    text = f"st = {cls.form}" + (" (principal)" if cls.is_principal else "")
    _emit(payload, text, args.json)
    return 0


def _cmd_exponents(args) -> int:
    a1, a2, a3 = st.alphas_l(args.l, args.otau, args.n)
    beta = st.beta_l(args.l, args.otau, args.n)
    theo = st.w_exponent(args.l, args.otau, args.m, args.n)
    a3_scaled = a3 * (args.n // args.l)
    payload = {
        "l": args.l,
        "otau": args.otau,
        "m": args.m,
        "n": args.n,
        "alpha_1": a1,
        "alpha_2": a2,
        "alpha_3": a3,
        "alpha_3_times_n_over_l": a3_scaled,
        "beta": beta,
        "w_exponent": theo,
    }
    text = "\n".join(
        [
            f"alpha_(l,1) = {a1}",
            f"alpha_(l,2) = {a2}",
            f"alpha_(l,3) = {a3}  (as displayed; the derivation's discriminant "
            f"carries n/l, giving {a3_scaled})",
            f"beta_l      = {beta}",
            f"W exponent ((l-1)/2)(mn/o) = {theo}",
        ]
    )
    _emit(payload, text, args.json)
    return 0


def _cmd_rt(args) -> int:
    field = _field(args.disc)
    with open(args.group, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    tree = grouptree.tree_from_spec(spec)
    result = realizable.rt(field, tree, bound=args.bound, dedupe=not args.no_dedupe)
    sub = result.subgroup
    cg = sub.group
    trace_file = None
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump(result.trace, fh, sort_keys=True, indent=1)
        trace_file = args.trace
    payload = {
        "disc": field.disc,
        "class_group": {
            "order": cg.order,
            "invariant_factors": list(cg.invariant_factors),
        },
        "rt": {
            "order": sub.order,
            "invariant_factors": list(sub.invariant_factors),
            "generators": [list(f.as_tuple()) for f in sub.generator_forms()],
            "index": sub.index_in_parent,
        },
        "trace_file": trace_file,
    }
    if sub.is_full():
        text = "R_t = Cl(k), index 1"
    else:
        text = (
            f"R_t: order {sub.order} of {cg.order} (index {sub.index_in_parent}), "
            f"invariant factors {_structure_label(sub.invariant_factors)}, "
            f"generators: {_forms_str(sub.generator_forms())}"
        )
    if trace_file and not args.json:
        text += f"\ntrace written to {trace_file}"
    _emit(payload, text, args.json)
    return 0


# -- bundled invariant suites -------------------------------------------------------


def _count_reduced_forms_divisor_oracle(disc: int) -> int:
    """Independent reduced-form count: iterate b, factor (b*b - disc)/4."""
    count = 0
    for b in range(disc % 2, isqrt(-disc // 3) + 1, 2):
        m = (b * b - disc) // 4
        a = max(b, 1)
        while a * a <= m:
            if m % a == 0:
                c = m // a
                if gcd(gcd(a, b), c) == 1:
                    count += 1 if (b == 0 or b == a or a == c) else 2
            a += 1
    return count


class _Check:
    def __init__(self):
        self.failures = 0

    def ok(self, label: str, passed: bool, detail: str = ""):
        tag = "PASS" if passed else "FAIL"
        if not passed:
            self.failures += 1
        line = f"{tag}  {label}"
        if detail:
            line += f"  [{detail}]"
        print(line)


def _suite_classgroup(chk: _Check, field: QuadField):
    cg = field.class_group()
    n = cg.order
    chk.ok(
        f"classgroup: order matches divisor-path oracle (disc {field.disc})",
        field.is_rationals or n == _count_reduced_forms_divisor_oracle(field.disc),
        f"h = {n}",
    )
    assoc = all(
        cg.compose_idx(cg.compose_idx(a, b), c) == cg.compose_idx(a, cg.compose_idx(b, c))
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )
    chk.ok("classgroup: composition is associative", assoc)
    chk.ok(
        "classgroup: identity and inverses",
        all(cg.compose_idx(cg.principal_index, i) == i for i in range(n))
        and all(
            cg.compose_idx(i, cg.inverse_idx(i)) == cg.principal_index for i in range(n)
        ),
    )
    chk.ok(
        "classgroup: invariant factors multiply to h",
        _product(cg.invariant_factors) == n,
    )


def _suite_wgroup(chk: _Check, field: QuadField):
    cg = field.class_group()
    full_w = cyclotomic.w_group(field, 1, cyclotomic.CycloSubgroup(1, frozenset([0])))
    chk.ok("wgroup: W(k, k) is the full class group", full_w.subgroup.is_full())
    gal3 = cyclotomic.galois_group(field, 3)
    w_small = cyclotomic.w_group(field, 3, cyclotomic.CycloSubgroup(3, frozenset([1])))
    w_big = cyclotomic.w_group(field, 3, gal3)
    chk.ok(
        "wgroup: monotone in the Frobenius target",
        w_small.subgroup.members <= w_big.subgroup.members,
    )
    again = cyclotomic.w_group(
        field, 3, cyclotomic.CycloSubgroup(3, frozenset([1])),
        bound=2 * w_small.certificate.initial_bound,
    )
    chk.ok(
        "wgroup: stable under a doubled initial bound",
        again.subgroup == w_small.subgroup,
    )


def _suite_exponents(chk: _Check):
    ok = True
    for m in range(2, 401):
        for e in range(2, m + 1):
            if m % e == 0:
                _, divides = st.exponent_gcd(e, m)
                ok = ok and divides
    chk.ok("exponents: gcd of (l-1)m/e_(l) divides (e-1)m/e for m <= 400", ok)
    ok = True
    for l in (3, 5, 7, 11, 13):
        o = l
        while o <= 100:
            for n in range(o, 2001, 2 * o):
                ok = ok and st.beta_l(l, o, n) >= 1
            o *= l
    chk.ok("exponents: beta two/three-term forms agree on the sample", ok)
    chk.ok(
        "exponents: discriminant exponent is even for odd degrees",
        all(
            st.discriminant_exponent(e, n) % 2 == 0
            for n in range(3, 200, 2)
            for e in range(1, n + 1)
            if n % e == 0
        ),
    )


def _suite_rt(chk: _Check, field: QuadField):
    res_c2 = realizable.rt(field, grouptree.leaf(2))
    chk.ok("rt: R_t(k, C(2)) equals Cl(k)", res_c2.subgroup.is_full())
    h3 = grouptree.AbelianGroup((3,))
    leaf3 = grouptree.AbelianLeaf(h3)
    trivial = grouptree.AbelianLeaf(grouptree.AbelianGroup(()))
    semi = grouptree.semidirect(h3, trivial, grouptree.trivial_action(h3, trivial))
    chk.ok(
        "rt: abelian leaf agrees with trivial semidirect",
        realizable.rt(field, leaf3).subgroup == realizable.rt(field, semi).subgroup,
    )
    d3_generic = realizable.rt(field, grouptree.dihedral_tree(3))
    d3_direct = realizable.rt_dihedral(field, 3)
    chk.ok(
        "rt: dihedral closed path agrees with the generic engine",
        d3_generic.subgroup == d3_direct.subgroup,
    )
    replayed = realizable.rt_trace_replay(d3_generic)
    chk.ok("rt: trace replay reproduces the subgroup", replayed == d3_generic.subgroup)
    sub = d3_generic.subgroup
    closed = all(
        sub.group.compose_idx(i, j) in sub.members
        for i in sub.members
        for j in sub.members
    )
    chk.ok("rt: result subgroup is closed", closed)


def _product(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _cmd_check(args) -> int:
    field = _field(args.disc)
    chk = _Check()
    suites = {
        "classgroup": lambda: _suite_classgroup(chk, field),
        "wgroup": lambda: _suite_wgroup(chk, field),
        "exponents": lambda: _suite_exponents(chk),
        "rt": lambda: _suite_rt(chk, field),
    }
    wanted = suites.keys() if args.suite == "all" else [args.suite]
    for name in wanted:
        suites[name]()
    print(f"backend: {BACKEND}; failures: {chk.failures}")
    return 4 if chk.failures else 0


# -- argument parsing -----------------------------------------------------------------


def _add_disc(p):
    p.add_argument(
        "--disc",
        type=int,
        required=True,
        help="fundamental discriminant < 0, or 0 for Q",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinitzcalc",
        description=(
            "Realizable Steinitz classes of tame Galois extensions over Q "
            "and imaginary quadratic fields"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classgroup", help="class group of a discriminant")
    _add_disc(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classgroup)

    p = sub.add_parser("wgroup", help="W-group of a cyclotomic Frobenius target")
    _add_disc(p)
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument(
        "--subgroup",
        type=str,
        required=True,
        help="comma-separated member residues of the Frobenius subgroup",
    )
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_wgroup)

    p = sub.add_parser("steinitz", help="Steinitz class from ramification data")
    _add_disc(p)
    p.add_argument("--ram", type=str, default="", help="p1:e1,p2:e2[,p:e:conj]")
    p.add_argument("--order", type=int, required=True, help="extension degree N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_steinitz)

    p = sub.add_parser("exponents", help="construction exponents and beta")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--otau", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_exponents)

    p = sub.add_parser("rt", help="realizable Steinitz classes of a group tree")
    _add_disc(p)
    p.add_argument("--group", type=str, required=True, help="group spec JSON file")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--no-dedupe", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", type=str, default=None, help="write trace JSON here")
    p.set_defaults(func=_cmd_rt)

    p = sub.add_parser("check", help="run the bundled invariant suites")
    p.add_argument("--suite", choices=["all", "classgroup", "wgroup", "exponents", "rt"],
                   default="all")
    p.add_argument("--disc", type=int, default=-23)
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InadmissibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationCeilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 4
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: unreadable group spec: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
