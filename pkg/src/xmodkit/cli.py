"""``xmodkit`` command line: catalog, liftings, verify, export-dot.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .catalog import (
    DEFAULT_MAX_ORDER,
    DEFAULT_MAX_PAIR,
    catalog_groups,
    generate_catalog,
    load_catalog,
    save_catalog,
    xmods_over_pair,
)
from .crossed_modules import (
    CrossedModule,
    classify_xmod_transitivity,
    identity_xmod,
    trivial_action,
    validate_xmod,
    xmod_from_json,
    xmod_inner_automorphism,
    xmod_zero_module,
)
from .dot import groupoid_to_dot
from .equivalence import eta
from .errors import NotFound, XModKitError
from .groupoids import action_groupoid, discrete_groupoid, group_as_groupoid, regular_action
from .groups import (
    FiniteGroup,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    find_isomorphism,
    klein_four,
    symmetric,
)
from .liftings import enumerate_liftings, lifting_to_json
from .verify import SCOPES, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


# ---------------------------------------------------------------- references


def parse_group(name: str) -> FiniteGroup:
    """``Z4``, ``V4``, ``S3``, ``D4``, ``Q8``, ``Dic3`` and products such as ``Z2xV4``."""
    parts = name.split("x")
    groups = []
    for part in parts:
        m = re.fullmatch(r"(Z|S|D|Dic)(\d+)|V4|Q8", part)
        if not m:
            raise NotFound(f"unknown group {part!r}")
        if part == "V4":
            groups.append(klein_four())
        elif part == "Q8":
            groups.append(dicyclic(2))
        else:
            kind, n = m.group(1), int(m.group(2))
            if kind == "Z" and n >= 1:
                groups.append(cyclic(n))
            elif kind == "S" and 1 <= n <= 5:
                groups.append(symmetric(n))
            elif kind == "D" and n >= 3:
                groups.append(dihedral(n))
            elif kind == "Dic" and n >= 2:
                groups.append(dicyclic(n))
            else:
                raise NotFound(f"unknown group {part!r}")
    G = groups[0]
    for H in groups[1:]:
        G = direct_product(G, H)
    return G


def resolve_xmod(ref: str, catalog_path: str | None = None) -> CrossedModule:
    """A crossed module from a JSON file, a catalog label, or a constructor shorthand.

    Shorthands: ``inner:G``, ``id:G``, ``zero:M:G`` and ``cyclic:m:n`` (reduction
    ``Z_m -> Z_n`` with trivial action, ``n`` dividing ``m``).
    """
    if ref.endswith(".json"):
        try:
            with open(ref, encoding="utf-8") as fh:
                return xmod_from_json(json.load(fh))
        except OSError as exc:
            raise NotFound(f"cannot read {ref}: {exc}") from exc
    kind, _, rest = ref.partition(":")
    args = rest.split(":") if rest else []
    if kind == "inner" and len(args) == 1:
        return xmod_inner_automorphism(parse_group(args[0]))
    if kind == "id" and len(args) == 1:
        return identity_xmod(parse_group(args[0]))
    if kind == "zero" and len(args) == 2:
        return xmod_zero_module(parse_group(args[0]), parse_group(args[1]))
    if kind == "cyclic" and len(args) == 2:
        m, n = int(args[0]), int(args[1])
        if m % n:
            raise NotFound(f"Z{n} is not a quotient of Z{m}")
        A, B = cyclic(m), cyclic(n)
        return validate_xmod(A, B, [a % n for a in range(m)], trivial_action(B, A), f"Z{m}->Z{n}")
    if catalog_path is not None:
        cat = load_catalog(catalog_path)
        if ref in cat.xmods:
            return cat.xmods[ref]
    m = re.fullmatch(r"(.+)->(.+)#(\d+)", ref)
    if m:
        found = xmods_over_pair(parse_group(m.group(1)), parse_group(m.group(2)))
        k = int(m.group(3))
        if 1 <= k <= len(found):
            return found[k - 1]
    raise NotFound(f"no crossed module {ref!r}")


def resolve_groupoid(ref: str, catalog_path: str | None = None):
    kind, _, rest = ref.partition(":")
    if kind == "eta":
        return eta(resolve_xmod(rest, catalog_path))
    if kind == "group":
        return group_as_groupoid(parse_group(rest))
    if kind == "discrete":
        G = parse_group(rest)
        return discrete_groupoid(G.order, label=f"disc({G.label})")
    if kind == "regular":
        H, _ = action_groupoid(regular_action(parse_group(rest)))
        return H
    raise NotFound(f"no groupoid {ref!r}; use eta:, group:, discrete: or regular:")


def iso_class(G: FiniteGroup) -> str:
    """Name of the catalog group isomorphic to ``G``, if the families reach it."""
    for H in catalog_groups(G.order):
        if H.order == G.order and find_isomorphism(G, H) is not None:
            return H.label
    return f"order {G.order}"


# ---------------------------------------------------------------- commands


def cmd_catalog(args) -> int:
    cat = generate_catalog(args.max_order, args.max_pair)
    save_catalog(cat, args.out)
    n_lift = sum(len(v) for v in cat.liftings.values())
    print(f"wrote {args.out}: {len(cat.groups)} groups, {len(cat.xmods)} crossed modules, {n_lift} liftings")
    return EXIT_OK


def liftings_report(xm: CrossedModule) -> dict:
    rows = []
    for L in enumerate_liftings(xm):
        rows.append(
            {
                "kernel": sorted(int(k) for k in L.kernel.elements),
                "X_order": L.X.order,
                "degree": L.degree,
                "flags": sorted(classify_xmod_transitivity(L.as_xmod())),
                "iso_class": iso_class(L.X),
                "lifting": lifting_to_json(L, base_ref=xm.label),
            }
        )
    return {"xmod": xm.label, "A": xm.A.label, "B": xm.B.label, "liftings": rows}


def cmd_liftings(args) -> int:
    xm = resolve_xmod(args.xmod, args.catalog)
    report = liftings_report(xm)
    if args.json:
        print(json.dumps(report, sort_keys=True))
        return EXIT_OK
    print(f"liftings of {xm.label} ({xm.A.label} -> {xm.B.label}): {len(report['liftings'])}")
    print(f"{'kernel C':<20} {'|X|':>4} {'degree':>6}  {'X':<8} flags")
    for row in report["liftings"]:
        degree = "-" if row["degree"] is None else str(row["degree"])
        kernel = "{" + ",".join(map(str, row["kernel"])) + "}"
        print(f"{kernel:<20} {row['X_order']:>4} {degree:>6}  {row['iso_class']:<8} {', '.join(row['flags'])}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cat = load_catalog(args.catalog)
    except OSError as exc:
        print(f"error: cannot read catalog: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        print(f"FAIL catalog-load: not valid JSON: {exc}")
        return EXIT_FAIL
    report = run_verify(cat, args.scope)
    print(report.format())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_export_dot(args) -> int:
    G = resolve_groupoid(args.ref, args.catalog)
    text = groupoid_to_dot(G, include_identities=args.include_identities)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="xmodkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="generate a catalog of groups, crossed modules and liftings")
    c.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    c.add_argument("--max-pair", type=int, default=DEFAULT_MAX_PAIR, help="largest |A||B| enumerated")
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_catalog)

    lf = sub.add_parser("liftings", help="enumerate the liftings of a crossed module")
    lf.add_argument("--xmod", required=True, help="JSON file, catalog label or shorthand such as cyclic:4:2")
    lf.add_argument("--catalog", help="catalog to resolve labels against")
    lf.add_argument("--json", action="store_true")
    lf.set_defaults(func=cmd_liftings)

    v = sub.add_parser("verify", help="run the theorem suites over a catalog")
    v.add_argument("--scope", default="all", choices=("all",) + SCOPES)
    v.add_argument("--catalog", required=True)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("export-dot", help="write a groupoid as Graphviz DOT")
    d.add_argument("--ref", required=True, help="eta:XMOD, group:G, discrete:G or regular:G")
    d.add_argument("--out", required=True)
    d.add_argument("--catalog")
    d.add_argument("--include-identities", action="store_true")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (XModKitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
