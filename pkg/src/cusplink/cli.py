"""Command-line front end: every construction and check as a batch
subcommand with JSON, DOT, or table output.

Exit codes: 0 when all requested checks pass, 1 on a check failure,
2 on a usage error (bad flags, bad family, invalid n).  JSON output is
deterministic for fixed inputs: keys are sorted and floats carry 15
significant digits.  The CSL_MAX_GROUP environment variable overrides
the group-closure cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import link_families, train_track
from .finite_field import field_of_order, make_field, prime_power
from .link_families import (
    EXAMPLE_BRAID,
    chain_link,
    cube_edge_link,
    cube_link,
    cyclic_braid_closure,
    helical_link,
    icosahedral_link,
)
from .regular_map import biggs_map, face_adjacency_dot, map_summary
from .train_track import biggs_substitution, eigen_report, substitution_dot

_FAMILIES = ("chain", "braid", "cube", "cube_edge", "icosahedral", "helical")


def _round_floats(value):
    if isinstance(value, float):
        return float(f"{value:.15g}")
    if isinstance(value, dict):
        return {key: _round_floats(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round_floats(item) for item in value]
    return value


def _json_dumps(payload) -> str:
    return json.dumps(_round_floats(payload), sort_keys=True, indent=2) + "\n"


def _render_table(rows: list[dict], columns: list[str]) -> str:
    def cell(value) -> str:
        if isinstance(value, float):
            return f"{value:.15g}"
        return str(value)

    table = [[cell(row.get(column, "")) for column in columns] for row in rows]
    widths = [max(len(column), *(len(line[i]) for line in table)) if table else len(column)
              for i, column in enumerate(columns)]
    out = ["  ".join(column.ljust(widths[i]) for i, column in enumerate(columns))]
    for line in table:
        out.append("  ".join(line[i].ljust(widths[i]) for i in range(len(columns))))
    return "\n".join(out) + "\n"


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _field_for(n: int):
    if n is None:
        raise ValueError("--n is required for this command")
    if prime_power(n) is None or n <= 3:
        raise ValueError(f"n must be a prime power greater than 3, got {n}")
    return field_of_order(n)


def _field_from_args(args, default_n: int | None = None):
    """Resolve --n, or --p with optional --k, into a field."""
    if getattr(args, "p", None) is not None:
        spec = make_field(args.p, args.k if args.k is not None else 1)
        if spec.n <= 3:
            raise ValueError(f"field order must exceed 3, got {spec.n}")
        return spec
    n = args.n if args.n is not None else default_n
    return _field_for(n)


def _blueprint_for(family: str, args) -> link_families.LinkBlueprint:
    if family == "chain":
        return chain_link(args.n if args.n is not None else 6, args.t)
    if family == "braid":
        return cyclic_braid_closure(EXAMPLE_BRAID, m=args.m)
    if family == "cube":
        return cube_link()
    if family == "cube_edge":
        return cube_edge_link()
    if family == "icosahedral":
        return icosahedral_link()
    if family == "helical":
        return helical_link(_field_from_args(args, default_n=5))[0]
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_map(args) -> int:
    spec = _field_from_args(args)
    surface = biggs_map(spec)
    summary = map_summary(surface)
    match = summary.genus == summary.formula_genus
    if args.format == "dot":
        _emit(face_adjacency_dot(surface), args)
    else:
        payload = summary.to_json_dict()
        payload["match"] = match
        if args.format == "json":
            _emit(_json_dumps(payload), args)
        else:
            _emit(_render_table([payload],
                                ["n", "V", "E", "F", "genus", "formula_genus",
                                 "vertex_degree", "match"]), args)
    return 0 if match else 1


def cmd_transitivity(args) -> int:
    blueprint = _blueprint_for(args.family, args)
    payload = {
        "family": blueprint.family,
        "n_components": blueprint.n_components,
        "symmetry_order": blueprint.symmetry_order,
        "transitivity_degree": blueprint.transitivity_degree,
    }
    if args.format == "table":
        _emit(_render_table([payload], list(payload)), args)
    else:
        _emit(_json_dumps(payload), args)
    return 0


def cmd_links(args) -> int:
    if args.family:
        blueprint = _blueprint_for(args.family, args)
        if args.format == "table":
            _emit(_render_table([_links_row(blueprint)], _LINKS_COLUMNS), args)
        else:
            _emit(_json_dumps(blueprint.to_json_dict()), args)
        return 0
    rows = [_links_row(_blueprint_for(family, args)) for family in _FAMILIES]
    if args.format == "json":
        _emit(_json_dumps({"families": rows}), args)
    else:
        _emit(_render_table(rows, _LINKS_COLUMNS), args)
    return 0


_LINKS_COLUMNS = ["family", "ambient", "n_components", "symmetry_order",
                  "transitivity_degree", "hyperbolicity"]


def _links_row(blueprint: link_families.LinkBlueprint) -> dict:
    return {
        "family": blueprint.family,
        "ambient": blueprint.ambient,
        "n_components": blueprint.n_components,
        "symmetry_order": blueprint.symmetry_order,
        "transitivity_degree": blueprint.transitivity_degree,
        "hyperbolicity": blueprint.hyperbolicity.status,
    }


def cmd_dilatation(args) -> int:
    if args.format == "dot":
        _emit(substitution_dot(biggs_substitution()), args)
        return 0
    report = eigen_report(tol=args.tol)
    if args.format == "table":
        row = {key: report[key] for key in ("lambda", "lambda_inverse", "w", "z")}
        _emit(_render_table([row], list(row)), args)
    else:
        _emit(_json_dumps(report), args)
    threshold = max(1000.0 * args.tol, 1e-12)
    return 0 if all(value <= threshold for value in report["residuals"].values()) else 1


def cmd_census(args) -> int:
    rows = []
    passed = True
    for n in range(max(args.n_min, 2), args.n_max + 1):
        if n <= 3 or prime_power(n) is None:
            continue
        blueprint, _helix = helical_link(field_of_order(n))
        row = {
            "n": n,
            "cusps": blueprint.n_components,
            "symmetry_order": blueprint.symmetry_order,
            "transitivity_degree": blueprint.transitivity_degree,
            "linking": "complete" if blueprint.linking_complete else "partial",
        }
        rows.append(row)
        passed = passed and (row["cusps"] == n
                             and row["transitivity_degree"] == 2
                             and blueprint.linking_complete)
    if args.format == "table":
        _emit(_render_table(rows, ["n", "cusps", "symmetry_order",
                                   "transitivity_degree", "linking"]), args)
    else:
        _emit(_json_dumps({"rows": rows}), args)
    return 0 if passed else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cusplink",
        description="Regular maps over finite fields, link-family symmetries, "
                    "and the monodromy dilatation.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_common(sub, formats=("json", "table")):
        sub.add_argument("--format", choices=formats, default="json")
        sub.add_argument("--out", default=None, help="write output to this path")

    def add_field_args(sub):
        sub.add_argument("--n", type=int, default=None, help="field order (prime power > 3)")
        sub.add_argument("--p", type=int, default=None, help="field characteristic")
        sub.add_argument("--k", type=int, default=None, help="field exponent (with --p)")

    sub = subparsers.add_parser("map", help="build the order-n map and report its genus")
    add_field_args(sub)
    add_common(sub, formats=("json", "table", "dot"))
    sub.set_defaults(func=cmd_map)

    sub = subparsers.add_parser("transitivity",
                                help="transitivity degree of a family's symmetry action")
    sub.add_argument("family", choices=_FAMILIES)
    add_field_args(sub)
    sub.add_argument("--t", type=int, default=0, help="half-twists (chain)")
    sub.add_argument("--m", type=int, default=1, help="extra power (braid closure)")
    add_common(sub)
    sub.set_defaults(func=cmd_transitivity)

    sub = subparsers.add_parser("links", help="blueprint data for one family or all")
    sub.add_argument("--family", choices=_FAMILIES, default=None)
    sub.add_argument("--n", type=int, default=None,
                     help="components (chain, default 6) or field order (helical, default 5)")
    sub.add_argument("--p", type=int, default=None, help="field characteristic (helical)")
    sub.add_argument("--k", type=int, default=None, help="field exponent (with --p)")
    sub.add_argument("--t", type=int, default=0)
    sub.add_argument("--m", type=int, default=1)
    add_common(sub)
    sub.set_defaults(func=cmd_links)

    sub = subparsers.add_parser("dilatation",
                                help="stretch factor and weights of the monodromy")
    sub.add_argument("--tol", type=float, default=train_track.DEFAULT_TOL)
    add_common(sub, formats=("json", "table", "dot"))
    sub.set_defaults(func=cmd_dilatation)

    sub = subparsers.add_parser("census",
                                help="cusp counts and transitivity over a prime-power range")
    sub.add_argument("--n-min", type=int, default=4)
    sub.add_argument("--n-max", type=int, default=13)
    add_common(sub)
    sub.set_defaults(func=cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
