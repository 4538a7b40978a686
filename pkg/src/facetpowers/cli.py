"""Command-line surface: analyze / power / depth / verify / random.

Exit codes: 0 all good, 1 verification failure, 2 usage error, 3 budget
exceeded.  Inputs are fixture names or JSON files (complex or ideal format);
outputs are canonical-ordered JSON or a human summary.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .complexes import SimplicialComplex, complex_from_json
from .errors import BudgetExceededError, FacetPowersError
from .fixtures import load_fixture
from .generator import GeneratorParams, random_grafted_forest
from .grafting import is_grafted, matching_number
from .homology import betti_table, depth_report
from .ideals import MonomialIdeal, facet_ideal, ideal_from_json, squarefree_power
from .leaves import is_forest, is_good_leaf, is_leaf, special_leaves
from .verify import verify_all

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load_target(token: str):
    """Resolve a fixture name or a JSON file into a complex or an ideal."""
    if os.path.exists(token):
        with open(token, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if "facets" in data:
            return complex_from_json(data), os.path.basename(token)
        if "generators" in data:
            return ideal_from_json(data), os.path.basename(token)
        raise FacetPowersError(f"{token}: neither a complex nor an ideal JSON")
    return load_fixture(token).complex, token


def _as_ideal(obj) -> MonomialIdeal:
    return facet_ideal(obj) if isinstance(obj, SimplicialComplex) else obj


def _as_complex(obj, token: str) -> SimplicialComplex:
    if not isinstance(obj, SimplicialComplex):
        raise FacetPowersError(f"{token}: this command needs a complex")
    return obj


def _parse_field(text: str) -> int:
    if text.lower() in ("q", "0", "rational", "rationals"):
        return 0
    return int(text)


def _parse_k_range(text: str | None):
    if not text:
        return None
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _emit(data: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


def cmd_analyze(args) -> int:
    obj, name = _load_target(args.target)
    dcx = _as_complex(obj, args.target)
    leaves = [f for f in dcx.facets if is_leaf(dcx, f) is not None]
    good = [f for f in dcx.facets if is_good_leaf(dcx, f) is not None]
    specials = special_leaves(dcx)
    special_masks = {f.mask for f in specials}
    order = is_forest(dcx)
    cert = is_grafted(dcx)
    nu = matching_number(dcx)
    data = {
        "target": name,
        "vertices": list(dcx.labels),
        "facets": [list(f.names) for f in dcx.facets],
        "leaves": [list(f.names) for f in leaves],
        "good_leaves": [list(f.names) for f in good],
        "special_leaves": [list(f.names) for f in specials],
        "leaves_not_special": [
            list(f.names) for f in leaves if f.mask not in special_masks
        ],
        "is_forest": order is not None,
        "good_leaf_order": [list(f.names) for f in order.order] if order else None,
        "grafted": (
            {
                "leaves": [list(f.names) for f in cert.grafted_leaves],
                "base": [list(f.names) for f in cert.base_facets],
            }
            if cert
            else None
        ),
        "matching_number": nu,
    }
    lines = [
        f"{name}: {len(dcx.facets)} facets over {len(dcx.labels)} vertices",
        f"  leaves: {', '.join('{' + ','.join(f.names) + '}' for f in leaves) or 'none'}",
        f"  good leaves: {', '.join('{' + ','.join(f.names) + '}' for f in good) or 'none'}",
        f"  special leaves: {', '.join('{' + ','.join(f.names) + '}' for f in specials) or 'none'}",
        f"  forest: {'yes' if order else 'no'}",
        f"  grafted: {'yes' if cert else 'no'}",
        f"  matching number: {nu}",
    ]
    _emit(data, args.json, lines)
    return EXIT_OK


def cmd_power(args) -> int:
    obj, _ = _load_target(args.target)
    power = squarefree_power(_as_ideal(obj), args.k)
    print(power.to_json_str())
    return EXIT_OK


def cmd_depth(args) -> int:
    obj, _ = _load_target(args.target)
    ideal = _as_ideal(obj)
    report = depth_report(ideal, args.field)
    data = report.to_json()
    if args.betti:
        data["betti"] = [
            {"i": e.index, "multidegree": list(e.multidegree.names), "rank": e.rank}
            for e in betti_table(ideal, args.field)
        ]
    print(json.dumps(data, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    ks = _parse_k_range(args.k_range)
    if args.seed is not None:
        params = GeneratorParams(
            seed=args.seed,
            base_facet_count=args.base_facets,
            max_facet_size=args.max_facet_size,
            vertex_budget=args.vertex_budget,
            whisker_mode=args.whisker_mode,
        )
        target = random_grafted_forest(params)
        report = verify_all(target, ks, args.field)
    else:
        if args.target is None:
            print("verify needs a fixture/file or --seed", file=sys.stderr)
            return EXIT_USAGE
        obj, name = _load_target(args.target)
        if isinstance(obj, MonomialIdeal):
            print(f"{args.target}: verify expects a complex", file=sys.stderr)
            return EXIT_USAGE
        if os.path.exists(args.target):
            report = verify_all(obj, ks, args.field)
        else:
            report = verify_all(args.target, ks, args.field)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(report.human_summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_random(args) -> int:
    params = GeneratorParams(
        seed=args.seed,
        base_facet_count=args.base_facets,
        max_facet_size=args.max_facet_size,
        vertex_budget=args.vertex_budget,
        whisker_mode=args.whisker_mode,
    )
    generated = random_grafted_forest(params)
    print(generated.complex.to_json_str())
    return EXIT_OK


def _add_generator_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--base-facets", type=int, default=2)
    parser.add_argument("--max-facet-size", type=int, default=4)
    parser.add_argument("--vertex-budget", type=int, default=14)
    parser.add_argument(
        "--whisker-mode", choices=["all-vertices", "block"], default="all-vertices"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facetpowers",
        description="Square-free powers of facet ideals: combinatorics and exact depth checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="leaves, special leaves, forest and grafting status")
    p.add_argument("target", help="fixture name or complex JSON file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("power", help="emit the k-th square-free power as ideal JSON")
    p.add_argument("target", help="fixture name or complex/ideal JSON file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("depth", help="exact depth report of a monomial quotient")
    p.add_argument("target", help="fixture name or complex/ideal JSON file")
    p.add_argument("--field", type=_parse_field, default=0, help="q (default), 2, 3, ...")
    p.add_argument("--betti", action="store_true", help="include the Betti table")
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("verify", help="replay the verification battery")
    p.add_argument("target", nargs="?", help="fixture name or complex JSON file")
    p.add_argument("--seed", type=int, help="verify a seeded random grafted forest")
    p.add_argument("--k-range", help="e.g. 2 or 1..4 (default: all k)")
    p.add_argument("--field", type=_parse_field, default=0)
    p.add_argument("--json", action="store_true")
    _add_generator_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="emit a seeded random grafted forest")
    p.add_argument("--seed", type=int, required=True)
    _add_generator_options(p)
    p.set_defaults(func=cmd_random)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FacetPowersError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
