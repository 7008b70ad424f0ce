"""Command line front end and the JSON interchange format for labelings.

Exit codes: 0 success (including Exists and verified-magic), 1 invalid
arguments, 2 malformed input file, 3 negative outcome (NotExists, or a
labeling that fails verification), 4 unknown existence, 5 constructor
search exhausted its budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import construct
from .errors import InvalidSpec, OddSideCount, SideCountTooSmall
from .properties import Verdict, constants, exists
from .render import to_svg
from .search import Mode, SearchOptions, solve
from .structure import Family, StructureSpec, build
from .verify import Labeling, VerifyReport, verify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BAD_FILE = 2
EXIT_NEGATIVE = 3
EXIT_UNKNOWN = 4
EXIT_NOT_FOUND = 5

_MODES = {"first": Mode.FIRST, "count": Mode.COUNT_ALL, "all": Mode.ENUMERATE_ALL}


def document_from(spec: StructureSpec, labeling: Labeling) -> dict:
    """Serialize a labeling as a plain JSON-ready document, rings outermost first."""
    rings = [
        [labeling.values[spec.point_id(t, q)] for q in range(1, spec.ring_length + 1)]
        for t in range(1, spec.rings + 1)
    ]
    return {
        "family": spec.family.value,
        "n": spec.n,
        "k": spec.k,
        "center": labeling.values[0],
        "rings": rings,
    }


def parse_document(doc: object) -> tuple[StructureSpec, Labeling]:
    """Inverse of document_from; raises ValueError on any malformed content."""
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    for key in ("family", "n", "k", "center", "rings"):
        if key not in doc:
            raise ValueError(f"document is missing field '{key}'")
    if doc["family"] not in ("P", "D"):
        raise ValueError(f"unknown family {doc['family']!r}")
    if not all(isinstance(doc[key], int) for key in ("n", "k", "center")):
        raise ValueError("fields n, k, center must be integers")
    spec = StructureSpec(Family(doc["family"]), doc["n"], doc["k"])
    rings = doc["rings"]
    if not isinstance(rings, list) or len(rings) != spec.rings:
        raise ValueError(f"expected {spec.rings} ring arrays")
    values = {0: doc["center"]}
    for t, ring in enumerate(rings, start=1):
        if not isinstance(ring, list) or len(ring) != spec.ring_length:
            raise ValueError(f"ring {t} must hold {spec.ring_length} integers")
        for q, v in enumerate(ring, start=1):
            if not isinstance(v, int):
                raise ValueError(f"ring {t} position {q} is not an integer")
            values[spec.point_id(t, q)] = v
    return spec, Labeling(values)


def _exact(value: Fraction) -> int | str:
    return int(value) if value.denominator == 1 else str(value)


def _report_json(report: VerifyReport) -> dict:
    return {
        "is_magic": report.is_magic,
        "bijective": report.bijective,
        "duplicates": list(report.duplicates),
        "out_of_range": list(report.out_of_range),
        "violations": [[idx, actual, _exact(expected)] for idx, actual, expected in report.violations],
        "center_value": report.center_value,
        "layer_sums": list(report.layer_sums),
    }


def _spec_from(args: argparse.Namespace) -> StructureSpec:
    return StructureSpec(Family(args.family), args.n, args.k)


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", required=True, choices=["P", "D"])
    parser.add_argument("--n", required=True, type=int)
    parser.add_argument("--k", required=True, type=int)


def _read_document(path: str) -> tuple[StructureSpec, Labeling] | int:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_BAD_FILE
    try:
        return parse_document(json.loads(text))
    except (json.JSONDecodeError, ValueError) as exc:
        print(f"error: malformed labeling document: {exc}", file=sys.stderr)
        return EXIT_BAD_FILE


def _cmd_props(args: argparse.Namespace) -> int:
    spec = _spec_from(args)
    consts = constants(spec)
    print(f"point_count: {spec.point_count}")
    print(f"magic_sum: {_exact(consts.magic_sum)}")
    print(f"center_value: {_exact(consts.center_value)}")
    print("layer_sums: " + " ".join(str(_exact(s)) for s in consts.layer_sums))
    return EXIT_OK


def _cmd_exists(args: argparse.Namespace) -> int:
    result = exists(_spec_from(args))
    print(f"{result.verdict.value} {result.reason.value}")
    if result.verdict is Verdict.EXISTS:
        return EXIT_OK
    if result.verdict is Verdict.NOT_EXISTS:
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN


def _cmd_construct(args: argparse.Namespace) -> int:
    spec = _spec_from(args)
    if spec.family is Family.MAGIC and spec.k == 2:
        labeling = construct.p2(spec.n)
    elif spec.family is Family.MAGIC and spec.k == 4:
        found = construct.p4(spec.n, args.budget)
        if found is None:
            print("error: no labeling found within the node budget", file=sys.stderr)
            return EXIT_NOT_FOUND
        labeling = found
    elif spec.family is Family.DEGENERATE and spec.k == 2:
        labeling = construct.d2(spec.n)
    else:
        print(f"error: no constructor for family {spec.family.value} with k={spec.k}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(document_from(spec, labeling)))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    loaded = _read_document(args.file)
    if isinstance(loaded, int):
        return loaded
    spec, labeling = loaded
    report = verify(build(spec), labeling)
    print(json.dumps(_report_json(report)))
    return EXIT_OK if report.is_magic else EXIT_NEGATIVE


def _cmd_search(args: argparse.Namespace) -> int:
    spec = _spec_from(args)
    options = SearchOptions(mode=_MODES[args.mode], node_limit=args.limit, parallel=args.parallel)
    result = solve(build(spec), options)
    print(
        json.dumps(
            {
                "status": result.status.value,
                "count": result.count,
                "nodes_explored": result.nodes_explored,
                "solutions": [document_from(spec, sol) for sol in result.solutions],
            }
        )
    )
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    if (args.file is None) == (args.family is None):
        print("error: pass either --file or --family/--n/--k with --bare", file=sys.stderr)
        return EXIT_USAGE
    if args.file is not None:
        loaded = _read_document(args.file)
        if isinstance(loaded, int):
            return loaded
        spec, labeling = loaded
    else:
        if not args.bare:
            print("error: rendering by spec alone requires --bare", file=sys.stderr)
            return EXIT_USAGE
        if args.n is None or args.k is None:
            print("error: --family requires --n and --k", file=sys.stderr)
            return EXIT_USAGE
        spec, labeling = StructureSpec(Family(args.family), args.n, args.k), None
    svg = to_svg(build(spec), labeling)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magicpoly",
        description="Construct, verify, search and render magic polygon labelings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_props = sub.add_parser("props", help="print point count and forced sums")
    _add_spec_args(p_props)
    p_props.set_defaults(handler=_cmd_props)

    p_exists = sub.add_parser("exists", help="report whether a magic labeling exists")
    _add_spec_args(p_exists)
    p_exists.set_defaults(handler=_cmd_exists)

    p_construct = sub.add_parser("construct", help="emit a labeling document as JSON")
    _add_spec_args(p_construct)
    p_construct.add_argument("--budget", type=int, default=construct.DEFAULT_BUDGET)
    p_construct.set_defaults(handler=_cmd_construct)

    p_verify = sub.add_parser("verify", help="check a labeling document")
    p_verify.add_argument("--file", required=True, help="path to a labeling document, or - for stdin")
    p_verify.set_defaults(handler=_cmd_verify)

    p_search = sub.add_parser("search", help="solve for magic labelings")
    _add_spec_args(p_search)
    p_search.add_argument("--mode", required=True, choices=sorted(_MODES))
    p_search.add_argument("--limit", type=int, default=None)
    p_search.add_argument("--parallel", action="store_true")
    p_search.set_defaults(handler=_cmd_search)

    p_render = sub.add_parser("render", help="emit an SVG figure")
    p_render.add_argument("--file", default=None, help="labeling document, or - for stdin")
    p_render.add_argument("--family", default=None, choices=["P", "D"])
    p_render.add_argument("--n", type=int, default=None)
    p_render.add_argument("--k", type=int, default=None)
    p_render.add_argument("--bare", action="store_true", help="draw the structure without labels")
    p_render.add_argument("--out", default=None)
    p_render.set_defaults(handler=_cmd_render)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse and execute one command; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.handler(args)
    except (InvalidSpec, OddSideCount, SideCountTooSmall, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
