"""Command-line front end.

Exit codes are a contract: 0 means success with every check passing, 1
means a check found violations (or an oracle run hit its budget before
certifying), 2 means the invocation itself was bad.  Reports are still
written on exit 1.  All output is deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from ._version import __version__
from .io import (
    LabelingFormatError,
    UnsupportedDimension,
    read_labeling,
    render_svg,
    report_to_dict,
    write_labeling,
    write_oracle_result,
    write_report,
)
from .labeling import READING_SELECTED, READINGS, LabelUndefined, label_all
from .lattice import Params, Perm, enumerate_facets, is_permutation
from .oracle import min_max_colors
from .verify import full_report

MAX_ALL_PI_K = 8  # (k-1)! sweeps; 7! = 5040 is the most that stays interactive


class CliError(Exception):
    """Validation failure; the message must name the offending flag."""


def _params(args: argparse.Namespace) -> Params:
    try:
        return Params(args.k, args.q)
    except ValueError as exc:
        raise CliError(f"--k/--q: {exc}") from None


def _parse_pi(text: str, params: Params) -> Perm:
    try:
        image = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise CliError(
            f"--pi: expected a comma-separated image like 2,1,3; got {text!r}"
        ) from None
    if not is_permutation(image, params):
        raise CliError(
            f"--pi: {text!r} is not a permutation of 1..{params.k - 1}"
        )
    return image


def _emit(data: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.write(data.decode())
    else:
        Path(out).write_bytes(data)


def _load_labels(path: str, params: Params):
    try:
        labeling = read_labeling(Path(path).read_bytes())
    except OSError as exc:
        raise CliError(f"--labels: cannot read {path}: {exc}") from None
    except LabelingFormatError as exc:
        raise CliError(f"--labels: {exc}") from None
    if labeling.params != params:
        raise CliError(
            f"--labels: file is for k={labeling.params.k}, q={labeling.params.q}; "
            f"flags say k={params.k}, q={params.q}"
        )
    return labeling


def _cmd_label(args: argparse.Namespace) -> int:
    params = _params(args)
    pi = _parse_pi(args.pi, params) if args.pi else None
    try:
        labeling = label_all(params, pi, args.reading)
    except LabelUndefined as exc:
        raise CliError(f"--q: {exc}") from None
    _emit(write_labeling(labeling, args.format), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    params = _params(args)
    if args.threshold < 1:
        raise CliError(f"--threshold: must be >= 1, got {args.threshold}")
    if params.q < 1:
        raise CliError("--q: verification needs q >= 1 (no hyperedges otherwise)")
    external = _load_labels(args.labels, params) if args.labels else None

    if args.all_pi:
        if params.k > MAX_ALL_PI_K:
            raise CliError(
                f"--all-pi: k={params.k} means {params.k - 1}! permutation sweeps; "
                f"limited to k <= {MAX_ALL_PI_K}, use --pi for single subdivisions"
            )
        perms = list(itertools.permutations(range(1, params.k)))
    else:
        perms = [_parse_pi(args.pi, params) if args.pi else None]

    reports = []
    for pi in perms:
        labeling = external
        if labeling is None:
            try:
                labeling = label_all(params, pi, args.reading)
            except LabelUndefined as exc:
                raise CliError(f"--q: {exc}") from None
        reports.append(full_report(labeling, pi, args.threshold))

    if args.all_pi:
        payload = json.dumps([report_to_dict(r) for r in reports], indent=2) + "\n"
        _emit(payload.encode(), args.out)
    else:
        _emit(write_report(reports[0]), args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_facets(args: argparse.Namespace) -> int:
    params = _params(args)
    facets = enumerate_facets(params) if params.q >= 1 else []
    if args.count_only:
        print(len(facets))
        return 0
    for v, pi in facets:
        base = ",".join(map(str, v))
        image = ",".join(map(str, pi))
        print(f"base=({base}) pi=({image})")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    params = _params(args)
    if params.q < 1:
        raise CliError("--q: the oracle needs q >= 1 (no hyperedges otherwise)")
    if args.budget < 0:
        raise CliError(f"--budget: must be nonnegative, got {args.budget}")
    result = min_max_colors(params, budget=args.budget)
    _emit(write_oracle_result(result), args.out)
    return 0 if result.exhausted else 1


def _cmd_render(args: argparse.Namespace) -> int:
    params = _params(args)
    try:
        labeling = label_all(params)
    except LabelUndefined as exc:
        raise CliError(f"--q: {exc}") from None
    try:
        svg = render_svg(labeling)
    except UnsupportedDimension as exc:
        raise CliError(f"--k: {exc}") from None
    Path(args.out).write_bytes(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplexlattice",
        description="Simplex-lattice hypergraphs: labelings, verification, "
        "exact oracle, and rendering.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def instance(p: argparse.ArgumentParser) -> None:
        p.add_argument("--k", type=int, required=True, help="number of colors (>= 3)")
        p.add_argument("--q", type=int, required=True, help="dilation scale")

    p = sub.add_parser("label", help="write the built-in labeling to a file")
    instance(p)
    p.add_argument("--pi", help="permutation image, e.g. 2,1,3 (default: identity rule)")
    p.add_argument("--reading", choices=READINGS, default=READING_SELECTED)
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_label)

    p = sub.add_parser("verify", help="check Sperner-admissibility and edge colors")
    instance(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--pi", help="verify against the pi-subdivision edges")
    group.add_argument("--all-pi", action="store_true",
                       help="sweep every permutation (k <= 8)")
    p.add_argument("--threshold", type=int, default=2,
                   help="max colors allowed per edge (default 2)")
    p.add_argument("--labels", help="verify this labeling file instead of the built-in rule")
    p.add_argument("--reading", choices=READINGS, default=READING_SELECTED)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("facets", help="enumerate facets of the edgewise subdivision")
    instance(p)
    p.add_argument("--count-only", action="store_true", help="print only the facet count")
    p.set_defaults(handler=_cmd_facets)

    p = sub.add_parser("oracle", help="exact minimum max-colors-per-edge by exhaustion")
    instance(p)
    p.add_argument("--budget", type=int, default=1_000_000,
                   help="node budget for the search (default 1000000)")
    p.add_argument("--out", help="write the result here instead of stdout")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("render", help="SVG picture of the colored triangulation (k=3)")
    instance(p)
    p.add_argument("--out", required=True, help="output path for the SVG")
    p.set_defaults(handler=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
