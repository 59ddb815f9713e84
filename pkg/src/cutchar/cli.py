"""Command line front end.

Subcommands::

    cutchar cohomology BUNDLE          section characters of a bundle
    cutchar cut BUNDLE                 the level-zero cut and its cohomology
    cutchar verify BUNDLE [--checks]   run checks on one bundle
    cutchar sweep ...                  run checks over a rank-one grid
    cutchar equality-region ...        map where the inequalities are tight

``BUNDLE`` is comma-separated ``rP:rQ`` pairs, e.g. ``1:-1,2:2``.  Ranges
are inclusive ``A..B``.  Exit status: 0 when everything passed, 1 when some
check failed, 2 on usage or input errors.  Output is byte-stable unless
``--timestamps`` is given.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from .geometry import EquivBundleCP1, cohomology, cut, mcut_cohomology
from .verify import ALL_CHECKS, SweepReport, equality_region, grid_bundles, sweep

__all__ = ["main", "console_main", "RunConfig"]


class _UsageError(Exception):
    pass


def _parse_bundle(literal: str) -> EquivBundleCP1:
    try:
        return EquivBundleCP1.parse(literal)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _parse_range(text: str) -> tuple[int, int]:
    head, sep, tail = text.partition("..")
    if not sep:
        raise _UsageError(f"bad range {text!r}: expected A..B")
    try:
        lo, hi = int(head), int(tail)
    except ValueError:
        raise _UsageError(f"bad range {text!r}: endpoints must be integers") from None
    if lo > hi:
        raise _UsageError(f"bad range {text!r}: {lo} > {hi}")
    return lo, hi


def _parse_checks(text: str) -> tuple[str, ...]:
    if text == "all":
        return ALL_CHECKS
    ids = tuple(piece.strip() for piece in text.split(","))
    for cid in ids:
        if cid not in ALL_CHECKS:
            raise _UsageError(f"unknown check id {cid!r}; known: {', '.join(ALL_CHECKS)}, all")
    return ids


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Settings loadable from a JSON file, overridable by flags.

    The file holds exactly one bundle source, either
    ``{"bundles": ["rP:rQ", ...]}`` or
    ``{"grid": {"rp_range": "A..B", "rq_range": "A..B"}}``, plus optional
    ``"checks"`` (list of ids), ``"fail_fast"`` (bool) and
    ``"output"`` ({"path": ..., "format": ...}).
    """

    bundles: tuple[EquivBundleCP1, ...] | None = None
    grid: tuple[tuple[int, int], tuple[int, int]] | None = None
    checks: tuple[str, ...] | None = None
    fail_fast: bool | None = None
    out: str | None = None
    fmt: str | None = None

    @classmethod
    def load(cls, path: str) -> "RunConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                obj = json.load(fh)
        except OSError as exc:
            raise _UsageError(f"cannot read config {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise _UsageError(f"config {path} is not valid JSON: {exc}") from None
        if not isinstance(obj, dict):
            raise _UsageError(f"config {path} must be a JSON object")
        known = {"bundles", "grid", "checks", "fail_fast", "output"}
        unknown = set(obj) - known
        if unknown:
            raise _UsageError(f"config {path} has unknown keys: {', '.join(sorted(unknown))}")
        if ("bundles" in obj) == ("grid" in obj):
            raise _UsageError(f"config {path} must set exactly one of bundles, grid")
        bundles = grid = None
        if "bundles" in obj:
            lits = obj["bundles"]
            if not isinstance(lits, list) or not lits:
                raise _UsageError(f"config {path}: bundles must be a nonempty list")
            bundles = tuple(_parse_bundle(lit) for lit in lits)
        else:
            g = obj["grid"]
            if not isinstance(g, dict) or set(g) != {"rp_range", "rq_range"}:
                raise _UsageError(f"config {path}: grid must have keys rp_range, rq_range")
            grid = (_parse_range(g["rp_range"]), _parse_range(g["rq_range"]))
        checks = None
        if "checks" in obj:
            ids = obj["checks"]
            if not isinstance(ids, list):
                raise _UsageError(f"config {path}: checks must be a list of ids")
            checks = _parse_checks(",".join(ids)) if ids else ()
        fail_fast = obj.get("fail_fast")
        if fail_fast is not None and type(fail_fast) is not bool:
            raise _UsageError(f"config {path}: fail_fast must be a boolean")
        out = fmt = None
        if "output" in obj:
            output = obj["output"]
            if not isinstance(output, dict) or not set(output) <= {"path", "format"}:
                raise _UsageError(f"config {path}: output takes keys path, format")
            out = output.get("path")
            fmt = output.get("format")
            if fmt is not None and fmt not in ("json", "csv", "md"):
                raise _UsageError(f"config {path}: format must be json, csv or md")
        return cls(bundles, grid, checks, fail_fast, out, fmt)


def _timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _emit_json(obj: dict, args) -> None:
    if args.timestamps:
        obj["generated_at"] = _timestamp()
    _write(json.dumps(obj, indent=2) + "\n", args.out)


def _emit_report(report: SweepReport, fmt: str, args) -> None:
    if fmt == "json":
        _emit_json(report.to_json_obj(), args)
    elif fmt == "csv":
        _write(report.to_csv(), args.out)
    else:
        text = report.to_markdown()
        if args.timestamps:
            text += f"\nGenerated: {_timestamp()}\n"
        _write(text, args.out)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_cohomology(args) -> int:
    table = cohomology(_parse_bundle(args.bundle))
    _emit_json(table.to_json_obj(), args)
    return 0


def _cmd_cut(args) -> int:
    bundle = _parse_bundle(args.bundle)
    cutd = cut(bundle)
    obj = {
        "bundle": bundle.literal(),
        "plus": {"bundle": cutd.plus.literal(), **cohomology(cutd.plus).to_json_obj()},
        "minus": {"bundle": cutd.minus.literal(), **cohomology(cutd.minus).to_json_obj()},
        "red_dims": list(cutd.red_dims),
        "mcut": mcut_cohomology(cutd).to_json_obj(),
    }
    _emit_json(obj, args)
    return 0


def _cmd_verify(args) -> int:
    bundle = _parse_bundle(args.bundle)
    checks = _parse_checks(args.checks)
    report = sweep([bundle], checks)
    _emit_report(report, args.format, args)
    return 0 if report.passed else 1


def _cmd_sweep(args) -> int:
    config = RunConfig.load(args.config) if args.config else RunConfig()
    rp = _parse_range(args.rp_range) if args.rp_range else None
    rq = _parse_range(args.rq_range) if args.rq_range else None
    if (rp is None) != (rq is None):
        raise _UsageError("--rp-range and --rq-range go together")
    if rp is not None:
        bundles = grid_bundles(rp, rq)
    elif config.bundles is not None:
        bundles = list(config.bundles)
    elif config.grid is not None:
        bundles = grid_bundles(*config.grid)
    else:
        raise _UsageError("no bundles: give --rp-range/--rq-range or --config")
    if args.checks:
        checks = _parse_checks(args.checks)
    else:
        checks = config.checks if config.checks is not None else ALL_CHECKS
    fail_fast = args.fail_fast if args.fail_fast is not None else bool(config.fail_fast)
    fmt = args.format or config.fmt or "json"
    if args.out is None and config.out is not None:
        args.out = config.out
    report = sweep(bundles, checks, fail_fast=fail_fast)
    _emit_report(report, fmt, args)
    return 0 if report.passed else 1


def _cmd_equality_region(args) -> int:
    report = equality_region(_parse_range(args.rp_range), _parse_range(args.rq_range))
    _emit_report(report, args.format, args)
    return 0 if report.passed else 1


class _Parser(argparse.ArgumentParser):
    """Parser that accepts values starting with a negative weight.

    Bundle literals like ``-3:0`` and ranges like ``-1..1`` begin with a
    dash; widening the negative-number test keeps argparse from reading
    them as option flags.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cutchar",
        description="Exact circle-equivariant section characters on the projective line, "
        "the level-zero cut, and checks of the gluing and Morse-type relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--timestamps", action="store_true", help="stamp the output with the generation time")

    p = sub.add_parser("cohomology", parents=[common], help="section characters of a bundle")
    p.add_argument("bundle", help="bundle literal, e.g. 1:-1,2:2")
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("cut", parents=[common], help="the level-zero cut and its cohomology")
    p.add_argument("bundle", help="bundle literal, e.g. 1:-1,2:2")
    p.set_defaults(func=_cmd_cut)

    p = sub.add_parser("verify", parents=[common], help="run checks on one bundle")
    p.add_argument("bundle", help="bundle literal, e.g. 1:-1,2:2")
    p.add_argument("--checks", default="all", help="comma-separated check ids, or all")
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="run checks over a rank-one grid")
    p.add_argument("--rp-range", metavar="A..B", help="inclusive range of r_P")
    p.add_argument("--rq-range", metavar="A..B", help="inclusive range of r_Q")
    p.add_argument("--checks", help="comma-separated check ids, or all")
    p.add_argument("--format", choices=("json", "csv", "md"))
    p.add_argument("--fail-fast", action="store_true", default=None, help="stop at the first failing check")
    p.add_argument("--config", metavar="PATH", help="JSON run configuration; flags override it")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser(
        "equality-region", parents=[common], help="map where the Morse-type inequalities are tight"
    )
    p.add_argument("--rp-range", metavar="A..B", required=True)
    p.add_argument("--rq-range", metavar="A..B", required=True)
    p.add_argument("--format", choices=("json", "csv", "md"), default="md")
    p.set_defaults(func=_cmd_equality_region)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())
