"""Command-line surface.

Subcommands: analyze, verify, bounds, search, proofcheck, generate.
Exit codes: 0 = every evaluated check passed or was inapplicable,
1 = some check came back unsatisfied (or a certified claim was refuted),
2 = input or usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bounds import BoundTheorem, evaluate_bound
from .errors import ClaimRefutedError, EquilinesError
from .generators import discriminant_of, generate
from .geometry import GREEN
from .inequalities import InequalityKind, evaluate
from .profiles import compute_profile
from .proofcheck import template_for, verify_sign_claim
from .reports import (
    analysis_document,
    bound_section,
    certificate_section,
    config_document,
    dump_json,
    inequality_section,
    parse_config,
    render_text,
    search_section,
    summary_section,
)
from .search import SearchSpec, run_search

_INEQUALITY_NAMES = {kind.value: kind for kind in InequalityKind}
_THEOREM_NAMES = {th.value: th for th in BoundTheorem}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument(
        "--decimal",
        action="store_true",
        help="append approximate decimals in text output (display only)",
    )
    parser = argparse.ArgumentParser(
        prog="equilines",
        description="Exact analyzer for two-colored point configurations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report for config files")
    p.add_argument("files", nargs="+", metavar="FILE")

    p = sub.add_parser("verify", parents=[common], help="evaluate one inequality")
    p.add_argument("file", metavar="FILE")
    p.add_argument(
        "--inequality", required=True, choices=sorted(_INEQUALITY_NAMES)
    )

    p = sub.add_parser("bounds", parents=[common], help="evaluate one bound theorem")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--theorem", required=True, choices=sorted(_THEOREM_NAMES))

    p = sub.add_parser("search", parents=[common], help="search colorings of a base set")
    p.add_argument("--generator", required=True, metavar="SPEC")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--theorem", required=True, choices=sorted(_THEOREM_NAMES))
    p.add_argument("--mode", choices=("exhaustive", "local"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--cap", type=int, default=10_000_000)

    p = sub.add_parser("proofcheck", parents=[common], help="certify coefficient claims")
    p.add_argument(
        "--theorem", required=True, choices=("equisix", "equifour")
    )
    p.add_argument("--window", type=int, default=None)

    p = sub.add_parser("generate", parents=[common], help="emit a config document")
    p.add_argument("--name", required=True, metavar="SPEC")
    return parser


def _emit(doc: dict, fmt: str, decimal: bool) -> None:
    if fmt == "json":
        sys.stdout.write(dump_json(doc))
    else:
        sys.stdout.write(render_text(doc, decimal))


def _load_config(path: str):
    p = Path(path)
    if not p.is_file():
        raise EquilinesError(f"no such file: {path}")
    return parse_config(p.read_text(encoding="utf-8"))


def _cmd_analyze(args) -> int:
    worst = 0
    multi = len(args.files) > 1
    for path in args.files:
        config = _load_config(path)
        doc, ok = analysis_document(config)
        if multi:
            doc = {"file": path, **doc}
        _emit(doc, args.format, args.decimal)
        if not ok:
            worst = 1
    return worst


def _cmd_verify(args) -> int:
    config = _load_config(args.file)
    profile = compute_profile(config, checked=False)
    report = evaluate(_INEQUALITY_NAMES[args.inequality], config)
    doc = {
        "summary": summary_section(config, profile),
        "inequalities": [inequality_section(report)],
    }
    _emit(doc, args.format, args.decimal)
    return 1 if report.satisfied is False else 0


def _cmd_bounds(args) -> int:
    config = _load_config(args.file)
    profile = compute_profile(config, checked=False)
    report = evaluate_bound(_THEOREM_NAMES[args.theorem], config, profile)
    doc = {
        "summary": summary_section(config, profile),
        "bounds": [bound_section(report)],
    }
    _emit(doc, args.format, args.decimal)
    return 1 if report.satisfied is False else 0


def _cmd_search(args) -> int:
    points = generate(args.generator)
    spec = SearchSpec(
        points=points,
        k=args.k,
        theorem=_THEOREM_NAMES[args.theorem],
        mode=args.mode,
        seed=args.seed,
        budget=args.budget,
        cap=args.cap,
    )
    result = run_search(spec)
    _emit({"search": search_section(result)}, args.format, args.decimal)
    return 1 if result.bound_violated else 0


def _cmd_proofcheck(args) -> int:
    theorem = _THEOREM_NAMES[args.theorem]
    window = args.window
    if window is None:
        window = template_for(theorem).tail_threshold
    try:
        cert = verify_sign_claim(theorem, window)
    except ClaimRefutedError as exc:
        sys.stdout.write(f"claim refuted at cell {exc.cell}: {exc}\n")
        return 1
    _emit({"certificates": [certificate_section(cert)]}, args.format, args.decimal)
    return 0


def _cmd_generate(args) -> int:
    points = generate(args.name)
    colors = tuple(GREEN for _ in points)
    doc = config_document(points, colors, discriminant_of(points))
    sys.stdout.write(dump_json(doc))
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "bounds": _cmd_bounds,
    "search": _cmd_search,
    "proofcheck": _cmd_proofcheck,
    "generate": _cmd_generate,
}


def run_cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except EquilinesError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run_cli())
