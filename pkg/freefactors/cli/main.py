"""Command-line entry point.

Usage::

    freefactors factor -n 3 "ab, c"
    freefactors antipodal -n 3 --factor "a,b" --word "cac"
    freefactors suite -n 4 --seed 7 --json
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from collections.abc import Sequence
from typing import TextIO

from freefactors.cli.commands import HANDLERS, CommandResult
from freefactors.core.config import settings
from freefactors.core.logging import get_log_context, get_logger, setup_logging
from freefactors.exceptions import FreeFactorsError
from freefactors.reports import CheckStatus

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, default=3, help="rank of the free group (default 3)")
    common.add_argument("--mode", choices=("af", "of"), default="af")
    common.add_argument(
        "--bound",
        type=int,
        default=settings.loop_search_bound,
        help="loop-search length bound",
    )
    common.add_argument("--seed", type=int, default=settings.seed)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--dot", metavar="PATH", help="write a DOT rendering to PATH")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="freefactors",
        description="Core graphs of free groups and apartments of the free factor complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    for name, help_text in (("fold", "fold a wedge of loops"), ("core", "core graph")):
        p = add(name, help_text)
        p.add_argument("words", nargs="*", help="generator words, comma-separated")
        p.add_argument("--graph", metavar="PATH", help="graph in the text format")
        if name == "core":
            p.add_argument("--unpointed", action="store_true")

    p = add("member", "subgroup membership")
    p.add_argument("--subgroup", required=True)
    p.add_argument("--word", required=True)

    p = add("intersect", "intersection of two subgroups")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("factor", "free factor test with a complement witness")
    p.add_argument("words", nargs="+")

    p = add("antipodal", "antipodality of a corank-1 factor and a word")
    p.add_argument("--factor", required=True)
    p.add_argument("--word", required=True)

    for name, help_text in (
        ("apartment", "verify an apartment"),
        ("sticks", "sticks of a standard apartment"),
        ("snops", "snops and the cube they span"),
        ("supersticks", "supersticks of a rank-3 face"),
        ("overlap", "overlap with a Nielsen-adjacent apartment"),
    ):
        p = add(name, help_text)
        p.add_argument("--basis", help="basis words, comma-separated (default a_1..a_n)")
        if name == "apartment":
            p.add_argument("--example", choices=("unspanned", "non-antipodal"))
        if name == "supersticks":
            p.add_argument("--face", help="three indices, e.g. 1,2,3")
        if name == "overlap":
            p.add_argument("--nielsen", default="1,2", help="indices i,j of b_i -> b_i b_j")

    add("fake7", "bridge family of fake apartments in rank n")
    add("ex68", "the twisted rank-3 apartment")
    add("suite", "acceptance suite up to rank n")

    p = add("dot", "DOT export")
    p.add_argument("--what", choices=("graph", "apartment", "cube"), default="graph")
    p.add_argument("words", nargs="*")
    p.add_argument("--graph", metavar="PATH")
    p.add_argument("--basis")
    p.add_argument("--example", choices=("unspanned", "non-antipodal"))
    return parser


def _exit_code(result: CommandResult) -> int:
    if not result.ok:
        return EXIT_FAILED
    if result.report is not None and not result.report.passed:
        return EXIT_FAILED
    return EXIT_OK


def render(result: CommandResult, as_json: bool) -> str:
    if as_json:
        return result.model_dump_json(indent=2) + "\n"
    text = result.output
    if result.report is not None:
        text += result.report.to_text() + "\n"
    return text


def run(
    argv: Sequence[str] | None = None,
    out: TextIO | None = None,
    err: TextIO | None = None,
) -> int:
    """Parse argv, dispatch, write the rendering and return the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    # help goes to out, usage errors to err
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        result = HANDLERS[args.command](args)
    except FreeFactorsError as exc:
        err.write(f"error: {exc}\n")
        logger.debug(
            "command failed",
            extra=get_log_context(rank=args.n, operation=args.command, error=type(exc).__name__),
        )
        return exc.exit_code
    except (OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE

    if result.report is not None and any(
        c.status is CheckStatus.INCONCLUSIVE for c in result.report.checks
    ):
        logger.warning(
            "inconclusive verdict",
            extra=get_log_context(rank=args.n, operation=args.command, bound=args.bound),
        )
    out.write(render(result, args.json))
    return _exit_code(result)


def main() -> None:
    setup_logging()
    sys.exit(run())


if __name__ == "__main__":
    main()
