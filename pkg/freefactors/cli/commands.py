"""Subcommand handlers. Each returns a CommandResult; rendering lives in main."""

from __future__ import annotations

import argparse
from pathlib import Path

from pydantic import BaseModel

from freefactors.cli.suite import run_suite
from freefactors.complex import (
    Apartment,
    antipodal_faces_check,
    buildup_conditions,
    cube_to_dot,
    fake_family,
    is_standard_af,
    nielsen_adjacent,
    non_antipodal_apartment,
    of3_report,
    overlap_report,
    snops,
    standard_apartment,
    sticks_of,
    supersticks,
    to_dot,
    twisted_apartment_report,
    unspanned_apartment,
    verify_apartment,
)
from freefactors.exceptions import RankMismatchError
from freefactors.graphs import LabeledGraph, core, dumps, fold, loads, wedge_of_loops
from freefactors.graphs import to_dot as graph_to_dot
from freefactors.reports import Report
from freefactors.subgroups import (
    Mode,
    antipodal_af,
    antipodal_of_fold,
    contains,
    intersect,
    is_free_factor,
    subgroup_of,
)
from freefactors.words import Alphabet, Word


class CommandResult(BaseModel):
    """Output of one subcommand: free text, a report, or both."""

    command: str
    ok: bool = True
    output: str = ""
    report: Report | None = None


def _words(args: argparse.Namespace, text: str | list[str] | None) -> list[Word]:
    alphabet = Alphabet(args.n)
    if text is None:
        return []
    parts = [text] if isinstance(text, str) else text
    return [w for part in parts for w in alphabet.parse_list(part)]


def _graph(args: argparse.Namespace) -> LabeledGraph:
    if args.graph is not None:
        g = loads(Path(args.graph).read_text())
        if g.rank != args.n:
            raise RankMismatchError(args.n, g.rank)
        return g
    return wedge_of_loops(_words(args, args.words), args.n)


def _mode(args: argparse.Namespace) -> Mode:
    return Mode(args.mode)


def _basis(args: argparse.Namespace) -> list[Word]:
    basis = _words(args, getattr(args, "basis", None))
    return basis or Alphabet(args.n).generators()


def _pair(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _write_dot(args: argparse.Namespace, dot: str) -> None:
    if args.dot:
        Path(args.dot).write_text(dot)


def cmd_fold(args: argparse.Namespace) -> CommandResult:
    return CommandResult(command="fold", output=dumps(fold(_graph(args))))


def cmd_core(args: argparse.Namespace) -> CommandResult:
    graph = core(fold(_graph(args)), pointed=not args.unpointed)
    return CommandResult(command="core", output=dumps(graph))


def cmd_member(args: argparse.Namespace) -> CommandResult:
    h = subgroup_of(_words(args, args.subgroup), args.n)
    w = Alphabet(args.n).parse(args.word)
    found = contains(h, w)
    return CommandResult(command="member", ok=found, output=f"member: {str(found).lower()}\n")


def cmd_intersect(args: argparse.Namespace) -> CommandResult:
    left = subgroup_of(_words(args, args.left), args.n)
    right = subgroup_of(_words(args, args.right), args.n)
    based, others = intersect(left, right)
    lines = [f"based: {based}"] + [f"other: {h}" for h in others]
    return CommandResult(command="intersect", output="\n".join(lines) + "\n")


def cmd_factor(args: argparse.Namespace) -> CommandResult:
    h = subgroup_of(_words(args, args.words), args.n)
    witness = is_free_factor(h)
    if witness is None:
        return CommandResult(command="factor", ok=False, output=f"{h}: not a free factor\n")
    complement = ", ".join(map(str, witness.complement))
    return CommandResult(command="factor", output=f"{h}: free factor, complement {complement}\n")


def cmd_antipodal(args: argparse.Namespace) -> CommandResult:
    a = subgroup_of(_words(args, args.factor), args.n)
    u = Alphabet(args.n).parse(args.word)
    if _mode(args) is Mode.AF:
        found = antipodal_af(a, u)
    else:
        found = antipodal_of_fold(a.unpointed(), u)
    return CommandResult(
        command="antipodal", ok=found, output=f"antipodal: {str(found).lower()}\n"
    )


def _apartment(args: argparse.Namespace) -> Apartment:
    mode = _mode(args)
    if args.example is not None and args.n != 3:
        raise RankMismatchError(3, args.n)
    if args.example == "unspanned":
        return unspanned_apartment(mode)
    if args.example == "non-antipodal":
        return non_antipodal_apartment(mode)
    return standard_apartment(_basis(args), mode)


def cmd_apartment(args: argparse.Namespace) -> CommandResult:
    ap = _apartment(args)
    report = verify_apartment(ap)
    report.extend(antipodal_faces_check(ap), prefix="opposite ")
    if ap.mode is Mode.AF:
        report.add("rank-1 vertices form a basis", is_standard_af(ap))
    elif ap.n == 3:
        report.extend(of3_report(ap, args.bound), prefix="OF_3 ")
    elif ap.n > 3:
        report.extend(buildup_conditions(ap, args.bound), prefix="build-up ")
    _write_dot(args, to_dot(ap))
    return CommandResult(command="apartment", report=report)


def cmd_sticks(args: argparse.Namespace) -> CommandResult:
    ap = standard_apartment(_basis(args), _mode(args))
    lines = []
    for i in range(1, ap.n + 1):
        for j in range(i + 1, ap.n + 1):
            found = sticks_of(ap, i, j)
            lines.append(f"({i},{j}): " + " ".join(str(s) for s in found))
    return CommandResult(command="sticks", output="\n".join(lines) + "\n")


def cmd_snops(args: argparse.Namespace) -> CommandResult:
    cube = snops(standard_apartment(_basis(args), Mode.AF))
    lines = [
        f"{k}: " + " ".join(str(s.word) for s in snop.sticks)
        for k, snop in enumerate(cube.snops)
    ]
    lines.append(f"edges: {len(cube.edges)}")
    lines.extend(f"  {a} -- {b}" for a, b in cube.edges)
    _write_dot(args, cube_to_dot(cube))
    return CommandResult(command="snops", output="\n".join(lines) + "\n")


def cmd_supersticks(args: argparse.Namespace) -> CommandResult:
    ap = standard_apartment(_basis(args), _mode(args))
    face = _pair(args.face) if args.face else (1, 2, 3)
    found = supersticks(ap, face)
    lines = [str(s) for s in found] + [f"count: {len(found)}"]
    return CommandResult(command="supersticks", output="\n".join(lines) + "\n")


def cmd_overlap(args: argparse.Namespace) -> CommandResult:
    d0 = standard_apartment(_basis(args), _mode(args))
    i, j = _pair(args.nielsen)
    return CommandResult(command="overlap", report=overlap_report(d0, nielsen_adjacent(d0, i, j)))


def cmd_fake7(args: argparse.Namespace) -> CommandResult:
    family = fake_family(args.n)
    _write_dot(args, to_dot(family.of))
    return CommandResult(command="fake7", report=family.report)


def cmd_ex68(args: argparse.Namespace) -> CommandResult:
    return CommandResult(command="ex68", report=twisted_apartment_report(bound=args.bound))


def cmd_suite(args: argparse.Namespace) -> CommandResult:
    report = run_suite(max_rank=args.n, seed=args.seed, bound=args.bound)
    return CommandResult(command="suite", report=report)


def cmd_dot(args: argparse.Namespace) -> CommandResult:
    if args.what == "graph":
        dot = graph_to_dot(core(fold(_graph(args)), pointed=False))
    elif args.what == "apartment":
        dot = to_dot(_apartment(args))
    else:
        dot = cube_to_dot(snops(standard_apartment(_basis(args), Mode.AF)))
    if args.dot:
        Path(args.dot).write_text(dot)
        return CommandResult(command="dot", output=f"wrote {args.dot}\n")
    return CommandResult(command="dot", output=dot)


HANDLERS = {
    "fold": cmd_fold,
    "core": cmd_core,
    "member": cmd_member,
    "intersect": cmd_intersect,
    "factor": cmd_factor,
    "antipodal": cmd_antipodal,
    "apartment": cmd_apartment,
    "sticks": cmd_sticks,
    "snops": cmd_snops,
    "supersticks": cmd_supersticks,
    "overlap": cmd_overlap,
    "fake7": cmd_fake7,
    "ex68": cmd_ex68,
    "suite": cmd_suite,
    "dot": cmd_dot,
}
