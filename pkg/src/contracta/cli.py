"""``contracta`` command line tool.

Exit status: 0 on success, 1 on bad input, 2 when no finite dimension could be
certified below the degree ceiling.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .defcheck import TestAlgebra, def_tangent_dimension, truncated_polynomial_ring, verify_hom
from .freealg import MonomialOrder, NcPoly, word_str
from .knit import knit, marked_diagram
from .ncgb import HARD_CEILING, NotFiniteError, compute
from .presfile import _Parser, format_presentation, parse_presentation
from .quiverpres import (
    DEFAULT_KILL,
    Presentation,
    PresentationError,
    abelianize,
    builtin,
    contract,
    parse_builtin_spec,
)
from .structalg import build, is_commutative, is_self_injective, socle, tangent_dimension

log = logging.getLogger("contracta")

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2
CEILING_ENV = "CONTRACTA_DEGREE_CEILING"

COMMANDS = ("gb", "width", "cwidth", "contract", "commute", "selfinj", "tangent",
            "knit", "checkhom", "builtin", "table")

REPORT_KEYS = ("command", "input", "order", "dimension", "basis", "groebner", "commutative",
               "self_injective", "tangent", "knit_total", "knit_sequence", "presentation",
               "table", "hom_accepted", "verdict", "error")


class InputError(Exception):
    pass


@dataclass
class Invocation:
    command: str
    input: str | None = None
    builtin: str | None = None
    kill: list[str] = field(default_factory=list)
    order: list[str] | None = None
    ceiling: int = HARD_CEILING
    format: str = "text"
    dynkin: str | None = None
    marked: int | None = None
    gamma: str | None = None
    assign: list[str] = field(default_factory=list)


@dataclass
class Report:
    data: dict[str, Any]
    text: list[str]
    status: int = EXIT_OK

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2, sort_keys=False)
        return "\n".join(self.text)


def _ceiling(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get(CEILING_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise InputError(f"{CEILING_ENV} must be an integer, got {env!r}") from None
        if value < 1:
            raise InputError(f"{CEILING_ENV} must be positive")
        return value
    return HARD_CEILING


def load(inv: Invocation) -> Presentation:
    if inv.builtin and inv.input:
        raise InputError("give either an input file or --builtin, not both")
    if inv.builtin:
        name, n = parse_builtin_spec(inv.builtin)
        return builtin(name, n)
    if not inv.input:
        raise InputError("no input: pass a presentation file or --builtin NAME[:n]")
    try:
        with open(inv.input, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {inv.input}: {exc.strerror}") from None
    return parse_presentation(source)


def _target(inv: Invocation, p: Presentation) -> Presentation:
    """The presentation a dimension-type command works on: contracted if asked (or implied)."""
    kill = inv.kill
    if not kill and not p.is_local() and inv.builtin:
        name, _ = parse_builtin_spec(inv.builtin)
        if name in DEFAULT_KILL:
            kill = [DEFAULT_KILL[name]]
    return contract(p, kill) if kill else p


def _order(inv: Invocation, p: Presentation) -> MonomialOrder:
    return MonomialOrder.deglex(p.alphabet, inv.order)


def _basis_strings(monomials, alphabet) -> list[str]:
    return [word_str(w, alphabet) for ws in monomials for w in ws]


def run(inv: Invocation) -> Report:
    data: dict[str, Any] = dict.fromkeys(REPORT_KEYS)
    data["command"] = inv.command
    data["input"] = inv.builtin or inv.input or inv.dynkin
    text: list[str] = []

    if inv.command == "knit":
        d = marked_diagram(inv.dynkin or "", inv.marked)
        run_ = knit(d)
        data.update(knit_total=run_.total, knit_sequence=list(run_.marked_sequence), verdict="ok")
        data["input"] = d.name
        text.append(f"{d.name} marked at vertex {d.marked}: "
                    f"{' + '.join(map(str, run_.marked_sequence))} = {run_.total}")
        return Report(data, text)

    p = load(inv)
    if inv.command == "builtin":
        data["presentation"] = format_presentation(p)
        data["verdict"] = "ok"
        return Report(data, [data["presentation"].rstrip()])

    q = _target(inv, p)
    if inv.command == "contract":
        data["presentation"] = format_presentation(q)
        data["verdict"] = "ok"
        return Report(data, [data["presentation"].rstrip()])

    if inv.command == "cwidth":
        q = abelianize(q)
    order = _order(inv, q)
    data["order"] = order.names()
    result = compute(q, order, inv.ceiling)
    data["dimension"] = result.dimension
    data["verdict"] = "finite"

    if inv.command in ("width", "cwidth"):
        text.append(str(result.dimension))
        return Report(data, text)

    if inv.command == "gb":
        data["groebner"] = [g.to_str(order) for g in result.basis.elements]
        data["basis"] = _basis_strings(result.monomials, q.alphabet)
        text.append(f"order: {' > '.join(order.names())}")
        text.append("groebner basis:")
        text.extend(f"  {g}" for g in data["groebner"])
        text.append(f"standard monomials ({result.dimension}): {', '.join(data['basis'])}")
        return Report(data, text)

    a = build(result.basis)
    data["basis"] = list(a.labels)
    if inv.command == "commute":
        data["commutative"] = is_commutative(a)
        text.append("commutative" if data["commutative"] else "not commutative")
    elif inv.command == "selfinj":
        data["self_injective"] = is_self_injective(a)
        soc = [a.format_vector(v) for v in socle(a)]
        text.append(("self-injective" if data["self_injective"] else "not self-injective")
                    + f" (socle: {', '.join(soc)})")
    elif inv.command == "tangent":
        t = tangent_dimension(a)
        if def_tangent_dimension(q, order, inv.ceiling) != t:
            raise RuntimeError("tangent dimension routes disagree")
        data["tangent"] = t
        text.append(str(t))
    elif inv.command == "table":
        data["table"] = [[a.format_vector(a.table[i][j]) for j in range(a.dim)] for i in range(a.dim)]
        width = max(len(s) for row in data["table"] for s in row + list(a.labels))
        text.append(" " * width + " | " + " ".join(s.rjust(width) for s in a.labels))
        for lab, row in zip(a.labels, data["table"]):
            text.append(lab.rjust(width) + " | " + " ".join(s.rjust(width) for s in row))
    elif inv.command == "checkhom":
        gamma = _gamma(inv.gamma)
        h = _assignment(inv.assign, gamma)
        ok = verify_hom(q, gamma, h)
        data["hom_accepted"] = ok
        data["verdict"] = "accepted" if ok else "rejected"
        text.append(data["verdict"])
    return Report(data, text)


def _gamma(spec: str | None) -> TestAlgebra:
    """``k`` means C[e]/e^k; anything else is a presentation file."""
    spec = spec or "2"
    if spec.isdigit():
        return truncated_polynomial_ring(int(spec))
    try:
        with open(spec, encoding="utf-8") as fh:
            return TestAlgebra.from_presentation(parse_presentation(fh.read()))
    except OSError as exc:
        raise InputError(f"cannot read {spec}: {exc.strerror}") from None


def _assignment(items: list[str], gamma: TestAlgebra) -> dict[str, NcPoly]:
    alphabet = gamma.groebner.alphabet if gamma.groebner else ()
    index = {name: i for i, name in enumerate(alphabet)}
    out = {}
    for item in items:
        name, sep, expr = item.partition("=")
        if not sep:
            raise InputError(f"assignment {item!r} is not of the form NAME=POLY")
        parser = _Parser(expr)
        poly = parser.poly(alphabet, index)
        if parser.tok.kind != "eof":
            raise InputError(f"trailing input in assignment {item!r}")
        out[name.strip()] = poly
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="contracta",
        description="Contraction algebras of quivers with relations: Groebner bases, widths, "
                    "structure checks and Dynkin knitting.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("input", nargs="?", help="presentation file")
    ap.add_argument("--builtin", metavar="NAME[:n]",
                    help="pagoda, laufer, francia, francia_nef, quantum_cusp, atiyah, free2")
    ap.add_argument("--kill", metavar="V[,V...]", default="",
                    help="vertices to contract away (default for two-vertex builtins: R)")
    ap.add_argument("--order", metavar="X,Y,...",
                    help="generator precedence, largest first (default: declaration order)")
    ap.add_argument("--ceiling", type=int, help=f"degree ceiling (default {HARD_CEILING}, "
                                                 f"or ${CEILING_ENV})")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--type", dest="dynkin", metavar="DYNKIN",
                    help="for knit: A1, D4, E6, E7, E8(5), E8(6), or An/Dn/En with --marked")
    ap.add_argument("--marked", type=int, help="for knit: marked vertex index")
    ap.add_argument("--gamma", help="for checkhom: k for C[e]/e^k, or a presentation file")
    ap.add_argument("--assign", action="append", default=[], metavar="GEN=POLY",
                    help="for checkhom: image of a generator in the test algebra")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    data_in = dict.fromkeys(REPORT_KEYS)
    data_in.update(command=args.command, input=args.builtin or args.input or args.dynkin)
    try:
        inv = Invocation(
            command=args.command,
            input=args.input,
            builtin=args.builtin,
            kill=[v for v in args.kill.split(",") if v],
            order=[g for g in args.order.split(",") if g] if args.order else None,
            ceiling=_ceiling(args.ceiling),
            format=args.format,
            dynkin=args.dynkin,
            marked=args.marked,
            gamma=args.gamma,
            assign=args.assign,
        )
        if inv.command == "knit" and not inv.dynkin:
            raise InputError("knit needs --type")
        report = run(inv)
    except NotFiniteError as exc:
        data_in.update(verdict="infinite_or_unknown", error=str(exc))
        report = Report(data_in, [f"infinite_or_unknown: {exc}"], EXIT_UNKNOWN)
    except (InputError, PresentationError, ValueError) as exc:
        data_in.update(verdict="error", error=str(exc))
        report = Report(data_in, [f"error: {exc}"], EXIT_INPUT)
    out = report.render(args.format)
    stream = sys.stderr if report.status == EXIT_INPUT and args.format == "text" else sys.stdout
    print(out, file=stream)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
