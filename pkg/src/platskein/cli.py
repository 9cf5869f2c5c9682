"""Command-line front end: ``platskein <subcommand> ...``.

Exit codes: 0 success, 1 a failed ``verify``, 2 usage or parse errors,
3 mathematical errors such as an unsupported braid family.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import acceptance
from .braid_plat import BraidWord, InapplicableMove, ParseError, parse_braid, plat_move
from .bracket_oracle import TooLarge, colored_jones_oracle, diagram_from_plat, kauffman_bracket, normalized_bracket
from .character_module import DEFAULT_MAX_WORD_LEN, generate_relations
from .coefficients import RationalFunction
from .peripheral import (
    DegenerateElimination,
    MissingSequenceValue,
    SingularLeadingCoefficient,
    UnsupportedFamily,
    aq_polynomial,
    colored_jones_from_recurrence,
)
from .skein_word import AlphaWord, IndexOutOfRange, UnsupportedArity, straighten, trace_q
from .trace_ring import merge_knot_variables

MATH_ERRORS = (
    UnsupportedFamily,
    DegenerateElimination,
    MissingSequenceValue,
    SingularLeadingCoefficient,
    TooLarge,
    InapplicableMove,
    IndexOutOfRange,
    UnsupportedArity,
)


class UsageError(ValueError):
    """Bad command-line input."""


def _braid(args: argparse.Namespace) -> BraidWord:
    try:
        return parse_braid(args.braid, args.strands)
    except ParseError as exc:
        raise UsageError(str(exc)) from exc


def _word(text: str) -> AlphaWord:
    try:
        return AlphaWord.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _bridges(word: AlphaWord, strands: int | None) -> int:
    if strands is not None:
        return strands // 2
    return max((i for i, _ in word.letters), default=1)


def _emit(args: argparse.Namespace, text: str, payload: dict | str) -> str:
    if args.output == "json":
        return payload if isinstance(payload, str) else json.dumps(payload, indent=2)
    return text


def cmd_reduce(args: argparse.Namespace) -> str:
    word = _word(args.word)
    elem = straighten(word, _bridges(word, args.strands))
    return _emit(args, elem.to_text(), elem.to_json())


def cmd_trace(args: argparse.Namespace) -> str:
    word = _word(args.word)
    value = trace_q(straighten(word, _bridges(word, args.strands)))
    if args.knot:
        value = merge_knot_variables(value)
    text = value.to_text(args.knot)
    return _emit(args, text, {"word": str(word), "knot": args.knot, "trace": text})


def cmd_relations(args: argparse.Namespace) -> str:
    rs = generate_relations(_braid(args), args.max_word_len, presentation=args.presentation, framing=args.framing)
    text = "\n".join(r.to_text(rs.knot) for r in rs.relations)
    return _emit(args, text, rs.to_json())


def cmd_aq(args: argparse.Namespace) -> str:
    aq = aq_polynomial(_braid(args), args.max_word_len)
    return _emit(args, aq.to_text(), aq.to_json())


def _oracle(b: BraidWord, n: int) -> RationalFunction:
    return RationalFunction.from_lp(colored_jones_oracle(b, n, strands=b.strands))


def cmd_jones(args: argparse.Namespace) -> str:
    b = _braid(args)
    aq = aq_polynomial(b, args.max_word_len)
    seeds = [_oracle(b, n) for n in range(min(args.n, 1) + 1)]
    value = colored_jones_from_recurrence(aq, seeds, args.n)
    return _emit(args, str(value), {"braid": str(b), "n": args.n, "method": "recurrence", "value": str(value)})


def cmd_jones_oracle(args: argparse.Namespace) -> str:
    b = _braid(args)
    value = colored_jones_oracle(b, args.n, strands=b.strands)
    return _emit(args, str(value), {"braid": str(b), "n": args.n, "method": "oracle", "value": str(value)})


def cmd_bracket(args: argparse.Namespace) -> str:
    b = _braid(args)
    d = diagram_from_plat(b, b.strands)
    raw = kauffman_bracket(d, args.method)
    normalized = normalized_bracket(d, args.method)
    text = f"bracket: {raw}\nwrithe: {b.writhe()}\nnormalized: {normalized}"
    payload = {"braid": str(b), "bracket": str(raw), "writhe": b.writhe(), "normalized": str(normalized)}
    return _emit(args, text, payload)


def cmd_plat_move(args: argparse.Namespace) -> str:
    moved = plat_move(_braid(args), args.move, args.side, args.i)
    payload = {"braid": str(moved), "strands": moved.strands}
    return _emit(args, f"{moved} (strands={moved.strands})", payload)


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    results = acceptance.run(args.criteria)
    failed = any(not r.ok for r in results)
    if args.output == "json":
        payload = [
            {"criterion": r.number, "ok": r.ok, "checks": [{"label": c.label, "ok": c.ok} for c in r.checks]}
            for r in results
        ]
        return json.dumps(payload, indent=2), int(failed)
    return "\n".join(r.line() for r in results), int(failed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="platskein", description="Skein-module computations for plat closures.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--strands", type=int, default=None, help="braid strands (default 4) or 2k for words")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def braid_command(name: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        p = add(name, func, help_text)
        p.add_argument("braid", help='braid word such as "s2 s2 s2" or "2 2 2"')
        p.add_argument("--max-word-len", type=int, default=DEFAULT_MAX_WORD_LEN)
        return p

    p = add("reduce", cmd_reduce, "straighten an alpha word into the basis")
    p.add_argument("word", help='word such as "a2^-1 a1", optionally with "f=<int>"')
    p = add("trace", cmd_trace, "quantum trace of an alpha word")
    p.add_argument("word")
    p.add_argument("--knot", action="store_true", help="identify x1, x2 as x and print x12 as y")

    p = braid_command("relations", cmd_relations, "trace relations of the plat closure")
    p.add_argument("--presentation", choices=("p1", "plain"), default="p1")
    p.add_argument("--framing", type=int, default=0)
    braid_command("aq", cmd_aq, "the A_q polynomial")
    p = braid_command("jones", cmd_jones, "colored Jones polynomial from the A_q recurrence")
    p.add_argument("--n", type=int, required=True)
    p = braid_command("jones-oracle", cmd_jones_oracle, "colored Jones polynomial from the bracket oracle")
    p.add_argument("--n", type=int, required=True)
    p = braid_command("bracket", cmd_bracket, "Kauffman bracket of the plat closure")
    p.add_argument("--method", choices=("state_sum", "sweep"), default="sweep")
    p = braid_command("plat-move", cmd_plat_move, "apply a plat move P1..P4")
    p.add_argument("move", choices=("P1", "P2", "P3", "P4"))
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--i", type=int, default=1)

    p = add("verify", cmd_verify, "run the acceptance suite")
    p.add_argument("criteria", nargs="*", type=int, help="criterion numbers (default: all)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if getattr(args, "n", 0) < 0:
        print("error: --n must be non-negative", file=sys.stderr)
        return 2
    if args.strands is None and hasattr(args, "braid"):
        args.strands = 4
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MATH_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    text, code = result if isinstance(result, tuple) else (result, 0)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
