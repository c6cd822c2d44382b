"""Command-line front end.

Subcommands: count, peaks, enumerate, decompose, validate, preset.
Output formats: plain, bfile ("n value" per line, no header), jsonl
(one UTF-8 JSON record per line).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijection, counting, model, sequences
from .errors import ColoredDyckError, NonIntegerTerm

__all__ = ["main", "parse_color_spec"]


def parse_color_spec(spec: str) -> model.ColorSequence:
    """Grammar: ones | pow2 | catpair | const:V | explicit:c1,c2,...[+tail:T]."""
    if spec == "ones":
        return model.ColorSequence.ones()
    if spec == "pow2":
        return model.ColorSequence.powers_of_two()
    if spec == "catpair":
        return model.ColorSequence.catalan_pair_sum()
    if spec.startswith("const:"):
        return model.ColorSequence.constant(int(spec[len("const:"):]))
    if spec.startswith("explicit:"):
        body = spec[len("explicit:"):]
        tail = 0
        if "+tail:" in body:
            body, tail_part = body.split("+tail:", 1)
            tail = int(tail_part)
        prefix = tuple(int(c) for c in body.split(",") if c != "")
        return model.ColorSequence.explicit(prefix, tail)
    raise argparse.ArgumentTypeError(f"bad color spec: {spec!r}")


def _add_common(parser):
    parser.add_argument("--a", type=int, required=True)
    parser.add_argument("--b", type=int, required=True)
    parser.add_argument(
        "--colors", type=parse_color_spec, default=model.ColorSequence.ones()
    )


def _read_word_text(args) -> str:
    if args.word is not None:
        return args.word
    return sys.stdin.read().strip()


def _emit_series(values, fmt, start=0):
    lines = []
    for n, v in enumerate(values, start=start):
        if fmt == "plain":
            lines.append(str(v))
        elif fmt == "bfile":
            lines.append(f"{n} {v}")
        else:
            lines.append(json.dumps({"n": n, "value": v}, separators=(",", ":")))
    return lines


def _cmd_count(args):
    params = model.PathParams(args.a, args.b)
    series = None
    if args.route in ("both", "recurrence"):
        series = counting.count_recurrence(params, args.colors, args.N)
    if args.route in ("both", "bell"):
        bell_series = counting.count_bell(params, args.colors, args.N)
        if series is not None and series.values != bell_series.values:
            print(
                "route disagreement: recurrence="
                f"{list(series.values)} bell={list(bell_series.values)}",
                file=sys.stderr,
            )
            return 1
        series = bell_series
    print("\n".join(_emit_series(series.values, args.format)))
    return 0


def _cmd_peaks(args):
    params = model.PathParams(args.a, args.b)
    table = counting.peak_table(params, args.colors, args.n)
    for k in range(1, table.n + 1):
        print(f"{k} {table[k]}")
    return 0


def _word_record(word):
    blocks = []
    for block in word.blocks:
        if isinstance(block, model.Rise):
            blocks.append({"type": "rise", "j": block.j, "color": block.color})
        else:
            blocks.append({"type": "down"})
    record = {
        "n": word.n,
        "blocks": blocks,
        "peaks": model.peaks(word),
        "steps": model.to_steps(word),
    }
    return json.dumps(record, separators=(",", ":"))


def _cmd_enumerate(args):
    params = model.PathParams(args.a, args.b)
    words = bijection.enumerate_all(params, args.colors, args.n, cap=args.cap)
    for word in words:
        if args.format == "jsonl":
            print(_word_record(word))
        else:
            print(model.to_steps(word))
    return 0


def _cmd_decompose(args):
    params = model.PathParams(args.a, args.b)
    word = model.parse_steps(_read_word_text(args), params, args.colors)
    t = bijection.decompose(word, params, args.colors)
    print(f"ell {t.ell}")
    print(f"color {t.color}")
    for child in t.children:
        print(f"child {model.to_steps(child)}".rstrip())
    return 0


def _cmd_validate(args):
    params = model.PathParams(args.a, args.b)
    word = model.parse_steps(_read_word_text(args), params, args.colors)
    model.validate_colors(word, args.colors)
    print("valid")
    return 0


def _cmd_preset(args):
    spec = sequences.PRESETS[args.name]
    params, colors = spec.params, spec.colors
    if args.name == "mary":
        params = model.PathParams(args.m, 0)

    if args.name == "narayana":
        n = args.n if args.n is not None else args.N
        table = counting.peak_table(params, colors, n)
        for k in range(1, n + 1):
            print(f"{k} {sequences.narayana(n, k)} {table[k]}")
        return 0

    N = args.N
    colored = counting.count_bell(params, colors, N)
    if args.name == "duchon":
        for n in range(1, N + 1):
            print(
                f"{n} {sequences.duchon_d(n)} "
                f"{sequences.duchon_alt(n)} {colored[n]}"
            )
        return 0
    if args.name == "mary":
        closed = lambda n: sequences.fuss_catalan(args.m, n)
    else:
        closed = spec.closed_form
    for n in range(1, N + 1):
        print(f"{n} {closed(n)} {colored[n]}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="colored-dyck",
        description="Count, generate, validate, and decompose colored Dyck paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print y_0..y_N")
    _add_common(p)
    p.add_argument("--N", type=int, required=True)
    p.add_argument(
        "--route", choices=("both", "recurrence", "bell"), default="both"
    )
    p.add_argument(
        "--format", choices=("plain", "bfile", "jsonl"), default="plain"
    )
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("peaks", help="print the peak-refined counts for one n")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_peaks)

    p = sub.add_parser("enumerate", help="list every word of index n")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("plain", "jsonl"), default="plain")
    p.add_argument(
        "--cap", type=int, default=bijection.DEFAULT_ENUMERATION_CAP
    )
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("decompose", help="print the tuple of one word")
    _add_common(p)
    p.add_argument("word", nargs="?", help="step text; stdin if omitted")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("validate", help="check one word")
    _add_common(p)
    p.add_argument("word", nargs="?", help="step text; stdin if omitted")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("preset", help="compare a named family to its colored count")
    p.add_argument("name", choices=sorted(sequences.PRESETS))
    p.add_argument("--N", type=int, default=8)
    p.add_argument("--n", type=int, help="row index (narayana)")
    p.add_argument("--m", type=int, default=2, help="arity (mary)")
    p.set_defaults(func=_cmd_preset)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonIntegerTerm as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except ColoredDyckError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
