"""``qutaxi`` command line.

Every subcommand that produces a string prints it in canonical notation, so
subcommands chain through pipes::

    qutaxi st ".1+{9}" --pattern "2+1-2-1+1+o1+2+1-2-" | qutaxi render --format ascii

Exit status: 0 success, 1 notation or usage error, 2 violated precondition,
3 I/O failure.  Errors are a single ``error: ...`` line on stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import core, graph, metric, notation, render, transform
from .errors import ParseError, PreconditionError, QuError

EXIT_OK, EXIT_NOTATION, EXIT_PRECONDITION, EXIT_IO = 0, 1, 2, 3

ANGLES = (0, 45, 90, 135, 180, 225, 270, 315, 360)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _weights(text: str):
    return tuple(_fraction(w) for w in text.split(","))


def _sign(text: str) -> int:
    if text not in ("+", "-"):
        raise argparse.ArgumentTypeError("sign must be '+' or '-'")
    return 1 if text == "+" else -1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps values given before the subcommand from being reset
    common.add_argument("--dim", type=int, default=argparse.SUPPRESS, help="number of axes (default 2)")
    common.add_argument("--unit", type=_fraction, default=argparse.SUPPRESS, help="atomic length s (default 1)")
    common.add_argument("--weights", type=_weights, default=argparse.SUPPRESS, help="per-axis lengths s1,s2,...")

    parser = _Parser(prog="qutaxi", description="Quasi-unary taxicab strings.")
    parser.add_argument("--dim", type=int, default=2)
    parser.add_argument("--unit", type=_fraction, default=Fraction(1))
    parser.add_argument("--weights", type=_weights, default=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, inputs="?"):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if inputs:
            p.add_argument("inputs", nargs=inputs, metavar="STRING",
                           help="QU notation; read from stdin when omitted or '-'")
        return p

    add("parse", "echo the canonical form")
    add("normalize", "cancel zeros and adjacent inverse pairs")
    add("concat", "concatenate strings", inputs="+")
    p = add("sub", "remove B from the end of A (or A from the front of B)", inputs=2)
    p.add_argument("--prefix", action="store_true")
    p = add("scale", "repeat every digit")
    p.add_argument("--factor", type=int, required=True)
    p = add("len", "taxicab length")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--arc", action="store_true", help="total ink instead")
    group.add_argument("--gap", action="store_true", help="total blank length instead")
    add("dot", "inner product of A and B", inputs=2)
    p = add("translate", "prefix blanks")
    p.add_argument("--axis", type=int, required=True)
    p.add_argument("--sign", type=_sign, required=True)
    p.add_argument("--dist", type=int, required=True)
    p = add("rotate", "turn a straight run into a staircase")
    p.add_argument("--i")
    p.add_argument("--q", type=int)
    p.add_argument("--j")
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--angle", type=int, choices=ANGLES)
    p = add("st", "shape transformation of a straight run")
    p.add_argument("--pattern", required=True)
    p = add("fn-line", "graph of y = (m/n) x", inputs=None)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--periods", type=int, default=1)
    p = add("fn-points", "graph through the samples in FILE", inputs=None)
    p.add_argument("file", metavar="FILE", help="'x y' pairs, one per line; '-' for stdin")
    p = add("render", "draw a 2D string")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--out")
    p.add_argument("--cell", type=int, default=20)
    p.add_argument("--margin", type=int, default=10)
    p.add_argument("--no-grid", action="store_true")
    p.add_argument("--no-origin", action="store_true")
    return parser


def _inputs(args, stdin) -> List[str]:
    texts = args.inputs
    if texts is None or isinstance(texts, str):
        texts = [texts]
    out = []
    for t in texts:
        if t is None or t == "-":
            try:
                t = stdin.read()
            except OSError as exc:
                raise OSError(f"cannot read stdin: {exc}") from exc
        out.append(t)
    return out


def _dispatch(args, stdin) -> str:
    dim = args.dim
    cfg = metric.MetricConfig(args.unit, args.weights)

    def strings():
        return [notation.parse(t, dim) for t in _inputs(args, stdin)]

    def digit(text, flag):
        if text is None:
            raise UsageError(f"{flag} is required")
        return notation.parse_digit(text, dim)

    cmd = args.command
    if cmd in ("parse", "normalize"):
        (s,) = strings()
        return str(core.normalize(s) if cmd == "normalize" else s)
    if cmd == "concat":
        ss = strings()
        acc = ss[0]
        for s in ss[1:]:
            acc = core.concat(acc, s)
        return str(acc)
    if cmd == "sub":
        a, b = strings()
        return str(core.subtract_prefix(a, b) if args.prefix else core.subtract_suffix(a, b))
    if cmd == "scale":
        (s,) = strings()
        return str(core.scalar_mul(args.factor, s))
    if cmd == "len":
        (s,) = strings()
        fn = metric.arc_length if args.arc else metric.gap_length if args.gap else metric.taxicab_length
        return str(fn(s, cfg))
    if cmd == "dot":
        a, b = strings()
        return str(metric.inner_product(a, b, cfg))
    if cmd == "translate":
        (s,) = strings()
        return str(transform.translate(s, args.axis, args.sign, args.dist))
    if cmd == "rotate":
        (s,) = strings()
        if args.angle is not None:
            if args.i or args.j or args.q is not None:
                raise UsageError("--angle excludes --i/--q/--j/--r")
            return str(transform.rotate_by_angle(s, args.angle))
        if args.q is None:
            raise UsageError("--q is required without --angle")
        i = digit(args.i, "--i")
        j = digit(args.j, "--j") if args.j is not None else None
        return str(transform.rotate(s, i, args.q, j, args.r))
    if cmd == "st":
        (s,) = strings()
        pat = transform.TransformPattern.from_string(notation.parse(args.pattern, dim))
        return str(transform.shape_transform(s, pat))
    if cmd == "fn-line":
        return str(graph.encode_linear(args.m, args.n, args.periods))
    if cmd == "fn-points":
        if args.file == "-":
            text = stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        return str(graph.encode_samples(graph.read_samples(text)))
    if cmd == "render":
        (s,) = strings()
        shape = render.to_shape(render.trace(s))
        if args.format == "ascii":
            return render.render_ascii(shape).rstrip("\n")
        rcfg = render.RenderConfig(args.cell, not args.no_grid, not args.no_origin, args.margin)
        return render.render_svg(shape, rcfg).rstrip("\n")
    raise UsageError(f"unknown command {cmd!r}")  # pragma: no cover


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = list(sys.argv[1:] if argv is None else argv)

    def fail(code, message):
        print(f"error: {' '.join(str(message).split())}", file=stderr)
        return code

    try:
        args = _build_parser().parse_args(argv)
        result = _dispatch(args, stdin)
        out = getattr(args, "out", None)
        if out:
            with open(out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(result + "\n")
        else:
            stdout.write(result + "\n")
    except (ParseError, UsageError) as exc:
        return fail(EXIT_NOTATION, exc)
    except (PreconditionError, ValueError) as exc:
        return fail(EXIT_PRECONDITION, exc)
    except OSError as exc:
        return fail(EXIT_IO, exc)
    except QuError as exc:  # pragma: no cover
        return fail(EXIT_PRECONDITION, exc)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
