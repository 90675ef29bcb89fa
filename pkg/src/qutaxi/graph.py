"""Graphs of integer-sampled functions as QU strings.

The x-axis is axis 1 and f(x) is axis 2.  Between consecutive samples the
walk first steps ``dx`` times along ``1+`` and then ``|dy|`` times along
``2+`` or ``2-``.  A first sample away from the origin is reached by a
leading run of blanks (a translation), so every encoded string starts at
the origin marker.

Flat steps (``dy == 0``) leave no axis-2 run behind, so two consecutive
flat steps cannot be told apart from one long one; decoding merges them.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .core import QuString, atom, blank
from .errors import InvalidSample, MalformedGraphString

__all__ = [
    "LatticeSample",
    "validate_samples",
    "merge_flat_steps",
    "encode_linear",
    "encode_samples",
    "decode_to_points",
    "read_samples",
]

Point = Tuple[int, int]
LatticeSample = Tuple[Point, ...]

_X, _UP, _DOWN = atom(1, 1), atom(2, 1), atom(2, -1)


def validate_samples(samples: Sequence[Sequence[int]]) -> LatticeSample:
    pts = []
    for pt in samples:
        if len(pt) != 2:
            raise InvalidSample(f"expected an (x, y) pair, got {pt!r}")
        x, y = pt
        if isinstance(x, bool) or isinstance(y, bool) or not (
            isinstance(x, int) and isinstance(y, int)
        ):
            raise InvalidSample(f"sample coordinates must be integers, got {pt!r}")
        pts.append((x, y))
    if not pts:
        raise InvalidSample("at least one sample is required")
    for (x0, _), (x1, _) in zip(pts, pts[1:]):
        if x1 <= x0:
            raise InvalidSample(f"x must increase strictly, got {x0} then {x1}")
    return tuple(pts)


def merge_flat_steps(samples: Sequence[Point]) -> LatticeSample:
    """Drop interior samples that end a flat step followed by another step.

    This is the form :func:`decode_to_points` recovers.
    """
    pts = validate_samples(samples)
    out = [pts[0]]
    for k in range(1, len(pts)):
        flat = pts[k][1] == out[-1][1]
        if flat and k < len(pts) - 1:
            continue
        out.append(pts[k])
    return tuple(out)


def encode_linear(m: int, n: int, periods: int) -> QuString:
    """The line ``y = (m/n) x`` for ``x >= 0``, cut after ``periods`` steps."""
    for name, v in (("m", m), ("n", n), ("periods", periods)):
        if not isinstance(v, int) or v < 1:
            raise InvalidSample(f"{name} must be a positive integer, got {v!r}")
    return QuString(((_X,) * n + (_UP,) * m) * periods, 2, 0)


def encode_samples(samples: Sequence[Sequence[int]]) -> QuString:
    pts = validate_samples(samples)
    x0, y0 = pts[0]
    digits: List = []
    digits += [blank(1, 1 if x0 > 0 else -1)] * abs(x0)
    digits += [blank(2, 1 if y0 > 0 else -1)] * abs(y0)
    for (xa, ya), (xb, yb) in zip(pts, pts[1:]):
        digits += [_X] * (xb - xa)
        dy = yb - ya
        digits += [_UP if dy > 0 else _DOWN] * abs(dy)
    return QuString(tuple(digits), 2, 0)


def decode_to_points(a: QuString) -> LatticeSample:
    """Lattice points at the end of each axis-2 run and of a trailing x run."""
    if a.dim != 2:
        raise MalformedGraphString(f"graphs live in dimension 2, got {a.dim}")
    if a.origin not in (None, 0):
        raise MalformedGraphString("the origin marker must lead the string")
    digits = [d for d in a.digits if not d.is_zero]
    x = y = 0
    k = 0
    while k < len(digits) and digits[k].is_blank:
        if digits[k].axis == 1:
            x += digits[k].sign
        else:
            y += digits[k].sign
        k += 1
    points = [(x, y)]
    prev_axis = None
    sign_y = 0
    for d in digits[k:]:
        if d.is_blank:
            raise MalformedGraphString("blanks are only allowed before the first step")
        if d.axis == 1:
            if d.sign < 0:
                raise MalformedGraphString("the walk moves backward in x")
            if prev_axis == 2:
                points.append((x, y))
            x += 1
        else:
            if prev_axis is None:
                raise MalformedGraphString("a y step needs a preceding x step")
            if prev_axis == 2 and d.sign != sign_y:
                raise MalformedGraphString("y reverses direction within one step")
            sign_y = d.sign
            y += d.sign
        prev_axis = d.axis
    if prev_axis is not None:
        points.append((x, y))
    return tuple(points)


def read_samples(text: str) -> LatticeSample:
    """Parse ``x y`` integer pairs, one per line; blank lines and ``#`` comments skip."""
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if len(fields) != 2:
                raise ValueError
            pts.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise InvalidSample(f"line {lineno}: expected two integers, got {line!r}") from None
    return validate_samples(pts)
