"""Walking QU strings over the integer lattice and drawing the result.

A :class:`Trace` records every unit move; :func:`to_shape` keeps the pen-down
moves as undirected edges with multiplicity.  The two renderers are 2D only
and byte-deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, NamedTuple, Optional, Tuple

from .core import Digit, QuString
from .errors import DimensionUnsupported, PreconditionError
from .metric import position_displacement

__all__ = [
    "Event",
    "Trace",
    "DrawnShape",
    "RenderConfig",
    "trace",
    "to_shape",
    "render_ascii",
    "render_svg",
]

Point = Tuple[int, ...]
Edge = Tuple[Point, Point]


class Event(NamedTuple):
    before: Point
    digit: Digit
    after: Point

    @property
    def pen(self) -> Optional[str]:
        """``"down"`` for atoms, ``"up"`` for blanks, ``None`` for zero."""
        if self.digit.is_atom:
            return "down"
        if self.digit.is_blank:
            return "up"
        return None


@dataclass(frozen=True)
class Trace:
    start: Point
    events: Tuple[Event, ...]
    dim: int

    @property
    def end(self) -> Point:
        return self.events[-1].after if self.events else self.start

    def positions(self) -> Tuple[Point, ...]:
        return (self.start,) + tuple(e.after for e in self.events)

    def bounds(self) -> Tuple[Point, Point]:
        """Per-axis min and max over every visited position."""
        pts = self.positions()
        return (
            tuple(min(c) for c in zip(*pts)),
            tuple(max(c) for c in zip(*pts)),
        )


def trace(a: QuString) -> Trace:
    prefix = QuString(a.digits[: a.origin_index], a.dim)
    start = tuple(-c for c in position_displacement(prefix))
    pos = list(start)
    events = []
    for d in a.digits:
        before = tuple(pos)
        if not d.is_zero:
            pos[d.axis - 1] += d.sign
        events.append(Event(before, d, tuple(pos)))
    return Trace(start, tuple(events), a.dim)


@dataclass(frozen=True)
class DrawnShape:
    """Undirected unit edges with multiplicity; ``edges`` maps ``(p, q)``, ``p < q``."""

    edges: Tuple[Tuple[Edge, int], ...]
    dim: int

    @property
    def origin(self) -> Point:
        return (0,) * self.dim

    def edge_counts(self) -> Dict[Edge, int]:
        return dict(self.edges)

    @property
    def bounds(self) -> Tuple[Point, Point]:
        pts = [self.origin]
        for (p, q), _ in self.edges:
            pts += [p, q]
        return (
            tuple(min(c) for c in zip(*pts)),
            tuple(max(c) for c in zip(*pts)),
        )


def to_shape(t: Trace) -> DrawnShape:
    counts: Dict[Edge, int] = {}
    for e in t.events:
        if e.pen != "down":
            continue
        key = (min(e.before, e.after), max(e.before, e.after))
        counts[key] = counts.get(key, 0) + 1
    return DrawnShape(tuple(sorted(counts.items())), t.dim)


@dataclass(frozen=True)
class RenderConfig:
    cell: int = 20
    show_grid: bool = True
    show_origin: bool = True
    margin: int = 10

    def __post_init__(self):
        if not isinstance(self.cell, int) or self.cell < 1:
            raise PreconditionError(f"cell must be a positive integer, got {self.cell!r}")
        if not isinstance(self.margin, int) or self.margin < 0:
            raise PreconditionError(f"margin must be a non-negative integer, got {self.margin!r}")


def _require_2d(shape: DrawnShape):
    if shape.dim != 2:
        raise DimensionUnsupported(f"rendering needs dimension 2, got {shape.dim}")


def render_ascii(shape: DrawnShape) -> str:
    """Text picture: ``+`` corners, ``--``/``|`` edges, ``==``/``‖`` retraced edges, ``o`` origin.

    Lattice point ``(x, y)`` sits at column ``3 * (x - xmin)`` and row
    ``2 * (ymax - y)``, so the top row is the largest axis-2 coordinate.
    """
    _require_2d(shape)
    (xmin, ymin), (xmax, ymax) = shape.bounds
    width = 3 * (xmax - xmin) + 1
    height = 2 * (ymax - ymin) + 1
    grid = [[" "] * width for _ in range(height)]

    def cell(x, y):
        return 2 * (ymax - y), 3 * (x - xmin)

    for ((x0, y0), (x1, y1)), mult in shape.edges:
        r0, c0 = cell(x0, y0)
        r1, c1 = cell(x1, y1)
        grid[r0][c0] = grid[r1][c1] = "+"
        if y0 == y1:
            glyph = "=" if mult > 1 else "-"
            grid[r0][c0 + 1] = grid[r0][c0 + 2] = glyph
        else:
            grid[r0 - 1][c0] = "‖" if mult > 1 else "|"
    r, c = cell(0, 0)
    grid[r][c] = "o"
    return "\n".join("".join(row).rstrip() for row in grid) + "\n"


def render_svg(shape: DrawnShape, cfg: RenderConfig = RenderConfig()) -> str:
    """Standalone SVG; axis 2 points up.  Retraced edges get a thicker stroke."""
    _require_2d(shape)
    (xmin, ymin), (xmax, ymax) = shape.bounds
    cell, margin = cfg.cell, cfg.margin
    width = (xmax - xmin) * cell + 2 * margin
    height = (ymax - ymin) * cell + 2 * margin

    def X(x):
        return (x - xmin) * cell + margin

    def Y(y):
        return (ymax - y) * cell + margin

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    if cfg.show_grid:
        d = [f"M{X(x)} {Y(ymax)}V{Y(ymin)}" for x in range(xmin, xmax + 1)]
        d += [f"M{X(xmin)} {Y(y)}H{X(xmax)}" for y in range(ymin, ymax + 1)]
        out.append(
            f'<path class="grid" d="{"".join(d)}" stroke="#cccccc" '
            f'stroke-width="1" fill="none"/>'
        )
    stroke = max(1, cell // 10)
    for ((x0, y0), (x1, y1)), mult in shape.edges:
        out.append(
            f'<line class="edge" x1="{X(x0)}" y1="{Y(y0)}" x2="{X(x1)}" y2="{Y(y1)}" '
            f'stroke="black" stroke-width="{stroke * mult}" stroke-linecap="square" '
            f'data-multiplicity="{mult}"/>'
        )
    if cfg.show_origin:
        radius = max(1, cell // 6)
        out.append(f'<circle class="origin" cx="{X(0)}" cy="{Y(0)}" r="{radius}" fill="red"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
