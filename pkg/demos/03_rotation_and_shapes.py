"""
Rotating straight runs into staircases, and turning a line into two squares.

Run with:  python demos/03_rotation_and_shapes.py [output-dir]
Writes two_squares.svg into output-dir (default: current directory).
"""

import sys
from pathlib import Path

from qutaxi import (
    RenderConfig,
    TransformPattern,
    atom,
    parse,
    render_ascii,
    render_svg,
    rotate,
    rotate_by_angle,
    shape_transform,
    to_shape,
    trace,
)

line = parse(".1+{4}")

# 45 degrees: each pair of steps east becomes one step east and one north.
print(rotate(line, atom(1, 1), 1, atom(2, 1), 1))

# The named angles cover every multiple of 45 degrees in the plane.
for angle in (45, 90, 135, 180, 270):
    print(angle, rotate_by_angle(line, angle))

# Shape transformation: nine steps east become two unit squares with a gap.
pattern = TransformPattern.from_string(parse("2+1-2-1+1+o1+2+1-2-"))
squares = shape_transform(parse(".1+{9}"), pattern)
print(squares)

shape = to_shape(trace(squares))
print(render_ascii(shape))

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
target = out_dir / "two_squares.svg"
target.write_text(render_svg(shape, RenderConfig(cell=40, margin=20)))
print("wrote", target)
