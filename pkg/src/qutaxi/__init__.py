"""Quasi-unary strings for discrete taxicab geometry.

Grid walks in n dimensions are written as words over ``4n + 1`` digits:
``0`` (no move), ``i+``/``i-`` (draw one unit along axis i) and
``i+o``/``i-o`` (jump one unit without drawing).  This package parses and
prints that notation, normalizes strings, measures them, transforms them
and draws them.

>>> from qutaxi import parse, taxicab_length
>>> taxicab_length(parse("1+{3}2+{4}"))
Fraction(7, 1)
"""

from .core import (
    ZERO,
    Digit,
    Kind,
    QuString,
    alphabet,
    atom,
    blank,
    concat,
    inverse,
    normalize,
    scalar_mul,
    subtract_prefix,
    subtract_suffix,
)
from .errors import *  # noqa: F401,F403
from .graph import decode_to_points, encode_linear, encode_samples, merge_flat_steps, read_samples
from .metric import (
    MetricConfig,
    arc_length,
    gap_length,
    ink_displacement,
    inner_product,
    position_displacement,
    taxicab_length,
)
from .notation import parse, parse_digit, to_text
from .render import DrawnShape, RenderConfig, Trace, render_ascii, render_svg, to_shape, trace
from .transform import (
    TransformPattern,
    angle_pattern,
    dilate,
    rotate,
    rotate_by_angle,
    shape_transform,
    translate,
)

__version__ = "0.1.0"
