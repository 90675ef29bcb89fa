"""Lengths and inner products of QU strings.

All quantities are exact: counts are integers and weights are
:class:`fractions.Fraction`.  Only pen-down digits (atoms) carry length;
blanks are gaps and never contribute to the taxicab length.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Optional, Sequence, Tuple

from .core import QuString, _same_dim
from .errors import PreconditionError

__all__ = [
    "MetricConfig",
    "DisplacementVector",
    "ink_displacement",
    "position_displacement",
    "taxicab_length",
    "arc_length",
    "gap_length",
    "inner_product",
]

DisplacementVector = Tuple[int, ...]


def _positive_fraction(value, what: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (Rational, str)):
        raise ValueError(f"{what} must be an exact rational, got {value!r}")
    frac = Fraction(value)
    if frac <= 0:
        raise ValueError(f"{what} must be positive, got {value!r}")
    return frac


@dataclass(frozen=True)
class MetricConfig:
    """Length of the atomic string, optionally one per axis.

    ``unit`` is the common length ``s``; ``per_axis`` overrides it with
    ``s_1 .. s_n``.  Accepts ints, Fractions or strings like ``"3/2"``.
    """

    unit: Fraction = Fraction(1)
    per_axis: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "unit", _positive_fraction(self.unit, "unit length"))
        if self.per_axis is not None:
            weights = tuple(_positive_fraction(w, "axis weight") for w in self.per_axis)
            if not weights:
                raise ValueError("per-axis weights must not be empty")
            object.__setattr__(self, "per_axis", weights)

    def weights(self, dim: int) -> Tuple[Fraction, ...]:
        if self.per_axis is None:
            return (self.unit,) * dim
        if len(self.per_axis) != dim:
            raise PreconditionError(
                f"{len(self.per_axis)} axis weights given for dimension {dim}"
            )
        return self.per_axis


DEFAULT = MetricConfig()


def ink_displacement(a: QuString) -> DisplacementVector:
    """Net signed count of atoms per axis; blanks and zeros are ignored."""
    net = [0] * a.dim
    for d in a.digits:
        if d.is_atom:
            net[d.axis - 1] += d.sign
    return tuple(net)


def position_displacement(a: QuString) -> DisplacementVector:
    """Net signed count of atoms and blanks per axis (where the pen ends up)."""
    net = [0] * a.dim
    for d in a.digits:
        if not d.is_zero:
            net[d.axis - 1] += d.sign
    return tuple(net)


def taxicab_length(a: QuString, cfg: MetricConfig = DEFAULT) -> Fraction:
    w = cfg.weights(a.dim)
    return sum((abs(n) * s for n, s in zip(ink_displacement(a), w)), Fraction(0))


def arc_length(a: QuString, cfg: MetricConfig = DEFAULT) -> Fraction:
    """Total ink laid down, so ``1+1-`` has arc length 2 but taxicab length 0."""
    w = cfg.weights(a.dim)
    return sum((w[d.axis - 1] for d in a.digits if d.is_atom), Fraction(0))


def gap_length(a: QuString, cfg: MetricConfig = DEFAULT) -> Fraction:
    w = cfg.weights(a.dim)
    return sum((w[d.axis - 1] for d in a.digits if d.is_blank), Fraction(0))


def inner_product(a: QuString, b: QuString, cfg: MetricConfig = DEFAULT) -> Fraction:
    """Bilinear extension of the atomic table ``<i±, j±> = ±s² δ_ij``.

    Expanding over all digit pairs collapses to a weighted dot product of
    the ink displacements.
    """
    dim = _same_dim(a, b)
    w = cfg.weights(dim)
    return sum(
        (s * s * x * y for s, x, y in zip(w, ink_displacement(a), ink_displacement(b))),
        Fraction(0),
    )
