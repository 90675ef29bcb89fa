"""Translation, rotation, shape transformation and dilation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .core import Digit, QuString, atom, blank, normalize, scalar_mul
from .errors import (
    IndivisibleLength,
    InvalidPattern,
    NotASingleRun,
    OriginNotAtFront,
    PreconditionError,
)

__all__ = [
    "TransformPattern",
    "translate",
    "rotate",
    "shape_transform",
    "dilate",
    "angle_pattern",
    "rotate_by_angle",
]


@dataclass(frozen=True)
class TransformPattern:
    """Ordered ``(digit, multiplicity)`` parts replacing a single-digit run."""

    parts: Tuple[Tuple[Digit, int], ...]

    def __post_init__(self):
        parts = tuple((d, q) for d, q in self.parts)
        object.__setattr__(self, "parts", parts)
        for d, q in parts:
            if not isinstance(d, Digit) or d.is_zero:
                raise InvalidPattern(f"pattern digits must be atoms or blanks, got {d!r}")
            if not isinstance(q, int) or q < 0:
                raise InvalidPattern(f"multiplicity must be a non-negative integer, got {q!r}")
        if self.period < 1:
            raise InvalidPattern("pattern multiplicities sum to zero")

    @property
    def period(self) -> int:
        return sum(q for _, q in self.parts)

    def expand(self) -> Tuple[Digit, ...]:
        return tuple(d for d, q in self.parts for _ in range(q))

    @classmethod
    def from_string(cls, s: QuString) -> "TransformPattern":
        """Read maximal runs of a dot-free string as ``(digit, run length)``."""
        if s.origin is not None:
            raise InvalidPattern("a pattern carries no origin marker")
        parts = []
        for d in s.digits:
            if parts and parts[-1][0] == d:
                parts[-1][1] += 1
            else:
                parts.append([d, 1])
        return cls(tuple((d, q) for d, q in parts))


def _require_front_origin(a: QuString):
    if a.origin not in (None, 0):
        raise OriginNotAtFront(f"origin marker at index {a.origin}, expected the front")


def translate(a: QuString, axis: int, sign: int, l: int) -> QuString:
    """Shift ``a`` by ``l`` units along ``axis`` by prefixing ``l`` blanks."""
    _require_front_origin(a)
    if not 1 <= axis <= a.dim:
        raise PreconditionError(f"axis {axis} out of range 1..{a.dim}")
    if sign not in (1, -1):
        raise PreconditionError(f"sign must be +1 or -1, got {sign!r}")
    if not isinstance(l, int) or l < 0:
        raise PreconditionError(f"distance must be a non-negative integer, got {l!r}")
    return QuString((blank(axis, sign),) * l + a.digits, a.dim, a.origin)


def _single_run(a: QuString, atoms_only: bool) -> Tuple[Digit, int]:
    _require_front_origin(a)
    n = normalize(a)
    if not n.digits:
        raise NotASingleRun("input normalizes to the empty string")
    first = n.digits[0]
    if any(d != first for d in n.digits):
        raise NotASingleRun(f"{n} is not a run of one digit")
    if atoms_only and not first.is_atom:
        raise NotASingleRun(f"rotation needs a run of atoms, got {first.token}")
    return first, len(n.digits)


def _apply(a: QuString, pat: TransformPattern, p: int) -> QuString:
    if p % pat.period:
        raise IndivisibleLength(
            f"run length {p} is not a multiple of the pattern period {pat.period}"
        )
    digits = pat.expand() * (p // pat.period)
    return QuString(digits, a.dim, a.origin)


def shape_transform(a: QuString, pat: TransformPattern) -> QuString:
    """Replace the run ``c^p`` by the pattern repeated ``p / period`` times.

    >>> from qutaxi import parse
    >>> pat = TransformPattern.from_string(parse("2+1-2-1+1+o1+2+1-2-"))
    >>> str(shape_transform(parse(".1+{9}"), pat))
    '.2+1-2-1+1+o1+2+1-2-'
    """
    for d, _ in pat.parts:
        if d.axis > a.dim:
            raise InvalidPattern(f"pattern digit {d.token} exceeds dimension {a.dim}")
    _, p = _single_run(a, atoms_only=False)
    return _apply(a, pat, p)


def rotate(
    a: QuString, i: Digit, q: int, j: Optional[Digit] = None, r: int = 0
) -> QuString:
    """Turn the straight run ``.k^p`` into the staircase ``.(i^q j^r)^(p/(q+r))``.

    ``j`` may be omitted when ``r`` is 0.
    """
    if j is None:
        if r:
            raise InvalidPattern("r > 0 needs a second digit j")
        j = i
    for d in (i, j):
        if not isinstance(d, Digit) or not d.is_atom:
            raise InvalidPattern(f"rotation digits must be atoms, got {d!r}")
        if d.axis > a.dim:
            raise InvalidPattern(f"digit {d.token} exceeds dimension {a.dim}")
    pat = TransformPattern(((i, q), (j, r)))
    _, p = _single_run(a, atoms_only=True)
    return _apply(a, pat, p)


def dilate(l: int, a: QuString) -> QuString:
    return scalar_mul(l, a)


# Counterclockwise quarter turn in the (1, 2) plane.
_QUARTER = {(1, 1): (2, 1), (2, 1): (1, -1), (1, -1): (2, -1), (2, -1): (1, 1)}

# (i, j) for a run of 1+, in multiples of 45 degrees; odd steps give
# staircases whose axis-1 move comes first.
_FROM_EAST = {
    0: ((1, 1), None),
    1: ((1, 1), (2, 1)),
    2: ((2, 1), None),
    3: ((1, -1), (2, 1)),
    4: ((1, -1), None),
    5: ((1, -1), (2, -1)),
    6: ((2, -1), None),
    7: ((1, 1), (2, -1)),
}


def angle_pattern(k: Digit, angle: int) -> Tuple[Digit, int, Optional[Digit], int]:
    """``(i, q, j, r)`` rotating a 2D run of ``k`` by ``angle`` degrees.

    ``angle`` must be a multiple of 45.  For ``k = 1+`` the table reproduces
    ``45 -> (1+2+)``, ``90 -> 2+`` and ``135 -> (1-2+)``; other directions are
    handled by conjugating with quarter turns.
    """
    if not k.is_atom or k.axis > 2:
        raise InvalidPattern(f"angle rotation needs a 2D atom, got {k!r}")
    if angle % 45:
        raise InvalidPattern(f"angle must be a multiple of 45 degrees, got {angle}")
    turns = 0
    cur = (1, 1)
    while cur != (k.axis, k.sign):
        cur = _QUARTER[cur]
        turns += 1

    def turned(move):
        for _ in range(turns):
            move = _QUARTER[move]
        return atom(*move)

    i_move, j_move = _FROM_EAST[(angle // 45) % 8]
    if j_move is None:
        return turned(i_move), 1, None, 0
    return turned(i_move), 1, turned(j_move), 1


def rotate_by_angle(a: QuString, angle: int) -> QuString:
    if a.dim != 2:
        raise PreconditionError("angle rotation is only defined in dimension 2")
    k, _ = _single_run(a, atoms_only=True)
    i, q, j, r = angle_pattern(k, angle)
    return rotate(a, i, q, j, r)
