"""Digits, QU strings and their algebra.

A QU string is a finite word over the ``4n + 1`` digits of an n-dimensional
lattice: the no-move digit ``0``, the pen-down unit moves ``i+``/``i-`` and
the pen-up unit moves ``i+o``/``i-o`` (blanks).  A string may carry one
origin marker, the lattice origin, placed between two digits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .errors import (
    DimensionMismatch,
    OriginConflict,
    PrefixMismatch,
    PreconditionError,
    SuffixMismatch,
)

__all__ = [
    "Kind",
    "Digit",
    "ZERO",
    "atom",
    "blank",
    "alphabet",
    "QuString",
    "concat",
    "normalize",
    "scalar_mul",
    "subtract_suffix",
    "subtract_prefix",
    "inverse",
]


class Kind(enum.Enum):
    ZERO = "zero"
    ATOM = "atom"
    BLANK = "blank"


@dataclass(frozen=True)
class Digit:
    """One symbol of the base-(4n+1) alphabet.

    ``sign`` is ``+1`` or ``-1`` for atoms and blanks and ``0`` for the zero
    digit, whose ``axis`` is also ``0``.
    """

    kind: Kind
    axis: int = 0
    sign: int = 0

    def __post_init__(self):
        if self.kind is Kind.ZERO:
            if self.axis != 0 or self.sign != 0:
                raise ValueError("the zero digit carries no axis or sign")
        else:
            if not isinstance(self.axis, int) or self.axis < 1:
                raise ValueError(f"axis must be a positive integer, got {self.axis!r}")
            if self.sign not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    @property
    def is_zero(self) -> bool:
        return self.kind is Kind.ZERO

    @property
    def is_atom(self) -> bool:
        return self.kind is Kind.ATOM

    @property
    def is_blank(self) -> bool:
        return self.kind is Kind.BLANK

    def flipped(self) -> Digit:
        """The same kind of move on the same axis, pointing the other way."""
        if self.is_zero:
            return self
        return Digit(self.kind, self.axis, -self.sign)

    def cancels(self, other: Digit) -> bool:
        """True when ``self`` followed by ``other`` is an inverse pair."""
        return (
            not self.is_zero
            and self.kind is other.kind
            and self.axis == other.axis
            and self.sign == -other.sign
        )

    @property
    def token(self) -> str:
        if self.is_zero:
            return "0"
        text = f"{self.axis}{'+' if self.sign > 0 else '-'}"
        return text + "o" if self.is_blank else text

    def __str__(self):
        return self.token

    def __repr__(self):
        return f"Digit({self.token!r})"


ZERO = Digit(Kind.ZERO)


def atom(axis: int, sign: int) -> Digit:
    return Digit(Kind.ATOM, axis, sign)


def blank(axis: int, sign: int) -> Digit:
    return Digit(Kind.BLANK, axis, sign)


def alphabet(dim: int) -> Tuple[Digit, ...]:
    """All ``4 * dim + 1`` digits, zero first."""
    digits = [ZERO]
    for axis in range(1, dim + 1):
        digits += [atom(axis, -1), atom(axis, 1), blank(axis, 1), blank(axis, -1)]
    return tuple(digits)


@dataclass(frozen=True)
class QuString:
    """A finite digit sequence over a fixed number of axes.

    ``origin`` is the index of the origin marker (0 puts it in front of the
    first digit) or ``None`` when the string carries no marker, which reads
    the same as a marker in front.
    """

    digits: Tuple[Digit, ...] = ()
    dim: int = 2
    origin: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.dim!r}")
        for d in self.digits:
            if not isinstance(d, Digit):
                raise TypeError(f"expected Digit, got {type(d).__name__}")
            if d.axis > self.dim:
                raise ValueError(f"digit {d.token} exceeds dimension {self.dim}")
        if self.origin is not None and not 0 <= self.origin <= len(self.digits):
            raise ValueError(f"origin index {self.origin} out of range")

    @classmethod
    def of(cls, *digits: Digit, dim: int = 2, origin: Optional[int] = None) -> QuString:
        return cls(tuple(digits), dim, origin)

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, index):
        return self.digits[index]

    @property
    def origin_index(self) -> int:
        """Origin position with the absent marker read as index 0."""
        return 0 if self.origin is None else self.origin

    def with_origin(self, origin: Optional[int]) -> QuString:
        return QuString(self.digits, self.dim, origin)

    def __str__(self):
        from .notation import to_text

        return to_text(self)


def _same_dim(*strings: QuString) -> int:
    dims = {s.dim for s in strings}
    if len(dims) != 1:
        raise DimensionMismatch(f"strings live in different dimensions: {sorted(dims)}")
    return dims.pop()


def concat(a: QuString, b: QuString) -> QuString:
    """``a`` followed by ``b``; the origin marker follows its digits."""
    dim = _same_dim(a, b)
    if a.origin is not None and b.origin is not None:
        raise OriginConflict("both operands carry an origin marker")
    if a.origin is not None:
        origin = a.origin
    elif b.origin is not None:
        origin = len(a) + b.origin
    else:
        origin = None
    return QuString(a.digits + b.digits, dim, origin)


def _reduce(digits: Iterable[Digit]) -> list:
    stack = []
    for d in digits:
        if d.is_zero:
            continue
        if stack and stack[-1].cancels(d):
            stack.pop()
        else:
            stack.append(d)
    return stack


def normalize(s: QuString) -> QuString:
    """Drop zeros and cancel adjacent inverse pairs until none are left.

    The origin marker is a barrier: digits on either side of it never cancel
    each other, so the walk keeps its start and end points.
    """
    if s.origin is None:
        return QuString(tuple(_reduce(s.digits)), s.dim)
    left = _reduce(s.digits[: s.origin])
    right = _reduce(s.digits[s.origin :])
    return QuString(tuple(left + right), s.dim, len(left))


def scalar_mul(l: int, s: QuString) -> QuString:
    """Repeat every digit ``l`` times in place (a dilation by ``l``)."""
    if not isinstance(l, int) or l < 1:
        raise PreconditionError(f"scalar must be a positive integer, got {l!r}")
    digits = tuple(d for d in s.digits for _ in range(l))
    origin = None if s.origin is None else s.origin * l
    return QuString(digits, s.dim, origin)


def subtract_suffix(a: QuString, b: QuString) -> QuString:
    """``a ⊖ b``: strip the normal form of ``b`` off the end of ``a``'s."""
    _same_dim(a, b)
    na, nb = normalize(a), normalize(b)
    k = len(nb)
    if k > len(na) or na.digits[len(na) - k :] != nb.digits:
        raise SuffixMismatch(f"{nb} is not a suffix of {na}")
    keep = len(na) - k
    origin = na.origin if na.origin is not None and na.origin <= keep else None
    return QuString(na.digits[:keep], na.dim, origin)


def subtract_prefix(a: QuString, b: QuString) -> QuString:
    """``⊖a ⊕ b``: strip the normal form of ``a`` off the front of ``b``'s.

    Note the argument order mirrors the written form: ``a`` is the piece
    removed, ``b`` the string it is removed from.
    """
    _same_dim(a, b)
    na, nb = normalize(a), normalize(b)
    k = len(na)
    if nb.digits[:k] != na.digits:
        raise PrefixMismatch(f"{na} is not a prefix of {nb}")
    origin = nb.origin - k if nb.origin is not None and nb.origin >= k else None
    return QuString(nb.digits[k:], nb.dim, origin)


def inverse(a: QuString) -> QuString:
    """Reverse ``a`` and flip every sign.

    The result is a free displacement and carries no origin marker, so it
    can always be appended to ``a``.
    """
    return QuString(tuple(d.flipped() for d in reversed(a.digits)), a.dim)
