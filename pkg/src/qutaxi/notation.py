"""Text notation for QU strings.

Grammar (whitespace is allowed only between items)::

    string  := ws (item ws)*
    item    := '.' | unit rep?
    unit    := digit | '(' string-without-dot ')'
    digit   := '0' | axisnum sign blank?
    axisnum := nonzero decimal integer
    sign    := '+' | '-'
    blank   := 'o'
    rep     := '{' positive decimal integer '}'

So ``.1+{3}2-o(1+2+){2}`` is the origin followed by three ``1+``, one
``2-`` blank and the pair ``1+2+`` twice.
"""

from __future__ import annotations

from typing import List, Optional

from .core import ZERO, Digit, QuString, atom, blank
from .errors import ParseError

__all__ = ["parse", "parse_digit", "to_text"]

_WS = " \t\r\n"


class _Parser:
    def __init__(self, text: str, dim: int):
        self.text = text
        self.dim = dim
        self.pos = 0
        self.origin: Optional[int] = None

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message: str, pos: Optional[int] = None):
        pos = self.pos if pos is None else pos
        # keep the offset inside the text even for end-of-input errors
        raise ParseError(min(pos, max(len(self.text) - 1, 0)), message)

    def skip_ws(self):
        while self.peek() and self.peek() in _WS:
            self.pos += 1

    def number(self) -> int:
        start = self.pos
        while self.peek().isdigit() and self.peek().isascii():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a decimal number")
        return int(self.text[start : self.pos])

    def digit(self) -> Digit:
        start = self.pos
        if self.peek() == "0":
            self.pos += 1
            return ZERO
        axis = self.number()
        if axis > self.dim:
            self.fail(f"axis {axis} out of range 1..{self.dim}", start)
        sign_char = self.peek()
        if sign_char not in ("+", "-"):
            self.fail(f"expected '+' or '-' after axis {axis}")
        self.pos += 1
        sign = 1 if sign_char == "+" else -1
        if self.peek() == "o":
            self.pos += 1
            return blank(axis, sign)
        return atom(axis, sign)

    def sequence(self, out: List[Digit], depth: int):
        self.skip_ws()
        while self.peek():
            ch = self.peek()
            if ch == ")":
                if depth == 0:
                    self.fail("unbalanced ')'")
                return
            if ch == ".":
                if depth > 0:
                    self.fail("origin marker inside a group")
                if self.origin is not None:
                    self.fail("more than one origin marker")
                self.origin = len(out)
                self.pos += 1
                if self.peek() == "{":
                    self.fail("the origin marker cannot be repeated")
            else:
                unit = self.unit(depth)
                out.extend(unit * self.repeat())
            self.skip_ws()

    def unit(self, depth: int) -> List[Digit]:
        ch = self.peek()
        if ch == "(":
            open_pos = self.pos
            self.pos += 1
            inner: List[Digit] = []
            self.sequence(inner, depth + 1)
            if self.peek() != ")":
                self.fail("unbalanced '('", open_pos)
            self.pos += 1
            return inner
        if ch.isdigit() and ch.isascii():
            return [self.digit()]
        self.fail(f"unexpected character {ch!r}")

    def repeat(self) -> int:
        if self.peek() != "{":
            return 1
        self.pos += 1
        start = self.pos
        count = self.number()
        if count < 1:
            self.fail("repetition count must be positive", start)
        if self.peek() != "}":
            self.fail("expected '}'")
        self.pos += 1
        return count


def parse(text: str, dim: int = 2) -> QuString:
    """Parse notation text into a :class:`QuString` over ``dim`` axes.

    Raises :class:`ParseError` carrying the offending offset.
    """
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"dimension must be a positive integer, got {dim!r}")
    p = _Parser(text, dim)
    digits: List[Digit] = []
    p.sequence(digits, 0)
    return QuString(tuple(digits), dim, p.origin)


def parse_digit(text: str, dim: int = 2) -> Digit:
    """Parse a single digit token such as ``2-`` or ``1+o``."""
    s = parse(text, dim)
    if len(s) != 1 or s.origin is not None:
        raise ParseError(0, f"expected exactly one digit, got {text!r}")
    return s.digits[0]


def to_text(s: QuString) -> str:
    # runs never straddle the origin marker
    parts = []
    n = len(s.digits)
    i = 0
    while i <= n:
        if s.origin == i:
            parts.append(".")
        if i == n:
            break
        d = s.digits[i]
        j = i + 1
        while j < n and s.digits[j] == d and s.origin != j:
            j += 1
        k = j - i
        parts.append(d.token if k == 1 else f"{d.token}{{{k}}}")
        i = j
    return "".join(parts)
