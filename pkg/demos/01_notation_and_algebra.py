"""
Writing grid walks as strings, and the algebra they obey.

Run with:  python demos/01_notation_and_algebra.py
"""

from qutaxi import concat, inverse, normalize, parse, scalar_mul, subtract_suffix

# The origin, then two unit moves to the right.
right2 = parse(".1+1+")
print(right2, right2.digits)

# Repetition groups expand on parsing and come back compressed.
stairs = parse("(1+2+){3}")
print(stairs, "has", len(stairs), "digits")

# The dot can float: here the walk starts one unit left of the origin.
print(parse("1+.1+"))

# Opposite moves next to each other cancel; zeros are no-ops.
print(repr(str(normalize(parse("1+2+2-1-")))))   # '' -- nothing left
print(normalize(parse("1+0 0 2+")))              # 1+2+

# Concatenation is associative but not commutative.
a, b = parse("1+"), parse("2+")
print(concat(a, b), "vs", concat(b, a))

# Scaling repeats every digit in place: a unit square becomes a 2x2 square.
square = parse(".1+2+1-2-")
print(scalar_mul(2, square))

# Removing a suffix, and undoing a walk with its inverse.
print(subtract_suffix(parse("1+2+"), parse("2+")))
print(repr(str(normalize(concat(square, inverse(square))))))
