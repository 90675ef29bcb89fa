"""
Taxicab length, ink, gaps and the inner product.

Run with:  python demos/02_lengths_and_inner_products.py
"""

from fractions import Fraction

from qutaxi import MetricConfig, arc_length, gap_length, inner_product, parse, taxicab_length, translate

# 3 blocks east and 4 blocks north: a taxicab distance of 7 blocks.
cab = parse("1+{3}2+{4}")
print("d_T =", taxicab_length(cab))

# Length is a net measure: going there and back has length 0 ...
there_and_back = parse("1+{3}1-{3}")
print("net:", taxicab_length(there_and_back), " ink:", arc_length(there_and_back))

# ... and blanks (pen-up moves) never count, so translation keeps length.
shifted = translate(parse(".1+{3}2+{4}"), 1, 1, 5)
print(shifted, "->", taxicab_length(shifted), "with a gap of", gap_length(shifted))

# Blocks can have any rational size, or a different size per axis.
print(taxicab_length(cab, MetricConfig(Fraction(1, 2))))
print(taxicab_length(cab, MetricConfig(per_axis=(2, Fraction(1, 3)))))

# Atoms are an orthonormal basis; longer strings extend bilinearly.
for x, y in [("1+", "1+"), ("1+", "1-"), ("1+", "2+"), ("1+{3}2+", "1+2-{2}")]:
    print(f"<{x}, {y}> =", inner_product(parse(x), parse(y)))
