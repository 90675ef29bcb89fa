"""
Graphs of functions sampled on the integers.

Run with:  python demos/04_function_graphs.py
"""

from qutaxi import decode_to_points, encode_linear, encode_samples, render_ascii, to_shape, trace

# y = (2/3) x: three steps right, two up, repeated.
line = encode_linear(2, 3, periods=3)
print(line)
print(decode_to_points(line))
print(render_ascii(to_shape(trace(line))))

# y = x^2 from its samples: the y runs grow by the odd numbers 1, 3, 5, ...
parabola = encode_samples([(x, x * x) for x in range(4)])
print(parabola)
print(decode_to_points(parabola))
print(render_ascii(to_shape(trace(parabola))))
