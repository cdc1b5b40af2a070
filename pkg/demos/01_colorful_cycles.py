"""
Colorful cycles and spectra
===========================

Builds the small explicit colorings, lists which colorful cycle lengths they
admit and shows the spectrum (the lengths with no colorful cycle) as a
finite exception set plus a solid tail.
"""

import numpy as np

from gallaikit import ColoredClique, even_gon_no_preceding, find_colorful_cycle, monoid_closure, odd_gon_no_squares, spectrum

# a colorful pentagon with no colorful square
K = odd_gon_no_squares(5)
print(K.color)
print("pentagon:", tuple(find_colorful_cycle(K, 5)))
print("square:", find_colorful_cycle(K, 4))
print(spectrum(K))

# the triangle is colorful too, so 3 is an exception as well
print("triangle:", tuple(find_colorful_cycle(K, 3)))

# even lengths: a colorful hexagon with no colorful pentagon
K6 = even_gon_no_preceding(3)
print(spectrum(K6))

# spectra are monoids under m o n = m + n - 2; 4 generates the even numbers
print(sorted(monoid_closure({4}, 12)))
print(sorted(monoid_closure({3}, 8)))

# a random coloring, for comparison
rng = np.random.default_rng(0)
mat = rng.integers(0, 6, size=(7, 7))
mat = np.triu(mat, 1) + np.triu(mat, 1).T
np.fill_diagonal(mat, -1)
print(spectrum(ColoredClique.tightened(mat)))
