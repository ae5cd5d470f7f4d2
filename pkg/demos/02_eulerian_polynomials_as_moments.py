#!/usr/bin/env python3
"""Eulerian polynomials as moments, and the z = 1 Laguerre degeneration.

The defining pair mixes e^x and e^{zx} through a quotient whose scalar
denominators carry (1-z) factors; exact fraction-field arithmetic cancels
them so that the whole array stays polynomial in z and can be specialized
at z = 1 afterwards.
"""

from fractions import Fraction

from erarray import (
    Scalar,
    er_build,
    er_inverse,
    eulerian_poly,
    extract_jacobi,
    hankel_transform,
    named_pair,
    parse_series,
    production_from_pair,
)
from erarray.formats import triangle_to_plain

ORDER = 8

g_text = "(exp(z*x)*(1-z))/(exp(z*x)-z*exp(x))"
f_text = "(exp(x)-exp(z*x))/(exp(z*x)-z*exp(x))"
print(f"g = {g_text}")
print(f"f = {f_text}")
g = parse_series(g_text, ORDER)
f = parse_series(f_text, ORDER)
print("f expands to:", f.truncate(3))
array = er_build(g, f)
print("same array as the built-in pair:",
      array.entries == er_build(*named_pair("thm2", ORDER)).entries)
print()

print("=== column 0: the Eulerian polynomials ===")
for n in range(5):
    print(f"  EU_{n}(z) = {array.entries[n][0]}")
print("closed form agrees:",
      all(array.entries[n][0] == Scalar(eulerian_poly(n)) for n in range(ORDER + 1)))
print()

print("=== production matrix: beta_n = n^2 z this time ===")
p = production_from_pair(array)
print(triangle_to_plain([row[:5] for row in p.entries[:4]]))
params = extract_jacobi(p)
print("alpha:", ", ".join(str(a) for a in params.alpha[:4]), "...")
print("beta: ", ", ".join(str(b) for b in params.beta[:4]), "...")
print()

print("=== Hankel transform picks up squared factorials ===")
terms = [Scalar(eulerian_poly(n)) for n in range(13)]
for n, h in enumerate(hankel_transform(terms, 5)):
    print(f"  h_{n} = {h}")
print()

print("=== specializing z = 1 ===")
at_one = array.eval_z(Fraction(1))
laguerre = er_build(*named_pair("laguerre", ORDER))
print("entries at z = 1 equal [1/(1-x), x/(1-x)]:",
      at_one.entries == laguerre.entries)
inv_at_one = [
    [Scalar(e.eval_z(1)) for e in er_inverse(array).row(n)] for n in range(4)
]
print("inverse at z = 1 (signed Laguerre coefficients):")
print(triangle_to_plain(inv_at_one))
