#!/usr/bin/env python3
"""A tour of the exponential Riordan group on the classic example arrays.

Shows the group law, powers and inverses on [e^x, x], the factorial array
[1/(1-x), x], sets-of-lists [1, x/(1-x)], the Laguerre-type array and the
Charlier-type array, together with their production matrices.
"""

from erarray import (
    Series,
    er_build,
    er_inverse,
    er_mul,
    er_power,
    identity,
    named_pair,
    production_from_pair,
)
from erarray.formats import triangle_to_plain

N = 6


def show(title, rows):
    print(title)
    print(triangle_to_plain(rows))


binomial = er_build(*named_pair("binomial", N))
show("Pascal [e^x, x]:", [binomial.row(n) for n in range(5)])

x = Series.x(N)
cubed = er_power(binomial, 3)
print("[e^x, x]^3 equals [e^{3x}, x]:",
      cubed.entries == er_build((x * 3).exp(), x).entries)
print()

factorials = er_build(*named_pair("lah_like", N))
show("[1/(1-x), x] (general term n!/k!):", [factorials.row(n) for n in range(5)])
show("its inverse [1-x, x]:", [er_inverse(factorials).row(n) for n in range(5)])
show("its production matrix (array plus a unit superdiagonal):",
     [row[:6] for row in production_from_pair(factorials).entries[:5]])

sol = er_build(*named_pair("sets_of_lists", N))
print("row sums of [1, x/(1-x)] count sets of lists:",
      ", ".join(str(s) for s in sol.row_sums()))
show("production matrix of [1, x/(1-x)]:",
     [row[:6] for row in production_from_pair(sol).entries[:5]])

charlier = er_build(*named_pair("charlier", N))
show("Charlier-type [e^x, log(1/(1-x))]:", [charlier.row(n) for n in range(5)])
show("production of its inverse (tridiagonal -(n+1), n):",
     [row[:6] for row in production_from_pair(er_inverse(charlier)).entries[:5]])

a = er_build(*named_pair("laguerre", N))
b = er_build(*named_pair("stirling2", N))
lhs = er_mul(er_mul(a, b), charlier)
rhs = er_mul(a, er_mul(b, charlier))
print("associativity on a random-ish triple:", lhs.entries == rhs.entries)
print("A * A^{-1} = [1, x]:",
      er_mul(a, er_inverse(a)).entries == identity(N).entries)
