#!/usr/bin/env python3
"""Hankel transforms, J-fractions and recurrence recovery from raw moments.

Starts from plain integer sequences (Bell numbers, factorials), recovers
their three-term recurrence coefficients exactly, expands the matching
continued fraction, and checks the two Hankel invariances: the beta
product formula and stability under the binomial transform.
"""

from erarray import (
    Scalar,
    bell_poly,
    binomial_transform,
    hankel_from_betas,
    hankel_transform,
    jacobi_from_moments,
    jfraction_expand,
    moments_from_jacobi,
)

bells = [Scalar(bell_poly(n).evaluate(1)) for n in range(11)]
print("Bell numbers:", ", ".join(str(b) for b in bells))
print("Hankel transform:", ", ".join(str(h) for h in hankel_transform(bells, 5)))
print()

print("=== recover the recurrence from the raw moments ===")
rec = jacobi_from_moments(bells)
print("alpha:", ", ".join(str(a) for a in rec.params.alpha))
print("beta: ", ", ".join(str(b) for b in rec.params.beta))
print("(z = 1 specialization of alpha_n = z + n, beta_n = n z)")
print()

print("=== factorials: the Laguerre-type recurrence ===")
from math import factorial

facts = [Scalar(factorial(n)) for n in range(11)]
rec = jacobi_from_moments(facts)
print("alpha:", ", ".join(str(a) for a in rec.params.alpha))
print("beta: ", ", ".join(str(b) for b in rec.params.beta))
print("J-fraction expansion returns the factorials:",
      jfraction_expand(rec.params, rec.depth).coeffs
      == tuple(facts[: rec.depth + 1]))
print("beta product formula:",
      hankel_from_betas(rec.params, 3) == hankel_transform(facts, 3))
print()

print("=== degenerate moments terminate cleanly ===")
c = Scalar(3)
rec = jacobi_from_moments([Scalar(1), c, c * c, c * c * c])
print(f"point mass at 3: depth {rec.depth}, finite support: {rec.finite_support},",
      f"alpha = {[str(a) for a in rec.params.alpha]}")
print()

print("=== binomial-transform invariance ===")
shifted = binomial_transform(bells)
print("binomial transform of Bell is the shifted Bell sequence:",
      shifted.terms[:4] == tuple(bells[1:5]))
print("equal Hankel transforms:",
      hankel_transform(bells, 5) == hankel_transform(shifted, 5))
print()

print("=== the same machinery, fully symbolic ===")
polys = [Scalar(bell_poly(n)) for n in range(9)]
rec = jacobi_from_moments(polys)
print("alpha:", ", ".join(str(a) for a in rec.params.alpha))
print("beta: ", ", ".join(str(b) for b in rec.params.beta))
print("moments round trip:",
      moments_from_jacobi(rec.params, rec.depth).terms
      == tuple(polys[: rec.depth + 1]))
