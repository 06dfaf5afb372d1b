"""
Principal intersections and sums of products
============================================

Given ``<a> + <b> = <d>`` with explicit witnesses, ``<a> ∩ <b>`` is generated
by ``m = p*q*d`` and ``m*d = a*b``.  Recursing on that fact shows the ``n``
products ``prod_{j != i} p_j`` generate a principal ideal, with coefficients
and multipliers for both directions.
"""

import math

from gcdcert import (
    INT, POLYZ, DivisorInstance, LemmaWitness, PolyZ, int_sum_of_products, intersect_principal,
    theorem0_products, verify_sum_products,
)

a, b = PolyZ([1, 0, -1]), PolyZ([1, 0, 0, -1])
w = LemmaWitness(a, b, PolyZ([1, -1]), PolyZ([0, -1]), PolyZ([1]), PolyZ([1, 1]), PolyZ([1, 1, 1]))
m = intersect_principal(w, POLYZ)
print("generator of <1-x^2> ∩ <1-x^3>:", m, "  m*d == a*b:", m * w.d == a * b)

xs = (6, 10, 15)
cert = int_sum_of_products(xs)
print("products:", cert.products, "generator:", cert.witness.generator)
print("prod / lcm:", math.prod(xs) // math.lcm(*xs))
print("combination:", cert.witness.combination, "multipliers:", cert.witness.multipliers)
print("verified:", verify_sum_products(cert, INT))

pcert = theorem0_products(DivisorInstance(6, (1, 2, 3)))
print("Z[x] generator:", pcert.witness.generator, " verified:", verify_sum_products(pcert, POLYZ))

# In R[x, y] the converse fails: <x> ∩ <y> = <xy> but <x, y> is not principal.
# Multivariate rings are outside this library.
