"""
The family (1 - x^D) / (1 - x^d) in Z[x]
========================================

Z[x] is not a principal ideal domain, so a gcd is not automatically a
combination of the inputs.  For ``p_d = 1 + x^d + ... + x^(D-d)`` it is: the
pairwise witnesses come from Euclid on the exponents, and the combination
engine lifts them to any number of divisors.
"""

from gcdcert import POLYZ, DivisorInstance, binomial_bezout, gcd_oracle, pairwise_witness, theorem0_certificate
from gcdcert.polyz import PolyZ

u, v = binomial_bezout(4, 6)
print(f"({u})(1 - x^4) + ({v})(1 - x^6) = {u * PolyZ.binomial(4) + v * PolyZ.binomial(6)}")

w = pairwise_witness(2, 3, 6)
print(f"gcd(p_2, p_3) = {w.g} = ({w.u}) p_2 + ({w.v}) p_3")

inst = DivisorInstance(60, (4, 6, 10, 15))
cert = theorem0_certificate(inst)
print("gcd:", cert.gcd)
for d, coeff in zip(inst.divisors, cert.coefficients):
    print(f"  w for d={d}: degree {coeff.degree}")
print("sum w_i p_i == gcd:", POLYZ.dot(cert.coefficients, cert.elements) == cert.gcd)

# Independent referee: remainder-sequence gcd and (1 - x^D) / lcm(1 - x^d_i) must agree.
print("oracle agrees:", gcd_oracle(inst) == cert.gcd)
