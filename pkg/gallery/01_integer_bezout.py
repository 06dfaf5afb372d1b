"""
Gcd certificates over the integers
==================================

Extended Euclid gives a Bezout pair for two integers.  From pairwise pairs
we build a certificate for any number of integers, and check it again with
nothing but multiplication and addition.
"""

from gcdcert import INT, combine3, combine_n, ext_gcd, trace_failures, verify_certificate

pair = ext_gcd(6, 10)
print(f"{pair.u}*6 + {pair.v}*10 = {pair.g}")

# The three-element closed form, with the cofactors it passes through.
cert, trace = combine3(6, 10, 15, 2, -1, 3, -1, -1, 1, INT)
print("coefficients:", cert.coefficients, "gcd:", cert.gcd)
print("e =", trace.e, " f =", trace.f, " trace problems:", trace_failures(trace, INT))

# Longer tuples merge their last two entries and recurse.
cert = combine_n([30, 42, 70, 105], INT)
print(" + ".join(f"({w})*{p}" for w, p in zip(cert.coefficients, cert.elements)), "=", cert.gcd)
print("verified:", verify_certificate(cert, INT))

# Scaling every element scales the gcd by |c|.
print(combine_n([-12 * v for v in (30, 42, 70, 105)], INT).gcd)
