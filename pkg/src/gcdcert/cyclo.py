"""The family ``p_i = (1 - x**D) / (1 - x**d_i)`` for divisors ``d_i`` of ``D``.

Z[x] is not a principal ideal domain, yet every pair of these polynomials
has a Bezout witness over Z[x]: multiplying the binomial identity

    alpha*(1 - x**d_i) + beta*(1 - x**d_j) = 1 - x**g,    g = gcd(d_i, d_j)

by ``C = (1 - x**D) / ((1 - x**d_i)(1 - x**d_j))`` turns ``1 - x**d_i`` into
``p_j`` and ``1 - x**d_j`` into ``p_i``.  Feeding those pairs to
:func:`~gcdcert.combine.combine_n` gives a certificate for the whole family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .combine import CombinationCertificate, combine_n
from .polyz import POLYZ, PolyZ, binomial_bezout, exact_div, geometric, normalize
from .products import PrincipalSumWitness, SumProductsCertificate, sum_of_products
from .ring import BezoutPair, CertificateError


class InvalidInstanceError(ValueError):
    pass


class OracleDisagreement(CertificateError):
    """Two independent gcd computations disagree; always an implementation bug."""


@dataclass(frozen=True)
class DivisorInstance:
    D: int
    divisors: tuple

    def __post_init__(self):
        object.__setattr__(self, "divisors", tuple(int(d) for d in self.divisors))
        if not isinstance(self.D, int) or self.D < 1:
            raise InvalidInstanceError(f"D must be a positive integer, got {self.D!r}")
        if not self.divisors:
            raise InvalidInstanceError("at least one divisor is required")
        for d in self.divisors:
            if d < 1 or self.D % d:
                raise InvalidInstanceError(f"{d} does not divide {self.D}")

    @property
    def polynomials(self) -> tuple:
        return tuple(build_p(d, self.D) for d in self.divisors)


def divisors_of(D: int) -> list[int]:
    return [d for d in range(1, D + 1) if D % d == 0]


@lru_cache(maxsize=4096)
def build_p(d: int, D: int) -> PolyZ:
    """``1 + x**d + x**(2d) + ... + x**(D-d)``."""
    if d < 1 or D < 1 or D % d:
        raise InvalidInstanceError(f"{d} does not divide {D}")
    return geometric(d, D // d)


def pairwise_witness(di: int, dj: int, D: int) -> BezoutPair:
    """Bezout pair for ``(p_i, p_j)`` from the binomial identity of the exponents.

    The gcd is produced constructively as ``p_i*(1 - x**g) / (1 - x**dj)``,
    which already has leading coefficient +1.
    """
    pi, pj = build_p(di, D), build_p(dj, D)
    if di == dj:
        return BezoutPair(pi, pj, pi, PolyZ.constant(1), PolyZ())
    alpha, beta = binomial_bezout(di, dj)
    g = math.gcd(di, dj)
    G = exact_div(pi * PolyZ.binomial(g), PolyZ.binomial(dj))
    if G is None:
        raise CertificateError(f"1 - x^{dj} does not divide p_i*(1 - x^{g})")
    return BezoutPair(pi, pj, normalize(G), beta, alpha).normalized(POLYZ)


def theorem0_certificate(instance: DivisorInstance) -> CombinationCertificate:
    """Certificate ``gcd(p_1, ..., p_n) == sum(w_i * p_i)`` over Z[x]."""
    ds = instance.divisors
    return combine_n(instance.polynomials, POLYZ, lambda i, j: pairwise_witness(ds[i], ds[j], instance.D))


def _binomial_lcm(divisors) -> PolyZ:
    """lcm of ``1 - x**d`` over ``divisors``, up to sign, by inclusion-exclusion.

    ``lcm = prod over nonempty subsets T of (1 - x**gcd(T)) ** (-1)**(|T|+1)``;
    the signed exponents are accumulated per gcd value, so the cost is
    linear in the number of distinct gcds rather than in 2**n.
    """
    counts: dict[int, int] = {}
    for d in set(divisors):
        update = dict(counts)
        update[d] = update.get(d, 0) + 1
        for m, c in counts.items():
            k = math.gcd(m, d)
            update[k] = update.get(k, 0) - c
        counts = update
    result = PolyZ.constant(1)
    for m, c in sorted(counts.items()):
        for _ in range(c):
            result = result * PolyZ.binomial(m)
    for m, c in sorted(counts.items()):
        for _ in range(-c):
            q = exact_div(result, PolyZ.binomial(m))
            if q is None:
                raise OracleDisagreement(f"inclusion-exclusion lcm is not divisible by 1 - x^{m}")
            result = q
    return result


def gcd_oracle(instance: DivisorInstance) -> PolyZ:
    """``gcd(p_1, ..., p_n)`` computed two independent ways, which must agree.

    One route folds the remainder-sequence gcd over the polynomials; the
    other divides ``1 - x**D`` by the lcm of the binomials ``1 - x**d_i``.
    """
    by_prs = POLYZ.gcd_all(instance.polynomials)
    quotient = exact_div(PolyZ.binomial(instance.D), _binomial_lcm(instance.divisors))
    if quotient is None:
        raise OracleDisagreement("lcm of the binomials does not divide 1 - x^D")
    by_lcm = normalize(quotient)
    if by_prs != by_lcm:
        raise OracleDisagreement(f"PRS gcd {by_prs} differs from lcm route {by_lcm}")
    return by_prs


def subset_witness(instance: DivisorInstance):
    """Principal-sum witnesses for subsets of the family, from sub-instance certificates."""
    ds = instance.divisors

    def fetch(idx) -> PrincipalSumWitness:
        sub = DivisorInstance(instance.D, tuple(ds[i] for i in idx))
        cert = theorem0_certificate(sub)
        mult = tuple(POLYZ.require_div(p, cert.gcd) for p in cert.elements)
        return PrincipalSumWitness(cert.elements, cert.gcd, cert.coefficients, mult)

    return fetch


def theorem0_products(instance: DivisorInstance) -> SumProductsCertificate:
    """Sum-of-products certificate for a family with at least two members."""
    return sum_of_products(instance.polynomials, subset_witness(instance), POLYZ)
