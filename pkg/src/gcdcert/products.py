"""Principal-ideal intersections and sums of (n-1)-fold products.

Everything here is witness bookkeeping: every generator comes with explicit
coefficients expressing it from the inputs, and explicit multipliers
expressing the inputs from it.  Over a ring where every finite subset of
``p_1, ..., p_n`` generates a principal ideal, the ideal generated by the
``n`` products ``prod_{j != i} p_j`` is principal too, and
:func:`sum_of_products` builds both directions of that equality.

The construction recurses on ``F = <p_1, p_2>`` and the two smaller sums
``S1 = S(p_1, p_3, ..., p_n)``, ``S2 = S(p_2, p_3, ..., p_n)``: their
intersection ``M`` is principal because ``S1 + S2 = S(f, p_3, ..., p_n)``
is, and the full sum equals ``F * M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .integers import INT, ext_gcd
from .ring import CertificateError, RingAdapter, WitnessError


@dataclass(frozen=True)
class LemmaWitness:
    """``d == a*u + b*v``, ``a == p*d``, ``b == q*d``: so ``<a> + <b> == <d>``."""

    a: Any
    b: Any
    d: Any
    u: Any
    v: Any
    p: Any
    q: Any


@dataclass(frozen=True)
class PrincipalSumWitness:
    """Two-sided proof that ``<a_1, ..., a_k> == <g>``.

    ``sum(c_i * a_i) == g`` and ``a_i == m_i * g``.
    """

    generators: tuple
    generator: Any
    combination: tuple
    multipliers: tuple


@dataclass(frozen=True)
class SumProductsCertificate:
    inputs: tuple
    products: tuple
    witness: PrincipalSumWitness


SubsetWitness = Callable[[tuple], PrincipalSumWitness]


def lemma_failures(w: LemmaWitness, ring: RingAdapter) -> list[str]:
    failures = []
    if not ring.equals(ring.add(ring.mul(w.a, w.u), ring.mul(w.b, w.v)), w.d):
        failures.append("sum_identity")
    if not ring.equals(ring.mul(w.p, w.d), w.a):
        failures.append("a_factorization")
    if not ring.equals(ring.mul(w.q, w.d), w.b):
        failures.append("b_factorization")
    return failures


def intersect_principal(w: LemmaWitness, ring: RingAdapter):
    """Generator ``m = p*q*d`` of ``<a> ∩ <b>``; it satisfies ``m*d == a*b``."""
    failures = lemma_failures(w, ring)
    if failures:
        raise WitnessError(f"invalid intersection witness: {', '.join(failures)}")
    return ring.prod((w.p, w.q, w.d))


def intersection_multiplier(w: LemmaWitness, s, t, ring: RingAdapter):
    """For ``x == a*s == b*t`` return ``r`` with ``x == r * (p*q*d)``.

    ``x = p*d*s = p*(a*u + b*v)*s = p*u*(b*t) + p*v*s*b = p*q*d*(t*u + v*s)``.
    """
    return ring.add(ring.mul(t, w.u), ring.mul(w.v, s))


def principal_sum_failures(w: PrincipalSumWitness, ring: RingAdapter) -> list[str]:
    k = len(w.generators)
    if len(w.combination) != k or len(w.multipliers) != k:
        return ["shape"]
    failures = []
    if not ring.equals(ring.dot(w.combination, w.generators), w.generator):
        failures.append("combination_identity")
    if not all(ring.equals(ring.mul(m, w.generator), a) for m, a in zip(w.multipliers, w.generators)):
        failures.append("multipliers")
    return failures


def int_subset_witness(values: Sequence[int]) -> PrincipalSumWitness:
    """Gcd witness for a nonempty tuple of integers by folded extended Euclid.

    >>> w = int_subset_witness((4, 6))
    >>> (w.generator, w.combination, w.multipliers)
    (2, (-1, 1), (2, 3))
    """
    values = tuple(values)
    if not values:
        raise ValueError("empty subset")
    first = ext_gcd(values[0], 0)
    g, comb = first.g, [first.u]
    for a in values[1:]:
        step = ext_gcd(g, a)
        comb = [step.u * c for c in comb] + [step.v]
        g = step.g
    mult = tuple(a // g if g else 0 for a in values)
    return PrincipalSumWitness(values, g, tuple(comb), mult)


def _checked(w: PrincipalSumWitness, elems: tuple, ring: RingAdapter) -> PrincipalSumWitness:
    if len(w.generators) != len(elems) or not all(ring.equals(a, b) for a, b in zip(w.generators, elems)):
        raise WitnessError(f"subset witness generators {w.generators!r} do not match {elems!r}")
    failures = principal_sum_failures(w, ring)
    if failures:
        raise WitnessError(f"invalid subset witness for {elems!r}: {', '.join(failures)}")
    return w


class _SubsetSource:
    """Memoized, validated subset witnesses for one working tuple."""

    def __init__(self, elements: tuple, fetch: SubsetWitness, ring: RingAdapter):
        self.elements = elements
        self.fetch = fetch
        self.ring = ring
        self._cache: dict[tuple, PrincipalSumWitness] = {}

    def __call__(self, idx) -> PrincipalSumWitness:
        key = tuple(sorted(set(idx)))
        if not key:
            raise ValueError("empty subset")
        w = self._cache.get(key)
        if w is None:
            w = self.fetch(key)
            if w is None:
                raise WitnessError(f"no principal-sum witness for subset {key}")
            w = _checked(w, tuple(self.elements[i] for i in key), self.ring)
            self._cache[key] = w
        return w

    def restrict(self, mapping: Sequence[int], elements: tuple) -> "_SubsetSource":
        """Source for ``elements[k] == self.elements[mapping[k]]``; ``mapping`` is increasing."""

        def fetch(key):
            parent = self(tuple(mapping[k] for k in key))
            return PrincipalSumWitness(tuple(elements[k] for k in key), parent.generator,
                                       parent.combination, parent.multipliers)

        return _SubsetSource(elements, fetch, self.ring)


def _products(elems: tuple, ring: RingAdapter) -> tuple:
    return tuple(ring.prod(elems[:i] + elems[i + 1:]) for i in range(len(elems)))


def _sum_of_products(elems: tuple, source: _SubsetSource, ring: RingAdapter):
    """Return ``(g, combination, multipliers)`` over the ``n`` products of ``elems``."""
    n = len(elems)
    if n == 2:
        w = source((0, 1))
        # products are (p_2, p_1)
        return w.generator, (w.combination[1], w.combination[0]), (w.multipliers[1], w.multipliers[0])

    wf = source((0, 1))
    f = wf.generator
    alpha1, alpha2 = wf.combination
    mu1, mu2 = wf.multipliers
    rest = list(range(2, n))

    g1, c1, m1 = _sum_of_products((elems[0],) + elems[2:], source.restrict([0] + rest, (elems[0],) + elems[2:]), ring)
    g2, c2, m2 = _sum_of_products((elems[1],) + elems[2:], source.restrict([1] + rest, (elems[1],) + elems[2:]), ring)

    f_elems = (f,) + elems[2:]

    def f_fetch(key):
        # witnesses over (f, p_3, ..., p_n) come from witnesses over (p_1, p_2, p_3, ..., p_n)
        if key[0] != 0:
            parent = source(tuple(k + 1 for k in key))
            return PrincipalSumWitness(tuple(f_elems[k] for k in key), parent.generator,
                                       parent.combination, parent.multipliers)
        parent = source((0, 1) + tuple(k + 1 for k in key[1:]))
        c_p1, c_p2 = parent.combination[:2]
        n_p1, n_p2 = parent.multipliers[:2]
        comb = (ring.add(ring.mul(c_p1, mu1), ring.mul(c_p2, mu2)),) + parent.combination[2:]
        mult = (ring.add(ring.mul(alpha1, n_p1), ring.mul(alpha2, n_p2)),) + parent.multipliers[2:]
        return PrincipalSumWitness(tuple(f_elems[k] for k in key), parent.generator, comb, mult)

    gf, cf, mf = _sum_of_products(f_elems, _SubsetSource(f_elems, f_fetch, ring), ring)

    # Products of (f, p_3..): index 0 is Q = p_3*...*p_n, index k >= 1 is f*R_k.
    # Q = m1[0]*g1, and f*R_k = alpha1*(p_1*R_k) + alpha2*(p_2*R_k) = alpha1*m1[k]*g1 + alpha2*m2[k]*g2.
    u = ring.mul(cf[0], m1[0])
    v = ring.zero
    for k in range(1, n - 1):
        u = ring.add(u, ring.prod((cf[k], alpha1, m1[k])))
        v = ring.add(v, ring.prod((cf[k], alpha2, m2[k])))
    # g1 = sum c1[k]*P1_k with P1_0 = Q = mf[0]*gf and P1_k = p_1*R_k = mu1*mf[k]*gf
    p = ring.mul(c1[0], mf[0])
    q = ring.mul(c2[0], mf[0])
    for k in range(1, n - 1):
        p = ring.add(p, ring.prod((c1[k], mu1, mf[k])))
        q = ring.add(q, ring.prod((c2[k], mu2, mf[k])))
    lemma = LemmaWitness(g1, g2, gf, u, v, p, q)
    m = intersect_principal(lemma, ring)
    g = ring.mul(f, m)

    # combination: f*m = alpha1*p_1*(p*g2) + alpha2*p_2*(q*g1)
    comb = [ring.zero] * n
    comb[1] = ring.add(comb[1], ring.prod((alpha1, p, c2[0])))
    comb[0] = ring.add(comb[0], ring.prod((alpha2, q, c1[0])))
    for k in range(1, n - 1):
        comb[k + 1] = ring.add(comb[k + 1], ring.prod((alpha1, p, c2[k])))
        comb[k + 1] = ring.add(comb[k + 1], ring.prod((alpha2, q, c1[k])))

    # multipliers: Q lies in both S1 and S2, hence in M; p_1*p_2*R_k = f*(mu1*mu2*f*R_k) and
    # mu1*mu2*f*R_k = mu2*m1[k]*g1 = mu1*m2[k]*g2 lies in M as well.
    tau0 = intersection_multiplier(lemma, m1[0], m2[0], ring)
    mult = [ring.mul(mu2, tau0), ring.mul(mu1, tau0)]
    for k in range(1, n - 1):
        mult.append(intersection_multiplier(lemma, ring.mul(mu2, m1[k]), ring.mul(mu1, m2[k]), ring))
    return g, tuple(comb), tuple(mult)


def sum_of_products(elements, subset_witness: SubsetWitness, ring: RingAdapter) -> SumProductsCertificate:
    """Certificate that the ``n`` products ``prod_{j != i} p_j`` generate a principal ideal.

    ``subset_witness(idx)`` receives a sorted tuple of 0-based indices and
    returns a :class:`PrincipalSumWitness` whose generators are the
    corresponding elements in that order.  The final generator is rescaled
    to its normalized associate.
    """
    elems = tuple(elements)
    if len(elems) < 2:
        raise ValueError("sum_of_products needs at least two elements")
    source = _SubsetSource(elems, subset_witness, ring)
    g, comb, mult = _sum_of_products(elems, source, ring)
    if not ring.is_zero(g):
        e = ring.normalizing_unit(g)
        e_inv = ring.require_div(ring.one, e)
        g = ring.mul(e, g)
        comb = tuple(ring.mul(e, c) for c in comb)
        mult = tuple(ring.mul(e_inv, m) for m in mult)
    else:
        mult = tuple(ring.zero for _ in mult)
    products = _products(elems, ring)
    cert = SumProductsCertificate(elems, products, PrincipalSumWitness(products, g, comb, mult))
    failures = sum_products_failures(cert, ring)
    if failures:
        raise CertificateError(f"sum-of-products certificate failed self-check: {', '.join(failures)}")
    return cert


def sum_products_failures(cert: SumProductsCertificate, ring: RingAdapter) -> list[str]:
    failures = []
    if len(cert.inputs) < 2 or len(cert.products) != len(cert.inputs):
        return ["shape"]
    if not all(ring.equals(a, b) for a, b in zip(cert.products, _products(cert.inputs, ring))):
        failures.append("products")
    if not all(ring.equals(a, b) for a, b in zip(cert.witness.generators, cert.products)):
        failures.append("products")
    failures.extend(principal_sum_failures(cert.witness, ring))
    return failures


def verify_sum_products(cert: SumProductsCertificate, ring: RingAdapter) -> bool:
    return not sum_products_failures(cert, ring)


def int_sum_of_products(values: Sequence[int]) -> SumProductsCertificate:
    values = tuple(values)
    return sum_of_products(values, lambda idx: int_subset_witness(tuple(values[i] for i in idx)), INT)
