"""Express the gcd of several elements as a linear combination of them.

Over a UFD, if every pair ``(p_i, p_j)`` has a Bezout witness then so does
the whole tuple.  The three-element case has a closed form built from the
pairwise witnesses and the cofactors ``e_i, f_i``; larger tuples merge their
last two elements into their gcd and recurse, synthesizing the witnesses the
smaller problem needs from three-element certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .ring import (
    BezoutPair,
    CertificateError,
    MissingWitnessError,
    RingAdapter,
    check_pair,
    pair_from_coefficients,
)

WitnessProvider = Callable[[int, int], Optional[BezoutPair]]


@dataclass(frozen=True)
class CombinationCertificate:
    """``sum(w_i * p_i) == d`` where ``d`` is the normalized gcd of the ``p_i``."""

    elements: tuple
    gcd: Any
    coefficients: tuple


@dataclass(frozen=True)
class Combine3Trace:
    """Intermediate quantities of the three-element construction.

    ``gcd(p_{i+1}, p_{i+2}) == d*e_i`` and ``p_i == d*e_{i+1}*e_{i+2}*f_i``
    with indices taken cyclically; ``u[(i, j)]`` is the coefficient of
    ``p_i`` in the witness for the pair ``{i, j}`` (1-based).
    """

    elements: tuple
    d: Any
    e: tuple
    f: tuple
    u: dict = field(compare=False)


class _PairSource:
    """Validated, memoized Bezout pairs for one working tuple."""

    def __init__(self, elements: tuple, fetch: WitnessProvider, ring: RingAdapter):
        self.elements = elements
        self.fetch = fetch
        self.ring = ring
        self._cache: dict[tuple[int, int], BezoutPair] = {}

    def __call__(self, i: int, j: int) -> BezoutPair:
        if i > j:
            return self(j, i).swapped()
        key = (i, j)
        pair = self._cache.get(key)
        if pair is None:
            pair = self.fetch(i, j)
            if pair is None:
                raise MissingWitnessError(key)
            pair = check_pair(pair, self.elements[i], self.elements[j], self.ring)
            self._cache[key] = pair
        return pair


def combine2(a, b, w: BezoutPair, ring: RingAdapter) -> CombinationCertificate:
    pair = check_pair(w, a, b, ring)
    return CombinationCertificate((a, b), pair.g, (pair.u, pair.v))


def _combine3(elems: tuple, p12: BezoutPair, p13: BezoutPair, p23: BezoutPair, ring: RingAdapter):
    p1, p2, p3 = elems
    u12, u21 = p12.u, p12.v
    u13, u31 = p13.u, p13.v
    u23, u32 = p23.u, p23.v
    d = ring.gcd(p12.g, p3)
    e1 = ring.require_div(p23.g, d)
    e2 = ring.require_div(p13.g, d)
    e3 = ring.require_div(p12.g, d)
    f1 = ring.require_div(p1, ring.prod((d, e2, e3)))
    f2 = ring.require_div(p2, ring.prod((d, e1, e3)))
    f3 = ring.require_div(p3, ring.prod((d, e1, e2)))
    w1 = ring.prod((u12, u13, f1))
    w2 = ring.prod((u21, u23, f2))
    w3 = ring.add(ring.prod((u12, u31, f1)), ring.prod((u21, u32, f2)))
    cert = CombinationCertificate(elems, d, (w1, w2, w3))
    if not ring.equals(ring.dot(cert.coefficients, elems), d):
        raise CertificateError("three-element combination does not reproduce the gcd")
    u = {(1, 2): u12, (2, 1): u21, (1, 3): u13, (3, 1): u31, (2, 3): u23, (3, 2): u32}
    return cert, Combine3Trace(elems, d, (e1, e2, e3), (f1, f2, f3), u)


def combine3(p1, p2, p3, u12, u21, u13, u31, u23, u32, ring: RingAdapter):
    """Closed-form certificate for three nonzero elements.

    ``u_ij`` is the coefficient of ``p_i`` in the witness for ``{p_i, p_j}``.
    Each witness may produce its gcd up to a unit; it is rescaled to the
    normalized associate before use.  Returns ``(certificate, trace)``.
    """
    elems = (p1, p2, p3)
    if any(ring.is_zero(p) for p in elems):
        raise ValueError("combine3 requires nonzero elements")
    p12 = pair_from_coefficients(p1, p2, u12, u21, ring)
    p13 = pair_from_coefficients(p1, p3, u13, u31, ring)
    p23 = pair_from_coefficients(p2, p3, u23, u32, ring)
    return _combine3(elems, p12, p13, p23, ring)


def _combine(elems: tuple, pairs: _PairSource, ring: RingAdapter) -> CombinationCertificate:
    n = len(elems)
    if n == 1:
        p = elems[0]
        return CombinationCertificate(elems, ring.normalize(p), (ring.normalizing_unit(p),))
    if n == 2:
        pair = pairs(0, 1)
        return CombinationCertificate(elems, pair.g, (pair.u, pair.v))
    if n == 3:
        return _combine3(elems, pairs(0, 1), pairs(0, 2), pairs(1, 2), ring)[0]

    # merge the last two elements into their gcd g and recurse
    last = pairs(n - 2, n - 1)
    g = last.g
    s = ring.require_div(elems[n - 2], g)
    t = ring.require_div(elems[n - 1], g)
    reduced = elems[: n - 2] + (g,)

    def fetch(i, j):
        if j < n - 2:
            return pairs(i, j)
        # gcd(p_i, g) = gcd(p_i, p_{n-1}, p_n); fold the p_{n-1}, p_n terms into g
        cert3, _ = _combine3((elems[i], elems[n - 2], elems[n - 1]), pairs(i, n - 2), pairs(i, n - 1), last, ring)
        w1, w2, w3 = cert3.coefficients
        return BezoutPair(elems[i], g, cert3.gcd, w1, ring.add(ring.mul(w2, s), ring.mul(w3, t)))

    sub = _combine(reduced, _PairSource(reduced, fetch, ring), ring)
    w = sub.coefficients
    coeffs = w[: n - 2] + (ring.mul(w[-1], last.u), ring.mul(w[-1], last.v))
    return CombinationCertificate(elems, sub.gcd, coeffs)


def combine_n(elements, ring: RingAdapter, witness: Optional[WitnessProvider] = None) -> CombinationCertificate:
    """Certificate for ``gcd(p_1, ..., p_n)``.

    ``witness(i, j)`` (with ``i < j``, 0-based) must return a Bezout pair for
    ``(elements[i], elements[j])``, or ``None`` if it has none.  Without a
    provider the ring's own ``bezout`` is used, which only the integer ring
    implements.  Zero elements are rejected.
    """
    elems = tuple(elements)
    if not elems:
        raise ValueError("combine_n needs at least one element")
    if any(ring.is_zero(p) for p in elems):
        raise ValueError("zero elements are not allowed; drop them before combining")
    if witness is None:
        def witness(i, j):
            return ring.bezout(elems[i], elems[j])
    return _combine(elems, _PairSource(elems, witness, ring), ring)


def certificate_failures(cert: CombinationCertificate, ring: RingAdapter) -> list[str]:
    """Names of the certificate invariants that do not hold."""
    elems, d, w = cert.elements, cert.gcd, cert.coefficients
    if not elems or len(elems) != len(w):
        return ["shape"]
    failures = []
    if not ring.equals(ring.dot(w, elems), d):
        failures.append("combination_identity")
    if not all(ring.divides(d, p) for p in elems):
        failures.append("gcd_divides_elements")
    if not ring.equals(ring.normalize(d), d):
        failures.append("gcd_normalized")
    if not ring.equals(ring.gcd_all(elems), d):
        failures.append("gcd_matches_recomputed")
    return failures


def verify_certificate(cert: CombinationCertificate, ring: RingAdapter) -> bool:
    return not certificate_failures(cert, ring)


def trace_failures(trace: Combine3Trace, ring: RingAdapter) -> list[str]:
    """Check the coprimality and unit identities that the closed form relies on."""
    failures = []
    d, e, f, u = trace.d, trace.e, trace.f, trace.u
    p = trace.elements
    one = ring.one
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        if not ring.equals(ring.prod((d, e[j], e[k], f[i])), p[i]):
            failures.append(f"cofactor_{i + 1}")
        if not ring.equals(ring.normalize(ring.gcd(e[i], e[j])), one):
            failures.append(f"coprime_{i + 1}{j + 1}")
        # u_{i,i+1} e_{i+1} f_i + u_{i+1,i} e_i f_{i+1} == 1
        a, b = i + 1, j + 1
        lhs = ring.add(ring.prod((u[(a, b)], e[j], f[i])), ring.prod((u[(b, a)], e[i], f[j])))
        if not ring.equals(lhs, one):
            failures.append(f"unit_identity_{a}")
    return failures
