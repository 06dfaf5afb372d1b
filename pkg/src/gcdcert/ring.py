"""Ring adapter contract and the witness types shared by the engines.

A ring adapter bundles exact arithmetic for one concrete ring.  Elements are
plain immutable Python values (``int`` or :class:`~gcdcert.polyz.PolyZ`); the
adapter supplies everything the engines need to manipulate them, so the same
combination and ideal-product code runs over both rings.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence


class CertificateError(Exception):
    """Base class for failures while building a certificate."""


class WitnessError(CertificateError):
    """A supplied or derived witness does not satisfy its identities."""


class MissingWitnessError(WitnessError):
    """No Bezout witness is available for a requested pair."""

    def __init__(self, pair, message=None):
        self.pair = tuple(pair)
        super().__init__(message or f"no Bezout witness for pair {self.pair}")


class DivisionError(CertificateError):
    """An exact division that must succeed did not.

    Raised when inputs break the unique-factorization assumptions or a
    normalization convention is inconsistent; never a data condition.
    """


class RingAdapter(abc.ABC):
    """Exact arithmetic, exact division, gcd and normalization for one ring."""

    name: str = "abstract"

    @property
    @abc.abstractmethod
    def zero(self) -> Any: ...

    @property
    @abc.abstractmethod
    def one(self) -> Any: ...

    @abc.abstractmethod
    def add(self, a, b): ...

    @abc.abstractmethod
    def mul(self, a, b): ...

    @abc.abstractmethod
    def neg(self, a): ...

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def equals(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.equals(a, self.zero)

    @abc.abstractmethod
    def exact_div(self, a, b) -> Optional[Any]:
        """Return ``c`` with ``b*c == a``, or ``None`` if ``b`` does not divide ``a``.

        Raises ``ZeroDivisionError`` when ``b`` is zero.
        """

    def gcd(self, a, b):
        raise NotImplementedError(f"{self.name} ring does not provide gcd")

    @abc.abstractmethod
    def normalize(self, a): ...

    def bezout(self, a, b) -> "BezoutPair":
        """Bezout witness for ``(a, b)``; only rings with an algorithm provide it."""
        raise MissingWitnessError((a, b), f"{self.name} ring cannot synthesize Bezout witnesses")

    def normalizing_unit(self, a):
        """The unit ``e`` with ``e*a == normalize(a)`` (``one`` for zero)."""
        if self.is_zero(a):
            return self.one
        e = self.exact_div(self.normalize(a), a)
        if e is None:
            raise DivisionError(f"normalize({a!r}) is not an associate of it")
        return e

    def divides(self, a, b) -> bool:
        """True if ``a`` divides ``b``; zero divides only zero."""
        if self.is_zero(a):
            return self.is_zero(b)
        return self.exact_div(b, a) is not None

    def associated(self, a, b) -> bool:
        return self.equals(self.normalize(a), self.normalize(b))

    def dot(self, coeffs: Iterable, elems: Iterable):
        """``sum(c*e)`` over paired sequences."""
        total = self.zero
        for c, e in zip(coeffs, elems, strict=True):
            total = self.add(total, self.mul(c, e))
        return total

    def prod(self, elems: Iterable):
        total = self.one
        for e in elems:
            total = self.mul(total, e)
        return total

    def gcd_all(self, elems: Iterable):
        g = self.zero
        for e in elems:
            g = self.gcd(g, e)
        return g

    def require_div(self, a, b):
        """Exact division that must succeed."""
        c = self.exact_div(a, b)
        if c is None:
            raise DivisionError(f"{b!r} does not divide {a!r}")
        return c

    # serialization hooks used by gcdcert.serialize
    @abc.abstractmethod
    def to_json(self, a) -> Any: ...

    @abc.abstractmethod
    def from_json(self, obj) -> Any: ...


@dataclass(frozen=True)
class BezoutPair:
    """``u*a + v*b == g`` with ``g`` the normalized gcd of ``a`` and ``b``."""

    a: Any
    b: Any
    g: Any
    u: Any
    v: Any

    def swapped(self) -> "BezoutPair":
        return BezoutPair(self.b, self.a, self.g, self.v, self.u)

    def normalized(self, ring: RingAdapter) -> "BezoutPair":
        """Rescale by a unit so that ``g`` is the normalized associate."""
        e = ring.normalizing_unit(self.g)
        if ring.equals(e, ring.one):
            return self
        return BezoutPair(self.a, self.b, ring.mul(e, self.g), ring.mul(e, self.u), ring.mul(e, self.v))


def bezout_failures(pair: BezoutPair, ring: RingAdapter) -> list[str]:
    failures = []
    if not ring.equals(ring.add(ring.mul(pair.u, pair.a), ring.mul(pair.v, pair.b)), pair.g):
        failures.append("combination_identity")
    if not (ring.divides(pair.g, pair.a) and ring.divides(pair.g, pair.b)):
        failures.append("gcd_divides_elements")
    if not ring.equals(ring.normalize(pair.g), pair.g):
        failures.append("gcd_normalized")
    return failures


def verify_bezout(pair: BezoutPair, ring: RingAdapter) -> bool:
    """Check ``u*a + v*b == g``, ``g | a``, ``g | b`` and ``g`` normalized.

    A common divisor that is also a combination of ``a`` and ``b`` is
    necessarily their gcd, so these three checks certify ``g`` completely.
    """
    return not bezout_failures(pair, ring)


def pair_from_coefficients(a, b, u, v, ring: RingAdapter) -> BezoutPair:
    """Build a normalized, verified pair from bare coefficients ``u, v``."""
    g = ring.add(ring.mul(u, a), ring.mul(v, b))
    pair = BezoutPair(a, b, g, u, v).normalized(ring)
    failures = bezout_failures(pair, ring)
    if failures:
        raise WitnessError(f"invalid Bezout witness for ({a!r}, {b!r}): {', '.join(failures)}")
    return pair


def check_pair(pair: BezoutPair, a, b, ring: RingAdapter) -> BezoutPair:
    """Validate ``pair`` against ``(a, b)``, returning it normalized."""
    if not (ring.equals(pair.a, a) and ring.equals(pair.b, b)):
        if ring.equals(pair.a, b) and ring.equals(pair.b, a):
            pair = pair.swapped()
        else:
            raise WitnessError(f"witness is for ({pair.a!r}, {pair.b!r}), not ({a!r}, {b!r})")
    pair = pair.normalized(ring)
    failures = bezout_failures(pair, ring)
    if failures:
        raise WitnessError(f"invalid Bezout witness for ({a!r}, {b!r}): {', '.join(failures)}")
    return pair


def lincomb_equals(ring: RingAdapter, coeffs: Sequence, elems: Sequence, target) -> bool:
    if len(coeffs) != len(elems):
        return False
    return ring.equals(ring.dot(coeffs, elems), target)
