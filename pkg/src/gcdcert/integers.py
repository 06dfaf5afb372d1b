"""The ring of integers, backed by Python's arbitrary-precision ``int``."""

from __future__ import annotations

import math
from typing import Optional

from .ring import BezoutPair, RingAdapter


def ext_gcd(a: int, b: int) -> BezoutPair:
    """Extended Euclid: ``u*a + v*b == g`` with ``g = gcd(a, b) >= 0``.

    The coefficients are the plain back-substitution output, not minimized.

    >>> p = ext_gcd(6, 10)
    >>> (p.g, p.u, p.v)
    (2, 2, -1)
    """
    old_r, r = abs(a), abs(b)
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    u = old_s if a >= 0 else -old_s
    v = old_t if b >= 0 else -old_t
    return BezoutPair(a, b, old_r, u, v)


def normalize(a: int) -> int:
    return abs(a)


class IntRing(RingAdapter):
    name = "int"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def equals(self, a, b):
        return a == b

    def is_zero(self, a):
        return a == 0

    def exact_div(self, a: int, b: int) -> Optional[int]:
        if b == 0:
            raise ZeroDivisionError("exact_div by zero")
        q, r = divmod(a, b)
        return q if r == 0 else None

    def gcd(self, a, b):
        return math.gcd(a, b)

    def normalize(self, a):
        return abs(a)

    def normalizing_unit(self, a):
        return -1 if a < 0 else 1

    def bezout(self, a, b):
        return ext_gcd(a, b)

    def to_json(self, a):
        return str(a)

    def from_json(self, obj):
        if isinstance(obj, bool) or not isinstance(obj, (str, int)):
            raise ValueError(f"expected a decimal integer string, got {obj!r}")
        return int(obj)


INT = IntRing()
