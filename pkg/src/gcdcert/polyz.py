"""Univariate polynomials with integer coefficients.

Polynomials are dense and immutable; ``coeffs[k]`` is the coefficient of
``x**k`` and the leading coefficient is never zero (the zero polynomial has
no coefficients).  The units of Z[x] are +1 and -1, so the normalized
associate of a polynomial is the one with positive leading coefficient.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional

from .ring import BezoutPair, RingAdapter


class PolyZ:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "PolyZ":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "PolyZ":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def binomial(cls, a: int) -> "PolyZ":
        """``1 - x**a``."""
        if a < 1:
            raise ValueError(f"exponent must be positive, got {a}")
        return cls([1] + [0] * (a - 1) + [-1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PolyZ):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == PolyZ.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __neg__(self):
        return PolyZ(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = PolyZ.constant(other)
        if not isinstance(other, PolyZ):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyZ(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = PolyZ.constant(other)
        if not isinstance(other, PolyZ):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyZ(other * c for c in self.coeffs)
        if not isinstance(other, PolyZ):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyZ()
        # iterate over the sparser factor
        if sum(1 for c in a if c) > sum(1 for c in b if c):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return PolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "PolyZ":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return PolyZ([0] * k + list(self.coeffs))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"PolyZ({list(self.coeffs)})"


ZERO = PolyZ()
ONE = PolyZ((1,))
X = PolyZ((0, 1))


def content(p: PolyZ) -> int:
    return math.gcd(*p.coeffs) if p.coeffs else 0


def primitive_part(p: PolyZ) -> PolyZ:
    """``p / content(p)`` with the sign chosen so the leading coefficient is positive."""
    if not p.coeffs:
        return p
    c = content(p)
    if p.lc < 0:
        c = -c
    return PolyZ(x // c for x in p.coeffs)


def normalize(p: PolyZ) -> PolyZ:
    return -p if p.lc < 0 else p


def exact_div(p: PolyZ, q: PolyZ) -> Optional[PolyZ]:
    """``p / q`` if the quotient lies in Z[x], else ``None``.

    >>> exact_div(PolyZ([1, 0, -1]), PolyZ([1, -1]))
    PolyZ([1, 1])
    """
    if not q.coeffs:
        raise ZeroDivisionError("exact_div by the zero polynomial")
    if not p.coeffs:
        return ZERO
    dp, dq = p.degree, q.degree
    if dp < dq:
        return None
    lead = q.lc
    terms = [(i, c) for i, c in enumerate(q.coeffs[:-1]) if c]
    rem = list(p.coeffs)
    quot = [0] * (dp - dq + 1)
    for k in range(dp - dq, -1, -1):
        c = rem[k + dq]
        if not c:
            continue
        qc, r = divmod(c, lead)
        if r:
            return None
        quot[k] = qc
        for i, qi in terms:
            rem[k + i] -= qc * qi
    if any(rem[:dq]):
        return None
    return PolyZ(quot)


def pseudo_rem(a: PolyZ, b: PolyZ) -> PolyZ:
    """Remainder of ``lc(b)**k * a`` by ``b``, computed without fractions."""
    if not b.coeffs:
        raise ZeroDivisionError("pseudo-remainder by the zero polynomial")
    db, lb = b.degree, b.lc
    bc = b.coeffs
    r = list(a.coeffs)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(bc):
            r[shift + i] -= lr * c
        while r and r[-1] == 0:
            r.pop()
    return PolyZ(r)


def gcd(p: PolyZ, q: PolyZ) -> PolyZ:
    """Gcd in Z[x] by the primitive remainder sequence, positive leading coefficient.

    >>> print(gcd(PolyZ([-1, 0, 1]), PolyZ([-1, 0, 0, 1])))
    -1 + x
    """
    if not p.coeffs:
        return normalize(q)
    if not q.coeffs:
        return normalize(p)
    c = math.gcd(content(p), content(q))
    a, b = primitive_part(p), primitive_part(q)
    if a.degree < b.degree:
        a, b = b, a
    while b.coeffs:
        a, b = b, primitive_part(pseudo_rem(a, b))
    return a * c


def geometric(step: int, count: int) -> PolyZ:
    """``1 + x**step + ... + x**((count-1)*step)``."""
    if step < 1 or count < 0:
        raise ValueError("step must be positive and count nonnegative")
    out = [0] * ((count - 1) * step + 1) if count else []
    for k in range(count):
        out[k * step] = 1
    return PolyZ(out)


def binomial_bezout(a: int, b: int) -> tuple[PolyZ, PolyZ]:
    """``(u, v)`` with ``u*(1 - x**a) + v*(1 - x**b) == 1 - x**gcd(a, b)``.

    Euclid on the exponents.  Writing ``a = q*b + r`` gives
    ``1 - x**r = (1 - x**a) - x**r * (1 + x**b + ... + x**((q-1)*b)) * (1 - x**b)``,
    so each reduction step stays inside Z[x].  The reduction stops as soon as
    one exponent equals the gcd.

    >>> binomial_bezout(2, 3)
    (PolyZ([0, -1]), PolyZ([1]))
    """
    if a < 1 or b < 1:
        raise ValueError(f"exponents must be positive, got ({a}, {b})")
    g = math.gcd(a, b)
    steps = []
    while a != g and b != g:
        if a > b:
            q, r = divmod(a, b)
            steps.append((True, r, b, q))
            a = r
        else:
            q, r = divmod(b, a)
            steps.append((False, r, a, q))
            b = r
    u, v = (ONE, ZERO) if a == g else (ZERO, ONE)
    for reduced_a, r, step, q in reversed(steps):
        t = geometric(step, q).shift(r)
        if reduced_a:
            v = v - u * t
        else:
            u = u - v * t
    return u, v


def binomial_pair(a: int, b: int) -> BezoutPair:
    """Normalized Bezout pair over ``(1 - x**a, 1 - x**b)``; its gcd is ``x**g - 1``."""
    u, v = binomial_bezout(a, b)
    g = math.gcd(a, b)
    return BezoutPair(PolyZ.binomial(a), PolyZ.binomial(b), PolyZ.binomial(g), u, v).normalized(POLYZ)


class PolyZRing(RingAdapter):
    name = "polyz"

    @property
    def zero(self):
        return ZERO

    @property
    def one(self):
        return ONE

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
        return not a.coeffs

    def exact_div(self, a, b):
        return exact_div(a, b)

    def gcd(self, a, b):
        return gcd(a, b)

    def normalize(self, a):
        return normalize(a)

    def normalizing_unit(self, a):
        return PolyZ.constant(-1) if a.lc < 0 else ONE

    def to_json(self, a):
        return {"coeffs": [str(c) for c in a.coeffs]}

    def from_json(self, obj):
        if not isinstance(obj, dict) or not isinstance(obj.get("coeffs"), list):
            raise ValueError(f"expected a polynomial object with a 'coeffs' list, got {obj!r}")
        coeffs = []
        for c in obj["coeffs"]:
            if isinstance(c, bool) or not isinstance(c, (str, int)):
                raise ValueError(f"coefficient must be a decimal string, got {c!r}")
            coeffs.append(int(c))
        if coeffs and coeffs[-1] == 0:
            raise ValueError("polynomial coefficients must not have trailing zeros")
        return PolyZ(coeffs)


POLYZ = PolyZRing()
