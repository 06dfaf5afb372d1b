"""JSON forms of elements, certificates and instances.

Integers are always written as decimal strings; polynomials as
``{"coeffs": [c0, c1, ...]}`` in ascending degree without trailing zeros.
"""

from __future__ import annotations

import json

from .combine import CombinationCertificate
from .cyclo import DivisorInstance
from .integers import INT
from .polyz import POLYZ
from .products import PrincipalSumWitness, SumProductsCertificate
from .ring import BezoutPair, RingAdapter

RINGS = {"int": INT, "polyz": POLYZ}


class FormatError(ValueError):
    """Input JSON does not match the expected schema."""


def ring_by_name(name) -> RingAdapter:
    try:
        return RINGS[name]
    except (KeyError, TypeError):
        raise FormatError(f"unknown ring {name!r}; expected one of {sorted(RINGS)}") from None


def parse_elements(ring: RingAdapter, objs, what: str) -> tuple:
    if not isinstance(objs, list):
        raise FormatError(f"'{what}' must be a list")
    try:
        return tuple(ring.from_json(o) for o in objs)
    except ValueError as exc:
        raise FormatError(f"bad entry in '{what}': {exc}") from None


def _field(obj: dict, key: str):
    if not isinstance(obj, dict):
        raise FormatError("expected a JSON object")
    if key not in obj:
        raise FormatError(f"missing field '{key}'")
    return obj[key]


def combination_to_json(cert: CombinationCertificate, ring: RingAdapter) -> dict:
    return {
        "ring": ring.name,
        "elements": [ring.to_json(p) for p in cert.elements],
        "gcd": ring.to_json(cert.gcd),
        "coefficients": [ring.to_json(w) for w in cert.coefficients],
    }


def combination_from_json(obj: dict) -> tuple[CombinationCertificate, RingAdapter]:
    ring = ring_by_name(_field(obj, "ring"))
    elements = parse_elements(ring, _field(obj, "elements"), "elements")
    coefficients = parse_elements(ring, _field(obj, "coefficients"), "coefficients")
    gcd = parse_elements(ring, [_field(obj, "gcd")], "gcd")[0]
    return CombinationCertificate(elements, gcd, coefficients), ring


def products_to_json(cert: SumProductsCertificate, ring: RingAdapter) -> dict:
    w = cert.witness
    return {
        "ring": ring.name,
        "inputs": [ring.to_json(p) for p in cert.inputs],
        "products": [ring.to_json(p) for p in cert.products],
        "generator": ring.to_json(w.generator),
        "combination": [ring.to_json(c) for c in w.combination],
        "multipliers": [ring.to_json(m) for m in w.multipliers],
    }


def products_from_json(obj: dict) -> tuple[SumProductsCertificate, RingAdapter]:
    ring = ring_by_name(_field(obj, "ring"))
    inputs = parse_elements(ring, _field(obj, "inputs"), "inputs")
    products = parse_elements(ring, _field(obj, "products"), "products")
    generator = parse_elements(ring, [_field(obj, "generator")], "generator")[0]
    combination = parse_elements(ring, _field(obj, "combination"), "combination")
    multipliers = parse_elements(ring, _field(obj, "multipliers"), "multipliers")
    witness = PrincipalSumWitness(products, generator, combination, multipliers)
    return SumProductsCertificate(inputs, products, witness), ring


def load_certificate(obj) -> tuple[str, object, RingAdapter]:
    """Dispatch on the schema: returns ``(kind, certificate, ring)``."""
    if isinstance(obj, dict) and "products" in obj:
        cert, ring = products_from_json(obj)
        return "products", cert, ring
    if isinstance(obj, dict) and "coefficients" in obj:
        cert, ring = combination_from_json(obj)
        return "combination", cert, ring
    raise FormatError("not a combination or sum-of-products certificate")


def instance_from_json(obj) -> DivisorInstance:
    D = _field(obj, "D")
    divisors = _field(obj, "divisors")
    if not isinstance(divisors, list):
        raise FormatError("'divisors' must be a list")
    try:
        return DivisorInstance(int(D), tuple(int(d) for d in divisors))
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from None


def witnesses_from_json(objs, elements: tuple, ring: RingAdapter) -> dict:
    """``[{"pair": [i, j], "u": ..., "v": ...}]`` -> ``{(i, j): BezoutPair}`` with ``i < j``.

    ``u`` multiplies ``elements[i]`` and ``v`` multiplies ``elements[j]``.
    """
    if not isinstance(objs, list):
        raise FormatError("'witnesses' must be a list")
    out = {}
    for entry in objs:
        pair = _field(entry, "pair")
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(k, int) and 0 <= k < len(elements) for k in pair) or pair[0] == pair[1]):
            raise FormatError(f"bad witness pair {pair!r}")
        i, j = pair
        u, v = parse_elements(ring, [_field(entry, "u"), _field(entry, "v")], "witnesses")
        if i > j:
            i, j, u, v = j, i, v, u
        a, b = elements[i], elements[j]
        out[(i, j)] = BezoutPair(a, b, ring.add(ring.mul(u, a), ring.mul(v, b)), u, v)
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
