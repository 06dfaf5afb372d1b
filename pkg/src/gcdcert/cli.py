"""Command-line front end.

Exit status is 0 on success, 1 when a certificate fails verification (or an
internal consistency check trips), and 2 for malformed or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combine import certificate_failures, combine_n
from .cyclo import DivisorInstance, InvalidInstanceError, gcd_oracle, theorem0_certificate, theorem0_products
from .integers import INT
from .products import int_sum_of_products, sum_products_failures
from .ring import CertificateError, WitnessError
from .serialize import (
    FormatError,
    combination_to_json,
    dumps,
    instance_from_json,
    load_certificate,
    parse_elements,
    products_to_json,
    ring_by_name,
    witnesses_from_json,
)

MAX_D = 10_000

OK, VERIFY_FAILED, BAD_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, failures):
        self.failures = failures
        super().__init__("certificate failed self-verification: " + ", ".join(failures))


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _emit(obj, output):
    text = dumps(obj)
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _instance(args) -> DivisorInstance:
    if args.file:
        inst = instance_from_json(_read_json(args.file))
    else:
        if args.D is None or args.d is None:
            raise UsageError("both -D and -d are required")
        inst = DivisorInstance(args.D, tuple(_int_list(args.d)))
    if inst.D > MAX_D:
        raise UsageError(f"D={inst.D} exceeds the limit {MAX_D}")
    return inst


def run_combine(args):
    if args.file:
        req = _read_json(args.file)
        if not isinstance(req, dict):
            raise FormatError("combine request must be a JSON object")
        ring = ring_by_name(req.get("ring", args.ring))
        elements = parse_elements(ring, req.get("elements", []), "elements")
        raw_witnesses = req.get("witnesses")
    else:
        ring = ring_by_name(args.ring)
        if ring is not INT:
            raise UsageError("polynomial elements must be given with --file")
        if args.elements is None:
            raise UsageError("--elements or --file is required")
        elements = tuple(_int_list(args.elements))
        raw_witnesses = None
    if not elements:
        raise UsageError("no elements given")

    if raw_witnesses is not None:
        table = witnesses_from_json(raw_witnesses, elements, ring)
        provider = lambda i, j: table.get((i, j))  # noqa: E731
    elif ring is INT:
        provider = None
    elif len(elements) == 1:
        provider = lambda i, j: None  # noqa: E731
    else:
        raise UsageError("polynomial combine needs explicit 'witnesses'")

    cert = combine_n(elements, ring, provider)
    failures = certificate_failures(cert, ring)
    if failures:
        raise VerificationFailed(failures)
    _emit(combination_to_json(cert, ring), args.output)


def run_theorem0(args):
    inst = _instance(args)
    cert = theorem0_certificate(inst)
    failures = certificate_failures(cert, ring_by_name("polyz"))
    if cert.gcd != gcd_oracle(inst):
        failures.append("gcd_matches_oracle")
    if failures:
        raise VerificationFailed(failures)
    _emit(combination_to_json(cert, ring_by_name("polyz")), args.output)


def run_products(args):
    ring = ring_by_name(args.ring)
    if ring is INT:
        if args.elements is None:
            raise UsageError("--elements is required for --ring int")
        values = _int_list(args.elements)
        if len(values) < 2:
            raise UsageError("products needs at least two elements")
        cert = int_sum_of_products(values)
    else:
        inst = _instance(args)
        if len(inst.divisors) < 2:
            raise UsageError("products needs at least two divisors")
        cert = theorem0_products(inst)
    failures = sum_products_failures(cert, ring)
    if failures:
        raise VerificationFailed(failures)
    _emit(products_to_json(cert, ring), args.output)


def run_verify(args) -> int:
    obj = _read_json(args.path)
    kind, cert, ring = load_certificate(obj)
    if kind == "products":
        failures = sum_products_failures(cert, ring)
    else:
        failures = certificate_failures(cert, ring)
    report = {"kind": kind, "ring": ring.name, "valid": not failures, "failures": failures}
    sys.stdout.write(dumps(report))
    return OK if not failures else VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gcdcert", description="Build and check gcd and ideal certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("combine", help="certificate for gcd(p_1..p_n) as a linear combination")
    p.add_argument("--ring", choices=["int", "polyz"], default="int")
    p.add_argument("--elements", help="comma-separated integers")
    p.add_argument("--file", help="JSON request with 'ring', 'elements' and optional 'witnesses'")
    p.add_argument("-o", "--output")
    p.set_defaults(func=run_combine)

    p = sub.add_parser("theorem0", help="certificate for the family (1 - x^D)/(1 - x^d_i)")
    p.add_argument("-D", type=int)
    p.add_argument("-d", help="comma-separated divisors of D")
    p.add_argument("--file", help='JSON instance {"D": 12, "divisors": [2, 3, 4]}')
    p.add_argument("-o", "--output")
    p.set_defaults(func=run_theorem0)

    p = sub.add_parser("products", help="generator of the sum of (n-1)-fold products")
    p.add_argument("--ring", choices=["int", "polyz"], default="int")
    p.add_argument("--elements", help="comma-separated integers (int ring)")
    p.add_argument("-D", type=int)
    p.add_argument("-d", help="comma-separated divisors of D (polyz ring)")
    p.add_argument("--file", help="JSON instance (polyz ring)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=run_products)

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("path")
    p.set_defaults(func=run_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else BAD_INPUT
    try:
        return args.func(args) or OK
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VERIFY_FAILED
    except (UsageError, FormatError, InvalidInstanceError, WitnessError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except CertificateError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return VERIFY_FAILED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except Exception as exc:  # exit codes are restricted to 0/1/2
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
