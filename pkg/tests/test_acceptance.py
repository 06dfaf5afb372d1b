"""Exit criteria: every identity is checked with exact arithmetic, zero tolerance."""

import itertools
import json
import math
import random
import time
from functools import reduce

from gcdcert import (
    INT, POLYZ, DivisorInstance, LemmaWitness, PolyZ, binomial_bezout, build_p, combine3, combine_n,
    divisors_of, ext_gcd, gcd_oracle, int_subset_witness, int_sum_of_products, intersect_principal,
    pairwise_witness, theorem0_certificate, trace_failures, verify_certificate, verify_sum_products,
)
from gcdcert.cli import main
from gcdcert.polyz import gcd as prs_gcd

THEOREM0_DS = (6, 12, 24, 30, 36, 60)


def report(n, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")
    assert ok, detail


def test_criterion_1_gcd_combination_over_integers():
    """criterion 1: 1000 random integer tuples, n in 2..8, certificates verify, under 10 s"""
    rng = random.Random(20121)
    tuples = [[rng.choice((-1, 1)) * rng.randint(1, 10**6) for _ in range(rng.randint(2, 8))] for _ in range(1000)]
    start = time.perf_counter()
    bad = 0
    for xs in tuples:
        cert = combine_n(xs, INT)
        if not (verify_certificate(cert, INT) and cert.gcd == reduce(math.gcd, xs)):
            bad += 1
    elapsed = time.perf_counter() - start
    report(1, bad == 0 and elapsed < 10.0, f"{1000 - bad}/1000 verified in {elapsed:.2f}s (limit 10s)")


def _witnesses(p1, p2, p3):
    w12, w13, w23 = ext_gcd(p1, p2), ext_gcd(p1, p3), ext_gcd(p2, p3)
    return w12.u, w12.v, w13.u, w13.v, w23.u, w23.v


def test_criterion_2_three_element_closed_form():
    """criterion 2: 500 triples, cofactors pairwise coprime and u_{i,i+1}e_{i+1}f_i + u_{i+1,i}e_if_{i+1} = 1"""
    rng = random.Random(2)
    bad = 0
    for k in range(500):
        if k % 2:
            triple = [rng.choice((-1, 1)) * rng.randint(1, 10**6) for _ in range(3)]
        else:
            # build in shared structure so that d and the e_i are nontrivial
            d = rng.randint(1, 50)
            e = [rng.randint(1, 40) for _ in range(3)]
            triple = [rng.choice((-1, 1)) * d * e[(i + 1) % 3] * e[(i + 2) % 3] * rng.randint(1, 30) for i in range(3)]
        cert, trace = combine3(*triple, *_witnesses(*triple), INT)
        if trace_failures(trace, INT) or not verify_certificate(cert, INT):
            bad += 1
    report(2, bad == 0, f"{500 - bad}/500 traces satisfy coprimality and the unit identity")


def test_criterion_3_hand_traced_instance():
    """criterion 3: (6, 10, 15) with the stated witnesses gives gcd 1 and coefficients (6, 1, -3)"""
    cert, trace = combine3(6, 10, 15, 2, -1, 3, -1, -1, 1, INT)
    ok = cert.gcd == 1 and cert.coefficients == (6, 1, -3) and trace.e == (5, 3, 2) and trace.f == (1, 1, 1)
    report(3, ok, f"gcd={cert.gcd} w={cert.coefficients} e={trace.e} f={trace.f}")


def test_criterion_4_principal_intersection():
    """criterion 4: intersection is +-lcm with m*d = a*b on 1000 pairs; Z[x] example gives +-(1+x-x^3-x^4)"""
    rng = random.Random(4)
    bad = 0
    for _ in range(1000):
        a, b = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        w = int_subset_witness((a, b))
        lw = LemmaWitness(a, b, w.generator, *w.combination, *w.multipliers)
        m = intersect_principal(lw, INT)
        if abs(m) != math.lcm(a, b) or m * lw.d != a * b:
            bad += 1
    a, b, d = PolyZ([1, 0, -1]), PolyZ([1, 0, 0, -1]), PolyZ([1, -1])
    m = intersect_principal(LemmaWitness(a, b, d, PolyZ([0, -1]), PolyZ([1]), PolyZ([1, 1]), PolyZ([1, 1, 1])), POLYZ)
    poly_ok = POLYZ.normalize(m) == POLYZ.normalize(PolyZ([1, 1, 0, -1, -1])) and m * d == a * b
    report(4, bad == 0 and poly_ok, f"{1000 - bad}/1000 integer pairs; Z[x] example m = {m}")


def test_criterion_5_sum_of_products_over_integers():
    """criterion 5: 500 tuples, generator is +-gcd of the (n-1)-fold products = prod/lcm, certificates verify"""
    rng = random.Random(5)
    bad = 0
    for _ in range(500):
        xs = [rng.randint(1, 10**4) for _ in range(rng.randint(2, 6))]
        cert = int_sum_of_products(xs)
        g = cert.witness.generator
        if not (verify_sum_products(cert, INT) and abs(g) == math.gcd(*cert.products) == math.prod(xs) // math.lcm(*xs)):
            bad += 1
    report(5, bad == 0, f"{500 - bad}/500 sum-of-products certificates")


def test_criterion_6_theorem0_sweep():
    """criterion 6: every divisor subset (n <= 6) of D in {6,12,24,30,36,60} verifies and matches the oracle, under 60 s"""
    start = time.perf_counter()
    count = bad = 0
    for D in THEOREM0_DS:
        ds = divisors_of(D)
        for n in range(1, 7):
            for sub in itertools.combinations(ds, n):
                inst = DivisorInstance(D, sub)
                cert = theorem0_certificate(inst)
                count += 1
                if not verify_certificate(cert, POLYZ) or cert.gcd != gcd_oracle(inst):
                    bad += 1
    elapsed = time.perf_counter() - start
    small = theorem0_certificate(DivisorInstance(6, (2, 3)))
    x = PolyZ([0, 1])
    small_ok = small.gcd == PolyZ([1, -1, 1]) and small.coefficients == (PolyZ([1]), -x)
    report(6, bad == 0 and small_ok and elapsed < 60.0,
           f"{count - bad}/{count} instances in {elapsed:.2f}s (limit 60s); D=6,(2,3): gcd {small.gcd}, w = ({', '.join(map(str, small.coefficients))})")


def test_criterion_7_polynomial_kernel():
    """criterion 7: binomial identity for 1 <= a,b <= 64; PRS gcd = constructive gcd on all family pairs; evaluation divisibility on 500 instances"""
    binom_bad = 0
    for a in range(1, 65):
        for b in range(1, 65):
            u, v = binomial_bezout(a, b)
            if u * PolyZ.binomial(a) + v * PolyZ.binomial(b) != PolyZ.binomial(math.gcd(a, b)):
                binom_bad += 1
    pair_bad = pairs = 0
    for D in THEOREM0_DS:
        for di, dj in itertools.combinations_with_replacement(divisors_of(D), 2):
            pairs += 1
            if pairwise_witness(di, dj, D).g != prs_gcd(build_p(di, D), build_p(dj, D)):
                pair_bad += 1
    rng = random.Random(7)
    eval_bad = 0
    for _ in range(500):
        p = PolyZ(rng.randint(-20, 20) for _ in range(rng.randint(0, 7)))
        q = PolyZ(rng.randint(-20, 20) for _ in range(rng.randint(0, 7)))
        c = PolyZ(rng.randint(-5, 5) for _ in range(rng.randint(1, 3)))
        p, q = p * c, q * c  # force nontrivial common factors
        n = rng.randint(-30, 30)
        gv, m = prs_gcd(p, q)(n), math.gcd(p(n), q(n))
        if (gv == 0 and m != 0) or (gv != 0 and m % gv):
            eval_bad += 1
    report(7, binom_bad == pair_bad == eval_bad == 0,
           f"binomial {4096 - binom_bad}/4096, PRS vs constructive {pairs - pair_bad}/{pairs}, evaluation {500 - eval_bad}/500")


def test_criterion_8_cli_round_trip(tmp_path, capsys):
    """criterion 8: emitted certificates re-verify (exit 0); tampered coefficient/gcd/multiplier give 1, truncation gives 2"""
    emits = {
        "combine": ["combine", "--ring", "int", "--elements", "30,42,70,105"],
        "combine1": ["combine", "--ring", "int", "--elements", "7"],
        "theorem0": ["theorem0", "-D", "12", "-d", "2,3,4"],
        "products_int": ["products", "--ring", "int", "--elements", "4,6,10"],
        "products_polyz": ["products", "--ring", "polyz", "-D", "6", "-d", "1,2,3"],
    }
    codes = {}
    for name, argv in emits.items():
        path = tmp_path / f"{name}.json"
        codes[name] = (main(argv + ["-o", str(path)]), main(["verify", str(path)]))
    round_trip_ok = all(c == (0, 0) for c in codes.values())

    def tampered(src, edit, name):
        obj = json.loads((tmp_path / src).read_text())
        edit(obj)
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return main(["verify", str(path)])

    def bump(value):
        if isinstance(value, dict):
            coeffs = list(value["coeffs"]) or ["0"]
            coeffs[0] = str(int(coeffs[0]) + 1)
            return {"coeffs": coeffs}
        return str(int(value) + 1)

    tamper = {
        "coefficient": tampered("combine.json", lambda o: o["coefficients"].__setitem__(0, bump(o["coefficients"][0])), "t1.json"),
        "coefficient_polyz": tampered("theorem0.json", lambda o: o["coefficients"].__setitem__(1, bump(o["coefficients"][1])), "t2.json"),
        "gcd": tampered("combine.json", lambda o: o.__setitem__("gcd", str(2 * int(o["gcd"]) + 1)), "t3.json"),
        "multiplier": tampered("products_int.json", lambda o: o["multipliers"].__setitem__(0, bump(o["multipliers"][0])), "t4.json"),
        "multiplier_polyz": tampered("products_polyz.json", lambda o: o["multipliers"].__setitem__(2, bump(o["multipliers"][2])), "t5.json"),
    }
    text = (tmp_path / "theorem0.json").read_text()
    (tmp_path / "trunc.json").write_text(text[: len(text) // 2])
    tamper["truncation"] = main(["verify", str(tmp_path / "trunc.json")])
    capsys.readouterr()
    expected = {"coefficient": 1, "coefficient_polyz": 1, "gcd": 1, "multiplier": 1, "multiplier_polyz": 1, "truncation": 2}
    report(8, round_trip_ok and tamper == expected, f"round trip {codes}; tamper exits {tamper}")
