"""Acceptance criteria 1-9.

Each criterion prints one PASS/FAIL line.  Run under pytest (the lines are
repeated in the terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from gwa import (  # noqa: E402
    RatFunc,
    SkewRing,
    check_galois_generation,
    check_principal,
    check_simple_classical,
    check_simple_quantum,
    embed,
    f_projector,
    invariant_lattice,
    jw_fixed_ring,
    orbit_set,
    parse_element,
    preimage,
    support,
    symmetric_wgroup,
)
from gwa.checks import (  # noqa: E402
    brute_force_scan,
    fixed_ring_generators,
    polynomial_membership,
    relation_suite,
    symmetric_gamma_generators,
    symmetric_membership,
)

from strategies import mixed2, quantum, quantum1, random_element, random_skew, weyl, weyl1  # noqa: E402

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> bool:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS[n] = line
    print(line)
    return ok


def criterion_1():
    start = time.perf_counter()
    checked, failed = 0, []
    for n in (1, 2, 3):
        r = relation_suite(weyl(n))
        checked += r.details["relations_checked"]
        failed += r.witnesses
    elapsed = time.perf_counter() - start
    return record(1, not failed and elapsed < 5, f"{checked} relations on W1, W2, W3, {len(failed)} failures, {elapsed:.2f}s < 5s")


def criterion_2():
    rng = random.Random(2)
    algebras = [weyl(1), weyl(2), weyl(3), quantum(1), quantum(2), quantum(3)]
    start = time.perf_counter()
    bad = 0
    for i in range(1000):
        A = algebras[i % len(algebras)]
        x = random_element(rng, A, max_support=3, max_deg=4)
        y = random_element(rng, A, max_support=3, max_deg=4)
        ex, ey = embed(x), embed(y)
        if embed(x * y) != ex * ey or preimage(ex, A) != x:
            bad += 1
    elapsed = time.perf_counter() - start
    return record(2, bad == 0 and elapsed < 60, f"1000 pairs over ranks 1-3, {bad} mismatches, {elapsed:.1f}s < 60s")


def criterion_3():
    rng = random.Random(3)
    algebras = {"W1": weyl(1), "W2": weyl(2), "W3": weyl(3), "Q2": quantum(2), "mixed": mixed2()}
    slowest, bad = 0.0, 0
    for A in algebras.values():
        start = time.perf_counter()
        for _ in range(500):
            x, y, z = (random_element(rng, A, 3, 3) for _ in range(3))
            if (x * y) * z != x * (y * z):
                bad += 1
        slowest = max(slowest, time.perf_counter() - start)
    return record(3, bad == 0 and slowest < 30, f"500 triples on each of {len(algebras)} algebras, {bad} failures, slowest {slowest:.1f}s < 30s")


def criterion_4():
    h = weyl1().base.gen("h")
    q = quantum1().base.gen("h")
    cases = [
        ("a=h", check_simple_classical(h), True, [], brute_force_scan(h)),
        ("a=h(h-2)", check_simple_classical(h * (h - 2)), False, [2], brute_force_scan(h * (h - 2))),
        ("a=h^2", check_simple_classical(h**2), True, [], brute_force_scan(h**2)),
        (
            "a=(h-1)(h-2), lambda=2",
            check_simple_quantum((q - 1) * (q - 2), 2),
            False,
            [1],
            brute_force_scan((q - 1) * (q - 2), "quantum", 2),
        ),
    ]
    ok = True
    for _, report, verdict, shifts, brute in cases:
        found = [w["shift"] for w in report.witnesses]
        ok &= report.verdict == verdict and found == shifts == brute
    return record(4, ok, "4 verdicts and witnesses match the expected shifts and the brute-force gcd scan")


def criterion_5():
    W1 = weyl1()
    h = W1.base.gen("h")
    ok = True
    for m in (2, 3, 4):
        B, report = jw_fixed_ring(W1, m)
        expected = W1.base.one
        for i in range(m):
            expected = expected * (h + i)
        oracle = (W1.xminus(0) ** m * W1.xplus(0) ** m).coefficient((0,))
        ok &= oracle == expected == B.a[0] and report.verdict and relation_suite(B).verdict
    return record(5, ok, "m = 2, 3, 4: (X^-)^m (X^+)^m = prod (h+i), relation suite passes")


CONFIGS_6 = [(1, 1, 2), (1, 1, 3), (2, 1, 2), (2, 2, 2), (3, 1, 2)]


def criterion_6():
    start = time.perf_counter()
    failures = []
    for (m, p, n), (label, seed) in itertools.product(CONFIGS_6, [("classical", weyl1), ("quantum", quantum1)]):
        A, _, gens = fixed_ring_generators(seed(), m, p, n)
        skew = [embed(x) for x in gens]
        gen_ok = check_galois_generation(skew, n, invariant_lattice(m, p, n)).verdict
        prin = check_principal(skew, symmetric_gamma_generators(A), symmetric_membership(A), deg_bound=4)
        if not (gen_ok and prin.verdict):
            failures.append(f"{label} G({m},{p},{n})")
    W1 = weyl1()
    S = SkewRing.of(W1)
    h = W1.base.gen("h")
    counter = check_principal([S.scalar(RatFunc(W1.base.one, h))], [h], polynomial_membership(W1.base))
    counter_ok = not counter.verdict and bool(counter.witnesses)
    elapsed = time.perf_counter() - start
    detail = f"10 configurations, failures: {failures or 'none'}; counterexample witness {counter.witnesses[:1]}; {elapsed:.1f}s"
    return record(6, not failures and counter_ok, detail)


def criterion_7():
    rng = random.Random(7)
    bad = 0
    for i in range(200):
        A = weyl(1 + i % 3)
        u = random_skew(rng, SkewRing.of(A), max_support=4)
        supp = sorted(support(u))
        S = set(rng.sample(supp, rng.randint(0, len(supp))))
        f = A.base.gens()[rng.randrange(A.base.nvars)]
        outside = support(f_projector(S, f, u))
        inside = support(f_projector(set(supp) - S, f, u))
        if outside & S or not inside <= S:
            bad += 1
    return record(7, bad == 0, f"200 skew elements, {bad} violations")


def criterion_8():
    rng = random.Random(8)
    bad = 0
    for i in range(50):
        A = weyl(2 + i % 2)
        W = symmetric_wgroup(A)
        base = Fraction(rng.randint(-3, 3), rng.choice([1, 2, 3]))
        M = [base + rng.randint(-2, 2) if rng.random() < 0.7 else Fraction(rng.randint(-9, 9), 4) for _ in range(A.rank)]
        _, report = orbit_set(M, M, W)
        bad += not report.verdict
    return record(8, bad == 0, f"50 random points in ranks 2-3, {bad} violations")


def criterion_9():
    from test_cli import CASES, GOLDEN, _run

    rng = random.Random(9)
    algebras = [weyl(1), weyl(2), weyl(3), quantum(2), mixed2()]
    round_trip_bad = 0
    for i in range(300):
        A = algebras[i % len(algebras)]
        x = random_element(rng, A)
        if parse_element(str(x), A) != x:
            round_trip_bad += 1
    golden_bad = []
    for name, argv in sorted(CASES.items()):
        first, second = _run(argv), _run(argv)
        path = GOLDEN / f"{name}.txt"
        if first != second or not path.exists() or path.read_text() != first:
            golden_bad.append(name)
    ok = not round_trip_bad and not golden_bad
    return record(9, ok, f"300 round trips ({round_trip_bad} failures), {len(CASES)} golden files run twice (mismatches: {golden_bad or 'none'})")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 10)])
def test_acceptance(criterion):
    assert criterion()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
