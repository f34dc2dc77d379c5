"""Exit criteria. Each test records one PASS/FAIL line, echoed in the pytest summary.

Run standalone with ``python tests/test_acceptance.py``.
"""

import io
import json
import random
import time
from collections import Counter
from math import gcd

import pytest

from cyclopq import cli
from cyclopq.cyclotomic import (
    METHODS,
    PHI_METHODS,
    factor_x_ab_minus_1,
    lam_leung_exponents,
    lemma_expand,
    lenstra_exponents,
    prime_pairs,
)
from cyclopq.modular import CoprimePair, PrimePair, reduction_params
from cyclopq.polynomial import (
    ONE,
    ZERO,
    eval_at_one,
    exact_div,
    from_terms,
    monomial,
    mul,
    to_dense,
    x_pow_minus_one,
)

MAX_PQ = 3000
MAX_AB = 400
SWEEP_SECONDS = 30.0
FACTOR_SECONDS = 10.0
RING_INSTANCES = 1000
RING_SEED = 20261016

RESULTS: list[str] = []


def record(label: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)


@pytest.fixture(scope="module")
def sweep_polys():
    pairs = prime_pairs(MAX_PQ)
    t0 = time.perf_counter()
    polys = {pair: {m: PHI_METHODS[m](pair) for m in METHODS} for pair in pairs}
    return polys, time.perf_counter() - t0


def coprime_family():
    return [
        CoprimePair(a, b)
        for a in range(2, MAX_AB + 1)
        for b in range(1, a)
        if a * b <= MAX_AB and gcd(a, b) == 1
    ]


def test_c1_four_way_agreement(sweep_polys):
    polys, elapsed = sweep_polys
    bad = [pair for pair, by_m in polys.items() if len(set(by_m.values())) != 1]
    ok = not bad and elapsed < SWEEP_SECONDS
    record(
        "C1 four-way agreement, pq <= 3000",
        ok,
        f"{len(polys)} pairs, {len(bad)} disagreeing, {elapsed:.1f}s < {SWEEP_SECONDS:.0f}s",
    )
    assert not bad
    assert elapsed < SWEEP_SECONDS


def test_c2_structure(sweep_polys):
    polys, _ = sweep_polys
    failures = []
    for pair, by_m in polys.items():
        for method, f in by_m.items():
            dense = to_dense(f, MAX_PQ)
            n_pos = sum(1 for c in dense if c == 1)
            n_neg = sum(1 for c in dense if c == -1)
            checks = {
                "unit coeffs": set(dense) <= {-1, 0, 1},
                "degree": len(dense) - 1 == (pair.p - 1) * (pair.q - 1),
                "palindrome": dense == dense[::-1],
                "phi(1)=1": eval_at_one(f) == 1,
                "pos-neg=1": n_pos - n_neg == 1,
            }
            failures.extend((pair, method, k) for k, v in checks.items() if not v)
    record("C2 Migotti bound, degree, palindrome, Phi(1)=1, term balance", not failures,
           f"{len(failures)} failures")
    assert not failures


def test_c3_parameters_and_multisets():
    failures = []
    pairs = prime_pairs(MAX_PQ)
    for pair in pairs:
        p, q = pair.p, pair.q
        prm = reduction_params(pair)
        if not (
            prm.lam * p % q == 1
            and prm.mu * q % p == 1
            and prm.r == prm.lam - 1
            and prm.s == prm.mu - 1
            and prm.r * p + prm.s * q == (p - 1) * (q - 1)
        ):
            failures.append((pair, "params"))
        for sign, a, b in zip(("pos", "neg"), lenstra_exponents(pair, prm), lam_leung_exponents(pair, prm)):
            ca, cb = Counter(a), Counter(b)
            if ca != cb:
                failures.append((pair, f"{sign} multiset"))
            if max(ca.values(), default=1) > 1 or max(cb.values(), default=1) > 1:
                failures.append((pair, f"{sign} duplicates"))
    record("C3 lambda/mu/r/s relations and exponent multisets", not failures,
           f"{len(pairs)} pairs, {len(failures)} failures")
    assert not failures


def test_c4_factorization():
    family = coprime_family()
    t0 = time.perf_counter()
    bad = [pr for pr in family if factor_x_ab_minus_1(pr).product() != x_pow_minus_one(pr.a * pr.b)]
    elapsed = time.perf_counter() - t0
    n_b1 = sum(1 for pr in family if pr.b == 1)
    record("C4 X^ab - 1 factorization, ab <= 400", not bad and elapsed < FACTOR_SECONDS,
           f"{len(family)} pairs ({n_b1} with b=1), {len(bad)} failures, {elapsed:.1f}s")
    assert n_b1 == MAX_AB - 1
    assert not bad
    assert elapsed < FACTOR_SECONDS


def test_c5_lemma():
    bad = [
        (pr, i)
        for pr in coprime_family()
        for i in range(pr.b)
        if lemma_expand(pr, i) != monomial(pr.a * i)
    ]
    record("C5 lemma expansion equals X^(ai) for i < b", not bad, f"{len(bad)} failures")
    assert not bad


def test_c6_known_values():
    # frozen from hand long division of (X^n - 1)(X - 1) by (X^p - 1)(X^q - 1)
    phi6 = [1, -1, 1]
    phi15 = [1, -1, 0, 1, -1, 1, 0, -1, 1]
    oracle = PHI_METHODS["oracle"]
    ok = to_dense(oracle(PrimePair(3, 2)), 100) == phi6 and to_dense(oracle(PrimePair(5, 3)), 100) == phi15
    for m in METHODS:
        ok &= to_dense(PHI_METHODS[m](PrimePair(3, 2)), 100) == phi6
        ok &= to_dense(PHI_METHODS[m](PrimePair(5, 3)), 100) == phi15
    record("C6 Phi_6 and Phi_15 known values", ok)
    assert ok


def _random_poly(rng: random.Random):
    return from_terms((rng.randint(0, 30), rng.randint(-9, 9)) for _ in range(rng.randint(0, 10)))


def test_c7_ring_properties():
    rng = random.Random(RING_SEED)
    failures = 0
    for _ in range(RING_INSTANCES):
        f, g, h = _random_poly(rng), _random_poly(rng), _random_poly(rng)
        ok = (
            f + g == g + f
            and f * g == g * f
            and (f + g) + h == f + (g + h)
            and (f * g) * h == f * (g * h)
            and f * (g + h) == f * g + f * h
            and f * ONE == f
            and f + ZERO == f
        )
        if not g.is_zero:
            ok = ok and exact_div(mul(f, g), g) == f
        failures += not ok
    record("C7 ring axioms and exact_div(mul) round trip", failures == 0,
           f"{RING_INSTANCES} instances, seed {RING_SEED}, {failures} failures")
    assert failures == 0


def _cli(*argv):
    out = io.StringIO()
    return cli.main(list(argv), out=out), out.getvalue()


def test_c8_cli_contract(monkeypatch):
    problems = []

    if _cli("phi", "3", "2")[0] != 0:
        problems.append("exit 0")
    for argv in [("phi", "4", "2"), ("factor", "6", "4"), ("verify", "--max-pq", "5"), ("phi",)]:
        if _cli(*argv)[0] != 1:
            problems.append(f"exit 1 for {argv}")
    with monkeypatch.context() as mp:
        mp.setitem(PHI_METHODS, "lenstra", lambda pair: ONE)
        if _cli("verify", "--max-pq", "15")[0] != 2:
            problems.append("exit 2")

    for argv in [("phi", "13", "7", "--format", "json"), ("factor", "9", "4", "--format", "json")]:
        text = _cli(*argv)[1].strip()
        if json.dumps(json.loads(text), separators=(",", ":")) != text:
            problems.append(f"json round trip {argv}")

    code, out = _cli("bench", "--max-pq", "100", "--reps", "1")
    lines = out.splitlines()
    n_pairs = len(prime_pairs(100))
    if code != 0 or lines[0] != "p,q,method,ns,terms" or len(lines) != 1 + 4 * n_pairs:
        problems.append("bench shape")
    counts = Counter(tuple(ln.split(",")[:2]) for ln in lines[1:])
    if set(counts.values()) != {4}:
        problems.append("bench rows per pair")

    record("C8 CLI exit codes, JSON round trip, bench CSV", not problems, "; ".join(problems))
    assert not problems


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
