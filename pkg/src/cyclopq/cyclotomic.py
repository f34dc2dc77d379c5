"""Binary cyclotomic polynomials and the factorization of X^ab - 1.

Four independent routes to Phi_pq:

* ``phi_closed_form``: 1 + (X-1) * sum_{i<q} sum_{1<=j<=floor(pi/q)} X^(pi-qj)
* ``phi_lenstra``: a double sum over i < lam, j < mu minus one over
  i >= lam, j >= mu, with lam, mu the inverses of p mod q and q mod p
* ``phi_lam_leung``: coefficient a_k decided per k by solving k = ip + jq
  (or k + pq = ip + jq) over the index boxes bounded by r, s
* ``phi_oracle``: exact division (X^pq - 1)(X - 1) / ((X^p - 1)(X^q - 1))
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import (
    CapacityError,
    CyclopqError,
    InexactDivisionError,
    InvariantViolation,
    ValidationError,
)
from .modular import CoprimePair, PrimePair, ReductionParams, reduction_params
from .polynomial import (
    ONE,
    SparsePoly,
    eval_at_one,
    exact_div,
    from_terms,
    geometric_sum,
    monomial,
    mul,
    x_pow_minus_one,
)

METHODS = ("closed", "lenstra", "lamleung", "oracle")

# Largest pq the division oracle will attempt.
ORACLE_MAX_PQ = 10**6


def _core_exponents(a: int, b: int) -> list[int]:
    """Exponents a*i - b*j for i in [0, b), j in [1, floor(a*i/b)]."""
    out = []
    for i in range(b):
        ai = a * i
        for j in range(1, ai // b + 1):
            out.append(ai - b * j)
    return out


def _one_plus_x_minus_one_times(exponents: list[int]) -> SparsePoly:
    # 1 + (X - 1) * sum X^e, expanded into a single canonicalizing pass
    terms = [(0, 1)]
    for e in exponents:
        terms.append((e + 1, 1))
        terms.append((e, -1))
    return from_terms(terms)


def phi_closed_form(pair: PrimePair) -> SparsePoly:
    return _one_plus_x_minus_one_times(_core_exponents(pair.p, pair.q))


def lenstra_exponents(
    pair: PrimePair, params: ReductionParams | None = None
) -> tuple[list[int], list[int]]:
    """Positive and negative exponent lists generated by Lenstra's double sums."""
    p, q, n = pair.p, pair.q, pair.n
    params = params or reduction_params(pair)
    lam, mu = params.lam, params.mu
    pos = [i * p + j * q for i in range(lam) for j in range(mu)]
    neg = []
    for i in range(lam, q):
        for j in range(mu, p):
            e = i * p + j * q - n
            if e < 0:
                raise InvariantViolation(f"negative exponent {e} at i={i}, j={j} for {pair}")
            neg.append(e)
    return pos, neg


def phi_lenstra(pair: PrimePair) -> SparsePoly:
    pos, neg = lenstra_exponents(pair)
    return from_terms([*((e, 1) for e in pos), *((e, -1) for e in neg)])


def _count_solutions(target: int, p: int, q: int, i_lo: int, i_hi: int, j_lo: int, j_hi: int) -> int:
    # number of (i, j) in [i_lo, i_hi] x [j_lo, j_hi] with i*p + j*q == target
    count = 0
    for i in range(i_lo, i_hi + 1):
        rest = target - i * p
        if rest < 0:
            break
        if rest % q == 0 and j_lo <= rest // q <= j_hi:
            count += 1
    return count


def lam_leung_exponents(
    pair: PrimePair, params: ReductionParams | None = None
) -> tuple[list[int], list[int]]:
    """Exponents k in [0, (p-1)(q-1)] with a_k = +1 / -1, each repeated once per solution.

    Built by scanning k and counting solutions, not by enumerating the index
    boxes, so the multiset is an independent check on ``lenstra_exponents``.
    """
    p, q, n = pair.p, pair.q, pair.n
    params = params or reduction_params(pair)
    r, s = params.r, params.s
    pos: list[int] = []
    neg: list[int] = []
    for k in range(pair.degree + 1):
        pos.extend([k] * _count_solutions(k, p, q, 0, r, 0, s))
        neg.extend([k] * _count_solutions(k + n, p, q, r + 1, q - 1, s + 1, p - 1))
    return pos, neg


def phi_lam_leung(pair: PrimePair) -> SparsePoly:
    pos, neg = lam_leung_exponents(pair)
    if len(set(pos)) != len(pos) or len(set(neg)) != len(neg):
        raise InvariantViolation(f"exponent with more than one solution for {pair}")
    if set(pos) & set(neg):
        raise InvariantViolation(f"a_k both +1 and -1 for {pair}: {sorted(set(pos) & set(neg))}")
    return from_terms([*((e, 1) for e in pos), *((e, -1) for e in neg)])


def phi_oracle(pair: PrimePair, max_pq: int = ORACLE_MAX_PQ) -> SparsePoly:
    """Phi_pq = (X^pq - 1)(X - 1) / ((X^p - 1)(X^q - 1)) by exact long division."""
    if pair.n > max_pq:
        raise CapacityError(f"pq={pair.n} exceeds oracle capacity {max_pq}")
    num = mul(x_pow_minus_one(pair.n), x_pow_minus_one(1))
    den = mul(x_pow_minus_one(pair.p), x_pow_minus_one(pair.q))
    try:
        return exact_div(num, den)
    except InexactDivisionError as exc:
        raise InvariantViolation(f"division oracle inexact for {pair}: {exc}") from exc


PHI_METHODS = {
    "closed": phi_closed_form,
    "lenstra": phi_lenstra,
    "lamleung": phi_lam_leung,
    "oracle": phi_oracle,
}


def phi(pair: PrimePair, method: str = "closed") -> SparsePoly:
    return PHI_METHODS[method](pair)


def lemma_expand(pair: CoprimePair, i: int) -> SparsePoly:
    """X^([ai] mod b) + (X^b - 1) * sum_{j=1}^{floor(ai/b)} X^(ai - bj), built literally.

    Equals X^(ai); callers compare against that monomial.
    """
    a, b = pair.a, pair.b
    ai = a * i
    inner = from_terms((ai - b * j, 1) for j in range(1, ai // b + 1))
    return monomial(ai % b) + mul(x_pow_minus_one(b), inner)


@dataclass(frozen=True)
class FactorizationResult:
    a: int
    b: int
    factor_linear: SparsePoly
    factor_a: SparsePoly
    factor_b: SparsePoly
    factor_core: SparsePoly
    swapped: bool = False

    @property
    def factors(self) -> list[tuple[str, SparsePoly]]:
        return [
            ("linear", self.factor_linear),
            ("geometric_a", self.factor_a),
            ("geometric_b", self.factor_b),
            ("core", self.factor_core),
        ]

    def product(self) -> SparsePoly:
        out = ONE
        for _, f in self.factors:
            out = mul(out, f)
        return out


def factor_x_ab_minus_1(pair: CoprimePair) -> FactorizationResult:
    a, b = pair.a, pair.b
    result = FactorizationResult(
        a=a,
        b=b,
        factor_linear=x_pow_minus_one(1),
        factor_a=geometric_sum(a),
        factor_b=geometric_sum(b),
        factor_core=_one_plus_x_minus_one_times(_core_exponents(a, b)),
        swapped=pair.swapped,
    )
    if result.product() != x_pow_minus_one(a * b):
        raise InvariantViolation(f"factors of X^{a * b} - 1 do not multiply back for {pair}")
    return result


@dataclass
class VerificationReport:
    pair: PrimePair
    params: ReductionParams | None = None
    methods_agree: bool = False
    coeffs_in_unit_set: bool = False
    degree_ok: bool = False
    palindrome_ok: bool = False
    eval_one_ok: bool = False
    balance_ok: bool = False
    params_ok: bool = False
    multisets_ok: bool = False
    term_count: int = 0
    failures: list[str] = field(default_factory=list)

    CHECKS = (
        "methods_agree",
        "coeffs_in_unit_set",
        "degree_ok",
        "palindrome_ok",
        "eval_one_ok",
        "balance_ok",
        "params_ok",
        "multisets_ok",
    )

    @property
    def passed(self) -> bool:
        return not self.failures


def _check_multisets(pair: PrimePair, params: ReductionParams) -> list[str]:
    problems = []
    len_pos, len_neg = lenstra_exponents(pair, params)
    ll_pos, ll_neg = lam_leung_exponents(pair, params)
    for sign, a, b in (("positive", len_pos, ll_pos), ("negative", len_neg, ll_neg)):
        ca, cb = Counter(a), Counter(b)
        if ca != cb:
            problems.append(f"{sign} exponent multisets differ")
        if any(v > 1 for v in ca.values()) or any(v > 1 for v in cb.values()):
            problems.append(f"{sign} exponent multiset has duplicates")
    return problems


def verify_pair(pair: PrimePair) -> VerificationReport:
    """Run every check on one pair. Failures, including errors, are recorded, not raised."""
    report = VerificationReport(pair=pair)
    p, q = pair.p, pair.q

    try:
        params = reduction_params(pair)
    except CyclopqError as exc:
        report.failures.append(f"params: {exc}")
        return report
    report.params = params
    report.params_ok = True

    try:
        problems = _check_multisets(pair, params)
        report.failures.extend(f"multisets: {m}" for m in problems)
        report.multisets_ok = not problems

        polys = {m: PHI_METHODS[m](pair) for m in METHODS}
    except CyclopqError as exc:
        report.failures.append(f"{type(exc).__name__}: {exc}")
        return report

    ref = polys["closed"]
    report.term_count = len(ref)
    report.methods_agree = all(f == ref for f in polys.values())
    if not report.methods_agree:
        bad = [m for m, f in polys.items() if f != ref]
        report.failures.append(f"methods_agree: {', '.join(bad)} differ from closed")

    coeffs = {c for _, c in ref.terms}
    report.coeffs_in_unit_set = coeffs <= {-1, 1}
    if not report.coeffs_in_unit_set:
        report.failures.append(f"coeffs_in_unit_set: saw {sorted(coeffs)}")

    expected_degree = (p - 1) * (q - 1)
    report.degree_ok = ref.degree == expected_degree
    if not report.degree_ok:
        report.failures.append(f"degree_ok: {ref.degree} != {expected_degree}")

    by_exp = dict(ref.terms)
    report.palindrome_ok = all(by_exp.get(ref.degree - e) == c for e, c in ref.terms)
    if not report.palindrome_ok:
        report.failures.append("palindrome_ok: coefficients not symmetric")

    value = eval_at_one(ref)
    report.eval_one_ok = value == 1
    if not report.eval_one_ok:
        report.failures.append(f"eval_one_ok: Phi(1) = {value}")

    n_pos = sum(1 for _, c in ref.terms if c > 0)
    n_neg = sum(1 for _, c in ref.terms if c < 0)
    report.balance_ok = n_pos - n_neg == 1
    if not report.balance_ok:
        report.failures.append(f"balance_ok: {n_pos} positive vs {n_neg} negative terms")

    return report


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(n + 1) if sieve[i]]


def prime_pairs(max_product: int) -> list[PrimePair]:
    """All p > q prime with pq <= max_product, ordered by pq then q."""
    primes = primes_up_to(max_product // 2)
    pairs = []
    for qi, q in enumerate(primes):
        if q * q >= max_product:
            break
        for p in primes[qi + 1 :]:
            if p * q > max_product:
                break
            pairs.append(PrimePair(p, q))
    pairs.sort(key=lambda pr: (pr.n, pr.q))
    return pairs


def sweep(max_product: int, jobs: int = 1) -> list[VerificationReport]:
    if max_product < 6:
        raise ValidationError(f"max_product must be >= 6, got {max_product}")
    pairs = prime_pairs(max_product)
    if jobs <= 1:
        return [verify_pair(pr) for pr in pairs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_pair, pairs, chunksize=8))
