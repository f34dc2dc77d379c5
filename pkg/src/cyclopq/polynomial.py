"""Sparse integer polynomials in canonical form.

A polynomial is a tuple of ``(exponent, coefficient)`` pairs, strictly
ascending by exponent, with no zero coefficients. Canonical form means
structural equality is mathematical equality, so ``==`` and ``hash`` work
as expected. Coefficients are held to the signed 64-bit range and exponents
to the unsigned 64-bit range; leaving either raises rather than wraps.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ArithmeticOverflowError,
    CapacityError,
    InexactDivisionError,
    ValidationError,
)

COEFF_MIN = -(1 << 63)
COEFF_MAX = (1 << 63) - 1
EXP_MAX = (1 << 64) - 1

Term = tuple[int, int]


def _checked_coeff(c: int) -> int:
    if c < COEFF_MIN or c > COEFF_MAX:
        raise ArithmeticOverflowError(f"coefficient {c} outside signed 64-bit range")
    return c


def _checked_exp(e: int) -> int:
    if e < 0:
        raise ValidationError(f"negative exponent {e}")
    if e > EXP_MAX:
        raise ArithmeticOverflowError(f"exponent {e} outside unsigned 64-bit range")
    return e


@dataclass(frozen=True)
class SparsePoly:
    terms: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        prev = -1
        for e, c in self.terms:
            if e <= prev:
                raise ValidationError("terms must be strictly ascending by exponent")
            if c == 0:
                raise ValidationError(f"zero coefficient at exponent {e}")
            _checked_exp(e)
            _checked_coeff(c)
            prev = e

    def __add__(self, other: SparsePoly) -> SparsePoly:
        return add(self, other)

    def __sub__(self, other: SparsePoly) -> SparsePoly:
        return sub(self, other)

    def __mul__(self, other: SparsePoly) -> SparsePoly:
        return mul(self, other)

    def __neg__(self) -> SparsePoly:
        return SparsePoly(tuple((e, _checked_coeff(-c)) for e, c in self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"SparsePoly({list(self.terms)})"

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Highest exponent; the zero polynomial reports 0."""
        return self.terms[-1][0] if self.terms else 0

    def coeff(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
            if e > exponent:
                break
        return 0


ZERO = SparsePoly()
ONE = SparsePoly(((0, 1),))


def from_terms(pairs: Iterable[Term]) -> SparsePoly:
    """Merge duplicate exponents, drop zeros, sort."""
    acc: dict[int, int] = defaultdict(int)
    for e, c in pairs:
        acc[_checked_exp(e)] += c
    return SparsePoly(
        tuple((e, _checked_coeff(c)) for e, c in sorted(acc.items()) if c != 0)
    )


def monomial(exponent: int, coeff: int = 1) -> SparsePoly:
    return from_terms([(exponent, coeff)])


def x_pow_minus_one(n: int) -> SparsePoly:
    """X**n - 1."""
    return from_terms([(n, 1), (0, -1)])


def add(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    return from_terms([*f.terms, *g.terms])


def sub(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    return from_terms([*f.terms, *((e, -c) for e, c in g.terms)])


def mul(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    if f.is_zero or g.is_zero:
        return ZERO
    if f.degree + g.degree > EXP_MAX:
        raise ArithmeticOverflowError(
            f"product degree {f.degree + g.degree} outside unsigned 64-bit range"
        )
    acc: dict[int, int] = defaultdict(int)
    for e1, c1 in f.terms:
        for e2, c2 in g.terms:
            acc[e1 + e2] += c1 * c2
    return SparsePoly(
        tuple((e, _checked_coeff(c)) for e, c in sorted(acc.items()) if c != 0)
    )


def exact_div(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Return h with g*h == f, by descending long division on sparse terms.

    Raises InexactDivisionError if the remainder is nonzero or a quotient
    coefficient would not be an integer.
    """
    if g.is_zero:
        raise ValidationError("division by the zero polynomial")
    if f.is_zero:
        return ZERO

    lead_e, lead_c = g.terms[-1]
    rest = g.terms[:-1]
    rem: dict[int, int] = dict(f.terms)
    heap = [-e for e in rem]
    heapq.heapify(heap)
    quotient: list[Term] = []

    while heap:
        e = -heapq.heappop(heap)
        c = rem.get(e, 0)
        if c == 0:
            continue
        if e < lead_e:
            raise InexactDivisionError(f"nonzero remainder term {c}*X^{e}")
        qc, r = divmod(c, lead_c)
        if r:
            raise InexactDivisionError(
                f"leading coefficient {lead_c} does not divide {c} at X^{e}"
            )
        qe = e - lead_e
        quotient.append((qe, _checked_coeff(qc)))
        del rem[e]
        for ge, gc in rest:
            k = qe + ge
            old = rem.get(k, 0)
            if old == 0:
                heapq.heappush(heap, -k)
            rem[k] = old - qc * gc
        # heap may hold duplicates or cancelled entries; zero checks skip them

    quotient.reverse()
    return SparsePoly(tuple(quotient))


def eval_at_one(f: SparsePoly) -> int:
    return _checked_coeff(sum(c for _, c in f.terms))


def geometric_sum(n: int) -> SparsePoly:
    """1 + X + ... + X**(n-1)."""
    if n < 1:
        raise ValidationError(f"geometric_sum needs n >= 1, got {n}")
    return SparsePoly(tuple((i, 1) for i in range(n)))


def to_dense(f: SparsePoly, max_degree_cap: int) -> list[int]:
    if f.degree > max_degree_cap:
        raise CapacityError(f"degree {f.degree} exceeds cap {max_degree_cap}")
    out = [0] * (f.degree + 1)
    for e, c in f.terms:
        out[e] = c
    return out


def from_dense(coeffs: Sequence[int]) -> SparsePoly:
    return from_terms((e, c) for e, c in enumerate(coeffs))
