"""Integer primitives: gcd, 64-bit primality, modular powers, inverse parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvariantViolation, ValidationError

WORD_LIMIT = 1 << 64

# First twelve primes: a complete Miller-Rabin witness set for n < 3.3e24,
# which covers every 64-bit input.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _check_word(name: str, n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValidationError(f"{name} must be an integer, got {n!r}")
    if n < 0 or n >= WORD_LIMIT:
        raise ValidationError(f"{name}={n} is outside the unsigned 64-bit range")


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValidationError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """Return base**exp reduced into [0, modulus)."""
    if modulus < 2:
        raise ValidationError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ValidationError(f"exponent must be non-negative, got {exp}")
    return pow(base, exp, modulus)


def is_prime(n: int) -> bool:
    _check_word("n", n)
    if n < 2:
        return False
    for w in _WITNESSES:
        if n % w == 0:
            return n == w

    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1

    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimePair:
    """Distinct primes with p > q, so that p*q fits a 64-bit word."""

    p: int
    q: int

    def __post_init__(self) -> None:
        _check_word("p", self.p)
        _check_word("q", self.q)
        for name, v in (("p", self.p), ("q", self.q)):
            if not is_prime(v):
                raise ValidationError(f"{name}={v} is not prime")
        if self.p <= self.q:
            raise ValidationError(f"need p > q, got p={self.p}, q={self.q}")
        if self.p * self.q >= WORD_LIMIT:
            raise ValidationError(f"p*q = {self.p * self.q} overflows 64 bits")

    @classmethod
    def of(cls, x: int, y: int) -> PrimePair:
        """Build a pair from two primes given in either order."""
        return cls(max(x, y), min(x, y))

    @property
    def n(self) -> int:
        return self.p * self.q

    @property
    def degree(self) -> int:
        return (self.p - 1) * (self.q - 1)


@dataclass(frozen=True)
class CoprimePair:
    """Coprime a > b >= 1. ``swapped`` records that the caller gave them as (b, a)."""

    a: int
    b: int
    swapped: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        _check_word("a", self.a)
        _check_word("b", self.b)
        if self.b < 1:
            raise ValidationError(f"b must be >= 1, got {self.b}")
        if self.a <= self.b:
            raise ValidationError(f"need a > b, got a={self.a}, b={self.b}")
        g = math.gcd(self.a, self.b)
        if g != 1:
            raise ValidationError(f"gcd({self.a},{self.b})={g}, arguments must be coprime")
        if self.a * self.b >= WORD_LIMIT:
            raise ValidationError(f"a*b = {self.a * self.b} overflows 64 bits")

    @classmethod
    def of(cls, x: int, y: int) -> CoprimePair:
        if x < y:
            return cls(y, x, swapped=True)
        return cls(x, y)


@dataclass(frozen=True)
class ReductionParams:
    lam: int
    mu: int
    r: int
    s: int


def reduction_params(pair: PrimePair) -> ReductionParams:
    """Inverse of p mod q and of q mod p via Fermat exponents, plus r = lam-1, s = mu-1."""
    p, q = pair.p, pair.q
    lam = mod_pow(p, q - 2, q)
    mu = mod_pow(q, p - 2, p)
    params = ReductionParams(lam=lam, mu=mu, r=lam - 1, s=mu - 1)

    if not (0 < lam < q and 0 < mu < p):
        raise InvariantViolation(f"inverse out of range for {pair}: {params}")
    if lam * p % q != 1 or mu * q % p != 1:
        raise InvariantViolation(f"not an inverse for {pair}: {params}")
    if params.r * p + params.s * q != (p - 1) * (q - 1):
        raise InvariantViolation(f"r*p + s*q != (p-1)(q-1) for {pair}: {params}")
    return params
