"""Exact rationals, p-adic valuations and principal parts, and rational points of R/Z.

Every value here is a :class:`fractions.Fraction`; nothing is ever rounded.

>>> frac_p(Rat(3, 10), 5)
PAdicFrac(prime=5, value=Fraction(4, 5))
>>> sorted((p, str(r.value)) for p, r in global_frac_parts(Rat(3, 10)).items())
[(2, '1/2'), (5, '4/5')]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

Rat = Fraction

# Trial division gives up on a cofactor with no prime factor below this.
TRIAL_LIMIT = 10**6

_RAT_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?\Z")


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rat(text: str) -> Fraction:
    """Parse ``n`` or ``n/d`` (optional leading minus, ``d > 0``)."""
    s = text.strip()
    if not _RAT_RE.match(s):
        raise ValueError(f"malformed rational {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rat(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=4096)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or isinstance(n, bool):
        return False
    return _is_prime(n)


@lru_cache(maxsize=4096)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of ``n >= 1``, ascending."""
    if n < 1:
        raise ValueError("prime_factors expects a positive integer")
    out = []
    for f in (2, 3):
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
    f = 5
    while f * f <= n:
        if f > TRIAL_LIMIT:
            raise ValueError(f"cannot factor {n}: no prime factor below {TRIAL_LIMIT}")
        for g in (f, f + 2):
            if n % g == 0:
                out.append(g)
                while n % g == 0:
                    n //= g
        f += 6
    if n > 1:
        out.append(n)
    return tuple(out)


def _require_prime(p) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _ext_euclid(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        t = a // b
        a, b = b, a - t * b
        x0, x1 = x1, x0 - t * x1
        y0, y1 = y1, y0 - t * y1
    return a, x0, y0


def bezout(m: int, n: int) -> tuple[int, int, int]:
    """Return ``(g, alpha, beta)`` with ``alpha*m + beta*n == g == gcd(m, n)``.

    ``beta`` is normalized into ``[0, m // g)`` so the output is deterministic.
    """
    if m < 1 or n < 1:
        raise ValueError("bezout expects positive integers")
    g, _, beta = _ext_euclid(m, n)
    beta %= m // g
    alpha, rem = divmod(g - beta * n, m)
    assert rem == 0
    return g, alpha, beta


def _int_valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def valuation(q, p: int) -> int:
    q = as_rat(q)
    if q == 0:
        raise ValueError("the valuation of 0 is infinite")
    _require_prime(p)
    return _int_valuation(abs(q.numerator), p) - _int_valuation(q.denominator, p)


@dataclass(frozen=True)
class TorusPoint:
    """A rational point ``value + Z`` of the circle R/Z, with ``0 <= value < 1``."""

    value: Fraction

    def __post_init__(self):
        v = as_rat(self.value)
        if not 0 <= v < 1:
            raise ValueError(f"torus representative {v} not in [0, 1)")
        object.__setattr__(self, "value", v)

    @classmethod
    def from_rat(cls, q) -> TorusPoint:
        q = as_rat(q)
        return cls(q - (q.numerator // q.denominator))

    def __add__(self, other: TorusPoint) -> TorusPoint:
        return TorusPoint.from_rat(self.value + other.value)

    def __neg__(self) -> TorusPoint:
        return TorusPoint.from_rat(-self.value)

    def __sub__(self, other: TorusPoint) -> TorusPoint:
        return TorusPoint.from_rat(self.value - other.value)

    def __mul__(self, k: int) -> TorusPoint:
        return TorusPoint.from_rat(self.value * k)

    __rmul__ = __mul__

    def __str__(self):
        return format_rat(self.value)


TORUS_ZERO = TorusPoint(Fraction(0))


def torus_add(x: TorusPoint, y: TorusPoint) -> TorusPoint:
    return x + y


def torus_neg(x: TorusPoint) -> TorusPoint:
    return -x


def from_rat(q) -> TorusPoint:
    return TorusPoint.from_rat(q)


@dataclass(frozen=True)
class PAdicFrac:
    """The class of ``value`` in Z[1/p]/Z, normalized into ``[0, 1)``."""

    prime: int
    value: Fraction

    def __post_init__(self):
        _require_prime(self.prime)
        v = as_rat(self.value)
        if not 0 <= v < 1:
            raise ValueError(f"principal part {v} not in [0, 1)")
        d = v.denominator
        while d % self.prime == 0:
            d //= self.prime
        if d != 1:
            raise ValueError(f"{v} does not have a {self.prime}-power denominator")
        object.__setattr__(self, "value", v)


def frac_p(q, p: int) -> PAdicFrac:
    """The p-adic fractional part of ``q``.

    Writing ``q = q0 / (p**n * q1)`` with ``p`` prime to ``q0*q1`` and
    ``n > 0``, choose ``alpha*p**n + beta*q1 == 1``; then ``q0*beta/p**n``
    differs from ``q`` by ``q0*alpha/q1``, which is p-integral.
    """
    q = as_rat(q)
    _require_prime(p)
    if q == 0:
        return PAdicFrac(p, Fraction(0))
    n = _int_valuation(q.denominator, p)
    if n == 0:
        return PAdicFrac(p, Fraction(0))
    pn = p**n
    q1 = q.denominator // pn
    _, _, beta = bezout(pn, q1)
    return PAdicFrac(p, Fraction((q.numerator * beta) % pn, pn))


def global_frac_parts(q) -> dict[int, PAdicFrac]:
    q = as_rat(q)
    return {p: frac_p(q, p) for p in prime_factors(q.denominator)}


def decompose(q, p: int) -> tuple[Fraction, Fraction]:
    """Split ``q = u - v`` with ``u`` p-integral and ``v`` in ``[0, 1)`` with p-power denominator."""
    q = as_rat(q)
    v = frac_p(-q, p).value
    return q + v, v


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing the positive integer ``n``."""
    return p ** _int_valuation(n, p)


def is_p_integral(q, p: int) -> bool:
    return as_rat(q).denominator % p != 0


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b
