"""Seeded random generators for property suites.

Denominators stay at desk scale so trial-division factoring is cheap.
"""

from __future__ import annotations

import random
from fractions import Fraction

from solenoid.adele import AdeleClass, FiniteAdele, canonicalize
from solenoid.extension import ExtElement, ExtPresentation, RigidExt
from solenoid.numberfield import OkExt

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def make_rng(seed, label: str = "") -> random.Random:
    return random.Random(f"{seed}:{label}")


def rand_den(rng: random.Random, primes=SMALL_PRIMES, max_exp: int = 3) -> int:
    d = 1
    for p in rng.sample(primes, rng.randint(0, 3)):
        d *= p ** rng.randint(1, max_exp)
    return d


def rand_rat(rng: random.Random, num_bound: int = 60, primes=SMALL_PRIMES) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rand_den(rng, primes))


def rand_nonzero_rat(rng: random.Random, **kw) -> Fraction:
    while True:
        q = rand_rat(rng, **kw)
        if q:
            return q


def rand_fa(rng: random.Random, diagonal_tail: bool = True) -> FiniteAdele:
    tail = rand_rat(rng, 20) if diagonal_tail and rng.random() < 0.6 else Fraction(0)
    primes = rng.sample(SMALL_PRIMES, rng.randint(0, 3))
    return FiniteAdele(tail, tuple((p, rand_rat(rng, 20)) for p in primes))


def rand_class(rng: random.Random) -> AdeleClass:
    return canonicalize(rand_rat(rng, 20), rand_fa(rng))


def rand_rigid(rng: random.Random) -> RigidExt:
    return RigidExt.of(rand_fa(rng), rand_rat(rng, 20))


def rand_diagonal_rigid(rng: random.Random) -> RigidExt:
    return RigidExt.of(FiniteAdele.diagonal(rand_rat(rng, 20)), rand_rat(rng, 20))


def congruent_copy(rng: random.Random, e: RigidExt) -> RigidExt:
    """A rigidified extension congruent to ``e`` by a random diagonal shift."""
    d = rand_rat(rng, 20)
    return RigidExt.of(e.a + FiniteAdele.diagonal(d), e.sigma + d)


def rand_element(rng: random.Random, pres: ExtPresentation) -> ExtElement:
    q = rand_rat(rng, 30)
    return ExtElement(pres, q, pres.lift(q) + rng.randint(-5, 5))


def rand_okext(rng: random.Random) -> OkExt:
    return OkExt((rand_fa(rng), rand_fa(rng)), (rand_rat(rng, 20), rand_rat(rng, 20)))
