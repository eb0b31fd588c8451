"""Points of the solenoid as characters of Q.

The class of ``(x_real, x_fin)`` acts on ``q`` by

    chi(q) = sum_p {x_p * q}_p - x_real * q   (mod 1),

the sum being finite because ``x_p * q`` is p-integral away from the
override primes and the primes dividing the denominator of ``tail * q``.
"""

from __future__ import annotations

from fractions import Fraction

from solenoid.adele import AdeleClass, FiniteAdele
from solenoid.exact_arith import TorusPoint, as_rat, frac_p, is_prime, lcm, prime_factors, valuation


def chi(x_real, x_fin: FiniteAdele, q) -> TorusPoint:
    x_real, q = as_rat(x_real), as_rat(q)
    total = -x_real * q
    listed = set()
    for p, r in x_fin.overrides:
        listed.add(p)
        total += frac_p(r * q, p).value
    tq = x_fin.tail * q
    for p in prime_factors(tq.denominator):
        if p not in listed:
            total += frac_p(tq, p).value
    return TorusPoint.from_rat(total)


def chi_class(x: AdeleClass, q) -> TorusPoint:
    return chi(x.real, x.fin, q)


def chi_is_trivial(x: AdeleClass) -> bool:
    # Canonical forms are unique, so the kernel is exactly the zero form.
    return x.is_zero()


SMALL_SEARCH = 64


def separation_probes(x: AdeleClass) -> list[Fraction]:
    """Rationals ``1/p**k`` and ``1/n`` among which a nonzero canonical ``x`` is nonzero somewhere.

    With ``x_real == 0`` some override ``x_p`` is nonzero and
    ``1/p**(v_p(x_p) + 1)`` picks up a nonzero principal part at ``p`` that
    the other primes cannot cancel.  Otherwise let ``K`` clear the override
    denominators; for a prime ``n`` outside the support not dividing the
    numerator of ``K*x_real``, ``chi(K/n) = -K*x_real/n != 0``, hence
    ``chi(1/n) != 0``.
    """
    probes = []
    for p, r in x.fin.overrides:
        k = max(1, valuation(r, p) + 1)
        probes.extend(Fraction(1, p**j) for j in range(1, k + 1))
    if x.real != 0:
        clear = 1
        for _, r in x.fin.overrides:
            clear = lcm(clear, r.denominator)
        bound = max([abs((clear * x.real).numerator)] + list(x.fin.support)) + 1
        while not is_prime(bound):
            bound += 1
        # small n first; the constructive prime is always included
        probes.extend(Fraction(1, n) for n in range(1, min(bound, SMALL_SEARCH) + 1))
        probes.append(Fraction(1, bound))
    return sorted(set(probes), reverse=True)


def separating_point(x: AdeleClass) -> Fraction | None:
    """First probe where ``chi`` is nonzero, or None for the zero class."""
    for q in separation_probes(x):
        if chi_class(x, q).value != 0:
            return q
    return None
