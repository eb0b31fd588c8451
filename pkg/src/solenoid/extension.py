"""Extensions of Q by Z presented by finite adeles, and their rigidifications.

A finite adele ``a`` defines ``phi_a : Q -> Q/Z``, ``phi_a(q) = sum_p {a_p q}_p``,
and the extension

    0 -> Z -> E_a -> Q -> 0,   E_a = {(q, y) : y = phi_a(q) mod Z},

with ``i(k) = (0, k)`` and ``j(q, y) = q``.  Tensoring with R identifies
``E_a`` with R^2; a rigidification is a splitting ``x -> (x, sigma*x)``, so a
:class:`RigidExt` is just ``(a, sigma)``.

Congruences between presentations are diagonal shifts ``(q, y) -> (q, y + d*q)``
taking ``E_a`` to ``E_{a + d}``; they respect splittings exactly when the
slopes differ by ``d`` as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from solenoid.adele import AdeleClass, FiniteAdele, canonicalize, format_items
from solenoid.exact_arith import TorusPoint, as_rat, frac_p, prime_factors

ZERO = Fraction(0)


def lift_phi(a: FiniteAdele, q) -> Fraction:
    """Canonical lift of ``phi_a(q)``: the sum of the principal parts ``{a_p q}_p``."""
    q = as_rat(q)
    total = ZERO
    primes = set(a.support) | set(prime_factors((a.tail * q).denominator))
    for p in sorted(primes):
        total += frac_p(a.component(p) * q, p).value
    return total


@dataclass(frozen=True)
class ExtPresentation:
    a: FiniteAdele = field(default_factory=FiniteAdele)

    def lift(self, q) -> Fraction:
        return lift_phi(self.a, q)

    def contains(self, q, y) -> bool:
        return (as_rat(y) - self.lift(q)).denominator == 1

    def __str__(self):
        return str(self.a)


TRIVIAL_PRES = ExtPresentation()


@dataclass(frozen=True)
class ExtElement:
    pres: ExtPresentation
    q: Fraction
    y: Fraction

    def __post_init__(self):
        q, y = as_rat(self.q), as_rat(self.y)
        if not self.pres.contains(q, y):
            raise ValueError(f"({q}, {y}) is not an element of E_a for a = {self.pres.a}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "y", y)

    def __add__(self, other: ExtElement) -> ExtElement:
        return el_add(self, other)

    def __neg__(self) -> ExtElement:
        return ExtElement(self.pres, -self.q, -self.y)

    def __sub__(self, other: ExtElement) -> ExtElement:
        return self + (-other)


def el_make(pres: ExtPresentation, q, y) -> ExtElement:
    return ExtElement(pres, q, y)


def el_add(e: ExtElement, f: ExtElement) -> ExtElement:
    if e.pres != f.pres:
        raise ValueError("elements of different extensions")
    return ExtElement(e.pres, e.q + f.q, e.y + f.y)


def el_zero(pres: ExtPresentation) -> ExtElement:
    return ExtElement(pres, ZERO, ZERO)


def i_embed(k: int, pres: ExtPresentation = TRIVIAL_PRES) -> ExtElement:
    return ExtElement(pres, ZERO, Fraction(k))


def j_project(e: ExtElement) -> Fraction:
    return e.q


def j_section(pres: ExtPresentation, q) -> ExtElement:
    """Set-theoretic section of ``j``: the element over ``q`` with the canonical lift."""
    q = as_rat(q)
    return ExtElement(pres, q, pres.lift(q))


@dataclass(frozen=True)
class RigidExt:
    pres: ExtPresentation = field(default_factory=ExtPresentation)
    sigma: Fraction = ZERO

    def __post_init__(self):
        object.__setattr__(self, "sigma", as_rat(self.sigma))

    @classmethod
    def of(cls, a: FiniteAdele, sigma=0) -> RigidExt:
        return cls(ExtPresentation(a), as_rat(sigma))

    @property
    def a(self) -> FiniteAdele:
        return self.pres.a

    def splitting(self, x) -> tuple[Fraction, Fraction]:
        x = as_rat(x)
        return x, self.sigma * x

    def __add__(self, other: RigidExt) -> RigidExt:
        return baer_sum(self, other)

    def __neg__(self) -> RigidExt:
        return RigidExt.of(-self.a, -self.sigma)

    def __str__(self):
        return format_items([("sigma", self.sigma), ("tail", self.a.tail)], self.a.overrides)


TRIVIAL = RigidExt()


@dataclass(frozen=True)
class CongruenceWitness:
    """The congruence ``(q, y) -> (q, y + d*q)`` from ``E_a`` to ``E_{a + d}``."""

    d: Fraction

    def __str__(self):
        return f"witness d={self.d}"


def delta(ext: RigidExt, e: ExtElement) -> Fraction:
    """Real number ``Delta(e)``: the fibre coordinate of ``e - s(j(e))``."""
    if e.pres != ext.pres:
        raise ValueError("element does not belong to this extension")
    return e.y - ext.sigma * e.q


def delta_bar(ext: RigidExt, q) -> TorusPoint:
    """The character ``Q -> R/Z`` induced by ``delta`` on ``E/Z = Q``."""
    q = as_rat(q)
    return TorusPoint.from_rat(lift_phi(ext.a, q) - ext.sigma * q)


def to_solenoid(ext: RigidExt) -> AdeleClass:
    return canonicalize(ext.sigma, ext.a)


def forget(ext: RigidExt) -> ExtPresentation:
    return ext.pres


def r_action(r, ext: RigidExt) -> RigidExt:
    return RigidExt(ext.pres, ext.sigma + as_rat(r))


# Baer sum


@dataclass(frozen=True)
class BaerElement:
    """A point ``(q, y0, y1)`` of the pullback of ``E_0 -> Q <- E_1``."""

    q: Fraction
    y0: Fraction
    y1: Fraction
    e0: RigidExt = field(default=TRIVIAL, repr=False)
    e1: RigidExt = field(default=TRIVIAL, repr=False)


def baer_pullback(e0: RigidExt, e1: RigidExt, q, y0, y1) -> BaerElement:
    q, y0, y1 = as_rat(q), as_rat(y0), as_rat(y1)
    for i, (ext, y) in enumerate(((e0, y0), (e1, y1))):
        if not ext.pres.contains(q, y):
            raise ValueError(f"({q}, {y}) is not an element of E_{i}")
    return BaerElement(q, y0, y1, e0, e1)


def _quotient_coords(q, y0, y1) -> tuple[Fraction, Fraction]:
    # Kills exactly the antidiagonal (0, k, -k).
    return q, y0 + y1


def baer_quotient(be: BaerElement) -> ExtElement:
    q, y = _quotient_coords(be.q, be.y0, be.y1)
    return ExtElement(ExtPresentation(be.e0.a + be.e1.a), q, y)


def baer_structural(e0: RigidExt, e1: RigidExt) -> RigidExt:
    """Rigidified extension built from the pullback, its quotient and the pushed splitting.

    The quotient of the pullback is identified with ``E_{a0 + a1}`` because the
    quotient map sends the canonical pullback point over ``q`` to a point with
    lift ``phi_{a0}(q) + phi_{a1}(q)``; the splitting ``x -> (s0(x), s1(x))``
    descends to slope ``y`` of the image of ``(1, sigma0, sigma1)``.
    """
    a = FiniteAdele(
        e0.a.tail + e1.a.tail,
        [(p, e0.a.component(p) + e1.a.component(p)) for p in sorted(set(e0.a.support) | set(e1.a.support))],
    )
    (_, s0), (_, s1) = e0.splitting(1), e1.splitting(1)
    x, slope = _quotient_coords(Fraction(1), s0, s1)
    return RigidExt.of(a, slope / x)


def baer_sum(e0: RigidExt, e1: RigidExt) -> RigidExt:
    return RigidExt.of(e0.a + e1.a, e0.sigma + e1.sigma)


# congruences


def congruent_z(p0: ExtPresentation, p1: ExtPresentation) -> CongruenceWitness | None:
    diff = p1.a - p0.a
    if diff.overrides:
        return None
    return CongruenceWitness(diff.tail)


def congruent_z0(e0: RigidExt, e1: RigidExt) -> CongruenceWitness | None:
    w = congruent_z(e0.pres, e1.pres)
    if w is None or e1.sigma - e0.sigma != w.d:
        return None
    return w


def apply_congruence(w: CongruenceWitness, e: ExtElement) -> ExtElement:
    target = ExtPresentation(e.pres.a + FiniteAdele.diagonal(w.d))
    y = e.y + w.d * e.q
    if not target.contains(e.q, y):
        raise ValueError(f"invalid congruence witness d={w.d}")
    return ExtElement(target, e.q, y)


def splitting_defect(e0: RigidExt, e1: RigidExt) -> Fraction | None:
    """Real homomorphism ``rho`` with ``r_action(rho, e0)`` congruent to ``e1``."""
    w = congruent_z(e0.pres, e1.pres)
    if w is None:
        return None
    return e1.sigma - e0.sigma - w.d


def exactness_witness(ext: RigidExt) -> Fraction | None:
    """``r`` with ``ext`` congruent to ``r_action(r, TRIVIAL)``, if the Z-class of ``ext`` is trivial."""
    w = congruent_z(TRIVIAL_PRES, ext.pres)
    if w is None:
        return None
    return ext.sigma - w.d


def from_parts(sigma=0, tail=0, overrides=()) -> RigidExt:
    return RigidExt.of(FiniteAdele(as_rat(tail), tuple(overrides)), sigma)

