"""Quadratic fields Q(sqrt d), their integers, and extensions of Q by o_K.

An extension of Q by o_K = Z + Z*omega is a pair of extensions of Q by Z, one
per basis coordinate, so ``OkExt`` is a point of the product of two
solenoids; multiplication by an integer of K acts through its 2x2 matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from solenoid.adele import AdeleClass, FiniteAdele, canonicalize
from solenoid.exact_arith import as_rat


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class QuadraticField:
    d: int
    basis_kind: str
    disc: int

    @property
    def omega(self) -> tuple[Fraction, Fraction]:
        """``omega`` in coordinates ``(x, y)`` meaning ``x + y*sqrt(d)``."""
        if self.basis_kind == "half":
            return Fraction(1, 2), Fraction(1, 2)
        return Fraction(0), Fraction(1)

    def omega_squared(self) -> tuple[int, int]:
        """``omega**2`` as ``(x, y)`` meaning ``x + y*omega``."""
        if self.basis_kind == "half":
            return (self.d - 1) // 4, 1
        return self.d, 0

    def mult_matrix(self, x: int, y: int) -> tuple[tuple[int, int], tuple[int, int]]:
        c, e = self.omega_squared()
        # columns: images of 1 and omega
        return ((x, y * c), (y, x + y * e))


def make_field(d: int) -> QuadraticField:
    if d in (0, 1) or not is_squarefree(d):
        raise ValueError(f"d = {d} must be a squarefree integer other than 0 and 1")
    if d % 4 == 1:
        return QuadraticField(d, "half", d)
    return QuadraticField(d, "sqrt", 4 * d)


def _mul(d: int, u, v):
    return (u[0] * v[0] + d * u[1] * v[1], u[0] * v[1] + u[1] * v[0])


def _trace(u) -> Fraction:
    # conjugates x + y*sqrt(d) and x - y*sqrt(d)
    return 2 * u[0]


def trace_gram(K: QuadraticField) -> tuple[tuple[tuple[int, int], tuple[int, int]], int]:
    """Gram matrix of the trace form on ``{1, omega}`` and its determinant.

    Computed in the coordinates ``x + y*sqrt(d)``, independently of the
    discriminant formula.
    """
    basis = [(Fraction(1), Fraction(0)), K.omega]
    rows = []
    for u in basis:
        row = []
        for v in basis:
            t = _trace(_mul(K.d, u, v))
            assert t.denominator == 1
            row.append(int(t))
        rows.append(tuple(row))
    g = tuple(rows)
    return g, g[0][0] * g[1][1] - g[0][1] * g[1][0]


def haar_mass_squared(K: QuadraticField) -> int:
    return abs(K.disc)


def haar_mass(K: QuadraticField) -> tuple[int, int]:
    """Total mass ``sqrt|D|`` as ``(c, r)`` meaning ``c*sqrt(r)``, with ``r`` squarefree."""
    n = haar_mass_squared(K)
    c = 1
    f = 2
    while f * f <= n:
        while n % (f * f) == 0:
            n //= f * f
            c *= f
        f += 1
    return c, n


def format_radical(c: int, r: int) -> str:
    if r == 1:
        return str(c)
    return f"sqrt({r})" if c == 1 else f"{c}*sqrt({r})"


@dataclass(frozen=True, eq=False)
class OkExt:
    """Rigidified extension of Q by o_K in coordinates of the basis ``{1, omega}``."""

    fins: tuple[FiniteAdele, FiniteAdele]
    sigmas: tuple[Fraction, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "fins", tuple(self.fins))
        object.__setattr__(self, "sigmas", tuple(as_rat(s) for s in self.sigmas))

    @classmethod
    def zero(cls) -> OkExt:
        return cls((FiniteAdele(), FiniteAdele()), (Fraction(0), Fraction(0)))

    def __add__(self, other: OkExt) -> OkExt:
        return OkExt(
            tuple(f + g for f, g in zip(self.fins, other.fins)),
            tuple(s + t for s, t in zip(self.sigmas, other.sigmas)),
        )

    def __neg__(self) -> OkExt:
        return OkExt(tuple(-f for f in self.fins), tuple(-s for s in self.sigmas))

    def __sub__(self, other: OkExt) -> OkExt:
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, OkExt):
            return NotImplemented
        return to_solenoid_vector(self) == to_solenoid_vector(other)

    def __hash__(self):
        return hash(to_solenoid_vector(self))


def to_solenoid_vector(e: OkExt) -> tuple[AdeleClass, AdeleClass]:
    return tuple(canonicalize(s, f) for s, f in zip(e.sigmas, e.fins))


def okext_add(e: OkExt, f: OkExt) -> OkExt:
    return e + f


def okext_neg(e: OkExt) -> OkExt:
    return -e


def okext_eq(e: OkExt, f: OkExt) -> bool:
    return e == f


def ok_action(K: QuadraticField, mult: tuple[int, int], e: OkExt) -> OkExt:
    """Multiply ``e`` by ``x + y*omega``."""
    (m00, m01), (m10, m11) = K.mult_matrix(*mult)
    f1, f2 = e.fins
    s1, s2 = e.sigmas
    return OkExt(
        (f1.scale(m00) + f2.scale(m01), f1.scale(m10) + f2.scale(m11)),
        (m00 * s1 + m01 * s2, m10 * s1 + m11 * s2),
    )

