"""Finite adeles with rational entries and canonical representatives of A_Q/Q.

A :class:`FiniteAdele` is a default ``tail`` value taken at every prime plus
finitely many prime-indexed overrides.  An :class:`AdeleClass` is a pair
``(real, fin)`` with ``fin.tail == 0``.  Subtracting the diagonal copy of
``tail`` puts any rational-entry adele in this form, and distinct canonical
pairs are distinct classes, so equality is literal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from solenoid.exact_arith import as_rat, format_rat, is_prime

ZERO = Fraction(0)


def _normal_overrides(tail: Fraction, entries: Iterable[tuple[int, Fraction]]):
    seen = set()
    out = []
    for p, r in entries:
        if p in seen:
            raise ValueError(f"duplicate prime {p}")
        seen.add(p)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        r = as_rat(r)
        if r != tail:
            out.append((p, r))
    return tuple(sorted(out))


@dataclass(frozen=True)
class FiniteAdele:
    tail: Fraction = ZERO
    overrides: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        tail = as_rat(self.tail)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "overrides", _normal_overrides(tail, self.overrides))

    @classmethod
    def diagonal(cls, q) -> FiniteAdele:
        return cls(as_rat(q))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.overrides)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.overrides)

    def component(self, p: int) -> Fraction:
        for key, r in self.overrides:
            if key == p:
                return r
        return self.tail

    def _combine(self, other: FiniteAdele, op) -> FiniteAdele:
        primes = sorted(set(self.support) | set(other.support))
        return FiniteAdele(
            op(self.tail, other.tail),
            [(p, op(self.component(p), other.component(p))) for p in primes],
        )

    def __add__(self, other: FiniteAdele) -> FiniteAdele:
        return self._combine(other, lambda x, y: x + y)

    def __sub__(self, other: FiniteAdele) -> FiniteAdele:
        return self._combine(other, lambda x, y: x - y)

    def __neg__(self) -> FiniteAdele:
        return FiniteAdele(-self.tail, [(p, -r) for p, r in self.overrides])

    def scale(self, c) -> FiniteAdele:
        c = as_rat(c)
        return FiniteAdele(c * self.tail, [(p, c * r) for p, r in self.overrides])

    def is_zero(self) -> bool:
        return self.tail == 0 and not self.overrides

    def __str__(self):
        return format_items([("tail", self.tail)], self.overrides)


FA_ZERO = FiniteAdele()


def fa_make(tail, entries: Iterable[tuple[int, Fraction]] | Mapping[int, Fraction] = ()) -> FiniteAdele:
    if isinstance(entries, Mapping):
        entries = entries.items()
    return FiniteAdele(as_rat(tail), tuple(entries))


def fa_add(a: FiniteAdele, b: FiniteAdele) -> FiniteAdele:
    return a + b


def fa_neg(a: FiniteAdele) -> FiniteAdele:
    return -a


def fa_eq(a: FiniteAdele, b: FiniteAdele) -> bool:
    return a == b


def component(a: FiniteAdele, p: int) -> Fraction:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return a.component(p)


@dataclass(frozen=True)
class AdeleClass:
    """Canonical representative of a point of the solenoid A_Q/Q."""

    real: Fraction = ZERO
    fin: FiniteAdele = field(default_factory=FiniteAdele)

    def __post_init__(self):
        object.__setattr__(self, "real", as_rat(self.real))
        if self.fin.tail != 0:
            raise ValueError("AdeleClass needs tail 0; use canonicalize()")

    def __add__(self, other: AdeleClass) -> AdeleClass:
        return canonicalize(self.real + other.real, self.fin + other.fin)

    def __neg__(self) -> AdeleClass:
        return canonicalize(-self.real, -self.fin)

    def __sub__(self, other: AdeleClass) -> AdeleClass:
        return self + (-other)

    def is_zero(self) -> bool:
        return self.real == 0 and not self.fin.overrides

    def __str__(self):
        return format_items([("real", self.real), ("tail", self.fin.tail)], self.fin.overrides)

    def to_json(self) -> dict:
        return adele_json(self.real, self.fin)


CLASS_ZERO = AdeleClass()


def canonicalize(real, a: FiniteAdele) -> AdeleClass:
    t = a.tail
    return AdeleClass(as_rat(real) - t, FiniteAdele(ZERO, [(p, r - t) for p, r in a.overrides]))


def class_add(x: AdeleClass, y: AdeleClass) -> AdeleClass:
    return x + y


def class_neg(x: AdeleClass) -> AdeleClass:
    return -x


def class_eq(x: AdeleClass, y: AdeleClass) -> bool:
    return x == y


def is_diagonal(real, a: FiniteAdele) -> Fraction | None:
    """Return ``q`` if ``(real, a)`` is the diagonal image of the rational ``q``."""
    real = as_rat(real)
    if not a.overrides and a.tail == real:
        return real
    return None


def real_inject(r) -> AdeleClass:
    return AdeleClass(as_rat(r), FA_ZERO)


def ext_class(a: FiniteAdele) -> FiniteAdele:
    """Representative of ``a`` modulo the diagonal rationals, with tail 0."""
    return canonicalize(ZERO, a).fin


# text and JSON forms


def format_items(keyed, overrides) -> str:
    parts = [f"{k}={format_rat(v)}" for k, v in keyed]
    parts += [f"{p}:{format_rat(r)}" for p, r in sorted(overrides)]
    return "; ".join(parts)


def adele_json(real, fin: FiniteAdele) -> dict:
    return {
        "real": format_rat(real),
        "tail": format_rat(fin.tail),
        "overrides": {str(p): format_rat(r) for p, r in fin.overrides},
    }


def class_from_json(obj) -> AdeleClass:
    """Inverse of :meth:`AdeleClass.to_json`; non-canonical data is canonicalized."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    fin = fa_make(
        as_rat(obj.get("tail", "0")),
        [(int(p), as_rat(r)) for p, r in obj.get("overrides", {}).items()],
    )
    return canonicalize(as_rat(obj.get("real", "0")), fin)
