"""Invariant suites run by ``solenoid selftest`` and by the test suite."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable

from solenoid import adele, character, extension, numberfield
from solenoid import sampling as S
from solenoid.adele import CLASS_ZERO, FA_ZERO, FiniteAdele, canonicalize
from solenoid.exact_arith import (
    TorusPoint,
    bezout,
    decompose,
    frac_p,
    global_frac_parts,
    is_p_integral,
)
from solenoid.extension import TRIVIAL
from solenoid.syntax import parse_class, parse_rigid

SUITES: dict[str, Callable] = {}


def suite(fn):
    SUITES[fn.__name__] = fn
    return fn


def _pp_den(r: Fraction, p: int) -> bool:
    d = r.denominator
    while d % p == 0:
        d //= p
    return d == 1


# exact_arith


@suite
def frac_p_unique(rng):
    q, p = S.rand_rat(rng, 500), rng.choice(S.SMALL_PRIMES)
    r = frac_p(q, p).value
    assert 0 <= r < 1 and _pp_den(r, p) and is_p_integral(q - r, p)
    pn = 1
    while not is_p_integral(q * pn, p):
        pn *= p
    hits = [Fraction(c, pn) for c in range(pn) if is_p_integral(q - Fraction(c, pn), p)]
    assert hits == [r]


@suite
def frac_p_additive(rng):
    q, q2, p = S.rand_rat(rng, 500), S.rand_rat(rng, 500), rng.choice(S.SMALL_PRIMES)
    lhs = frac_p(q + q2, p).value - frac_p(q, p).value - frac_p(q2, p).value
    assert lhs.denominator == 1


@suite
def global_residue(rng):
    q = S.rand_rat(rng, 10**4)
    total = sum((r.value for r in global_frac_parts(q).values()), Fraction(0))
    assert (total - q).denominator == 1


@suite
def decompose_parts(rng):
    q, p = S.rand_rat(rng, 500), rng.choice(S.SMALL_PRIMES)
    u, v = decompose(q, p)
    assert u - v == q and is_p_integral(u, p) and 0 <= v < 1 and _pp_den(v, p)


@suite
def bezout_identity(rng):
    m, n = rng.randint(1, 10**6), rng.randint(1, 10**6)
    g, a, b = bezout(m, n)
    assert a * m + b * n == g and m % g == 0 and n % g == 0 and 0 <= b < m // g


@suite
def torus_group(rng):
    x, y, z = (TorusPoint.from_rat(S.rand_rat(rng)) for _ in range(3))
    zero = TorusPoint(Fraction(0))
    assert (x + y) + z == x + (y + z) and x + y == y + x
    assert x + zero == x and x + (-x) == zero


# adele


@suite
def finite_adele_group(rng):
    a, b, c = S.rand_fa(rng), S.rand_fa(rng), S.rand_fa(rng)
    assert (a + b) + c == a + (b + c) and a + b == b + a
    assert a + FA_ZERO == a and a + (-a) == FA_ZERO


@suite
def class_group(rng):
    x, y, z = S.rand_class(rng), S.rand_class(rng), S.rand_class(rng)
    assert (x + y) + z == x + (y + z) and x + y == y + x
    assert x + CLASS_ZERO == x and x + (-x) == CLASS_ZERO


@suite
def canonical_forms(rng):
    real, a, q = S.rand_rat(rng, 20), S.rand_fa(rng), S.rand_rat(rng, 20)
    x = canonicalize(real, a)
    assert canonicalize(x.real, x.fin) == x
    assert canonicalize(real + q, a + FiniteAdele.diagonal(q)) == x
    assert adele.ext_class(a + FiniteAdele.diagonal(q)) == adele.ext_class(a)
    y = S.rand_class(rng)
    diff = x - y
    found = adele.is_diagonal(diff.real, diff.fin)
    assert (found is not None) == (x == y) and found in (None, 0)


@suite
def real_inject_hom(rng):
    r, s = S.rand_rat(rng), S.rand_rat(rng)
    assert adele.real_inject(r + s) == adele.real_inject(r) + adele.real_inject(s)
    assert (adele.real_inject(r) == CLASS_ZERO) == (r == 0)


# character


@suite
def chi_homomorphism(rng):
    x, y = S.rand_class(rng), S.rand_class(rng)
    q, q2 = S.rand_rat(rng, 30), S.rand_rat(rng, 30)
    chi = character.chi_class
    assert chi(x, q + q2) == chi(x, q) + chi(x, q2)
    assert chi(x + y, q) == chi(x, q) + chi(y, q)
    n, m = rng.randint(1, 30), rng.randint(1, 30)
    assert chi(x, Fraction(1, n * m)) * n == chi(x, Fraction(1, m))


@suite
def chi_diagonal_invariance(rng):
    real, a = S.rand_rat(rng, 20), S.rand_fa(rng)
    d, q = S.rand_rat(rng, 20), S.rand_rat(rng, 30)
    lhs = character.chi(real + d, a + FiniteAdele.diagonal(d), q)
    assert lhs == character.chi(real, a, q)


@suite
def chi_separation(rng):
    x = S.rand_class(rng)
    q = character.separating_point(x)
    assert (q is None) == x.is_zero() == character.chi_is_trivial(x)


# extension


@suite
def membership(rng):
    pres = extension.ExtPresentation(S.rand_fa(rng))
    e, f = S.rand_element(rng, pres), S.rand_element(rng, pres)
    g = e + f
    assert pres.contains(g.q, g.y)
    k = rng.randint(-9, 9)
    i = extension.i_embed(k, pres)
    assert extension.j_project(i) == 0
    q = S.rand_rat(rng)
    assert extension.j_project(extension.j_section(pres, q)) == q
    try:
        extension.ExtElement(pres, 0, Fraction(1, 2))
    except ValueError:
        pass
    else:
        raise AssertionError("kernel of j must be integral")


@suite
def delta_additive(rng):
    e = S.rand_rigid(rng)
    q, q2 = S.rand_rat(rng, 30), S.rand_rat(rng, 30)
    db = extension.delta_bar
    assert db(e, q + q2) == db(e, q) + db(e, q2)
    k = rng.randint(-9, 9)
    assert extension.delta(e, extension.i_embed(k, e.pres)) == k
    el = S.rand_element(rng, e.pres)
    assert TorusPoint.from_rat(extension.delta(e, el)) == db(e, el.q)
    assert character.chi_class(extension.to_solenoid(e), q) == db(e, q)


@suite
def baer_coherence(rng):
    e0, e1 = S.rand_rigid(rng), S.rand_rigid(rng)
    total = extension.baer_sum(e0, e1)
    assert extension.congruent_z0(extension.baer_structural(e0, e1), total) is not None
    q = S.rand_rat(rng, 30)
    y0, y1 = e0.pres.lift(q) + rng.randint(-3, 3), e1.pres.lift(q) + rng.randint(-3, 3)
    img = extension.baer_quotient(extension.baer_pullback(e0, e1, q, y0, y1))
    assert total.pres.contains(img.q, img.y)
    db = extension.delta_bar
    assert db(total, q) == db(e0, q) + db(e1, q)


@suite
def congruence_maps(rng):
    e0 = S.rand_rigid(rng)
    e1 = S.congruent_copy(rng, e0)
    w = extension.congruent_z0(e0, e1)
    assert w is not None and extension.to_solenoid(e0) == extension.to_solenoid(e1)
    el, el2 = S.rand_element(rng, e0.pres), S.rand_element(rng, e0.pres)
    img = extension.apply_congruence(w, el)
    assert img.pres == e1.pres and img.q == el.q
    assert extension.apply_congruence(w, el + el2) == img + extension.apply_congruence(w, el2)
    k = rng.randint(-9, 9)
    assert extension.apply_congruence(w, extension.i_embed(k, e0.pres)).y == k


@suite
def free_transitive_action(rng):
    e, r = S.rand_rigid(rng), S.rand_rat(rng, 20)
    moved = extension.r_action(r, e)
    assert extension.forget(moved) == extension.forget(e)
    assert (extension.congruent_z0(moved, e) is not None) == (r == 0)
    e1 = S.congruent_copy(rng, e)
    e1 = extension.r_action(S.rand_rat(rng, 20), e1)
    rho = extension.splitting_defect(e, e1)
    assert rho is not None
    assert extension.congruent_z0(extension.r_action(rho, e), e1) is not None


@suite
def exact_sequence(rng):
    r = S.rand_rat(rng, 20)
    lifted = extension.r_action(r, TRIVIAL)
    assert adele.ext_class(extension.forget(lifted).a) == FA_ZERO
    assert extension.to_solenoid(lifted) == adele.real_inject(r)
    e = S.rand_diagonal_rigid(rng)
    w = extension.exactness_witness(e)
    assert w is not None and extension.congruent_z0(extension.r_action(w, TRIVIAL), e) is not None
    e = S.rand_rigid(rng)
    trivial_class = adele.ext_class(e.a) == FA_ZERO
    assert (extension.exactness_witness(e) is not None) == trivial_class


# numberfield


@suite
def okext_laws(rng):
    x, y, z = S.rand_okext(rng), S.rand_okext(rng), S.rand_okext(rng)
    zero = numberfield.OkExt.zero()
    assert (x + y) + z == x + (y + z) and x + y == y + x
    assert x + zero == x and x + (-x) == zero
    d = rng.choice([-7, -5, -3, -2, -1, 2, 3, 5, 6, 13, 17, 21])
    K = numberfield.make_field(d)
    act = numberfield.ok_action
    assert act(K, (1, 0), x) == x
    m = (rng.randint(-4, 4), rng.randint(-4, 4))
    n = (rng.randint(-4, 4), rng.randint(-4, 4))
    assert act(K, m, x + y) == act(K, m, x) + act(K, m, y)
    assert act(K, (m[0] + n[0], m[1] + n[1]), x) == act(K, m, x) + act(K, n, x)
    assert act(K, (0, 1), act(K, (0, 1), x)) == act(K, K.omega_squared(), x)


@suite
def discriminants(rng):
    d = rng.randint(-50, 50)
    if d in (0, 1) or not numberfield.is_squarefree(d):
        return
    K = numberfield.make_field(d)
    _, det = numberfield.trace_gram(K)
    assert det == K.disc == (d if d % 4 == 1 else 4 * d)
    assert numberfield.haar_mass_squared(K) == abs(det)


# text round trips


@suite
def round_trips(rng):
    x = S.rand_class(rng)
    assert parse_class(str(x)) == x
    assert adele.class_from_json(json.dumps(x.to_json())) == x
    e = S.rand_rigid(rng)
    assert parse_rigid(str(e)) == e


def run_suites(seed: int, cases: int, names=None) -> list[tuple[str, int, int, str]]:
    """Run each suite ``cases`` times; return ``(name, passed, cases, first_error)`` rows."""
    rows = []
    for name in names or SUITES:
        fn = SUITES[name]
        rng = S.make_rng(seed, name)
        passed, first = 0, ""
        for _ in range(cases):
            try:
                fn(rng)
            except Exception as exc:  # report, keep counting
                first = first or f"{type(exc).__name__}: {exc}"
            else:
                passed += 1
        rows.append((name, passed, cases, first))
    return rows

