"""Exit criteria, one test per criterion, each reporting a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` to see the lines inline; they are
also collected into the terminal summary.  ``python tests/test_acceptance.py``
runs the same checks without pytest.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time
from fractions import Fraction as F

from acceptance_log import RESULTS
from solenoid import sampling as S
from solenoid.adele import CLASS_ZERO, FA_ZERO, FiniteAdele, ext_class, real_inject
from solenoid.character import chi_class
from solenoid.exact_arith import bezout, decompose, global_frac_parts
from solenoid.extension import (
    TRIVIAL,
    ExtPresentation,
    RigidExt,
    baer_pullback,
    baer_quotient,
    baer_structural,
    baer_sum,
    congruent_z0,
    delta_bar,
    el_zero,
    exactness_witness,
    forget,
    r_action,
    to_solenoid,
)
from solenoid.numberfield import OkExt, haar_mass_squared, is_squarefree, make_field, trace_gram

SEED = 20131013


def report(n: int, title: str, ok: bool, detail: str = ""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}"
    if detail:
        line += f" ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _mod1(q: F) -> F:
    return q - (q.numerator // q.denominator)


def _p_integral(q: F, p: int) -> bool:
    return q.denominator % p != 0


# 1


def _worked_example(q: F, p: int, s: F) -> F:
    """-s*q + q0*beta/p**n mod 1, where q = q0 / (p**n q1) and alpha*p**n + beta*q1 = 1."""
    q0, den = q.numerator, q.denominator
    n = 0
    while den % p == 0:
        den //= p
        n += 1
    assert n > 0 and q0 % p != 0
    q1 = den
    _, alpha, beta = bezout(p**n, q1)
    assert alpha * p**n + beta * q1 == 1
    return _mod1(-s * q + F(q0 * beta, p**n))


def _rand_q_with_pole(rng: random.Random, p: int) -> F:
    while True:
        q = F(rng.randint(-(10**6), 10**6), rng.randint(1, 10**6))
        if q and q.denominator % p == 0:
            return q


def test_criterion_1_worked_example_formula():
    rng = random.Random(f"{SEED}:1")
    start = time.perf_counter()
    bad = 0
    for _ in range(500):
        p = rng.choice((2, 3, 5, 7, 11))
        q = _rand_q_with_pole(rng, p)
        s = F(rng.randint(-(10**3), 10**3), rng.randint(1, 10**3))
        if delta_bar(RigidExt.of(FiniteAdele(F(0), ((p, F(1)),)), s), q).value != _worked_example(q, p, s):
            bad += 1
    elapsed = time.perf_counter() - start
    report(1, "delta_bar matches -s*q + q0*beta*p^-n", bad == 0 and elapsed < 5, f"500 triples, {bad} mismatches, {elapsed:.2f}s")


# 2


def test_criterion_2_global_residue_identity():
    rng = random.Random(f"{SEED}:2")
    start = time.perf_counter()
    bad = 0
    for _ in range(1000):
        q = F(rng.randint(-(10**6), 10**6), rng.randint(1, 10**6))
        total = sum((r.value for r in global_frac_parts(q).values()), F(0))
        if (total - q).denominator != 1:
            bad += 1
    elapsed = time.perf_counter() - start
    report(2, "sum_p frac_p(q) = q mod 1", bad == 0 and elapsed < 5, f"1000 rationals, {bad} failures, {elapsed:.2f}s")


# 3


def _group_axioms(x, y, z, zero) -> bool:
    return (x + y) + z == x + (y + z) and x + y == y + x and x + zero == x and x + (-x) == zero


def test_criterion_3_group_laws():
    rng = random.Random(f"{SEED}:3")
    pres = ExtPresentation(FiniteAdele(F(1, 6), ((5, F(2, 25)), (7, F(-3, 7)))))
    families = {
        "FiniteAdele": (lambda: S.rand_fa(rng), FA_ZERO),
        "AdeleClass": (lambda: S.rand_class(rng), CLASS_ZERO),
        "ExtElement": (lambda: S.rand_element(rng, pres), el_zero(pres)),
        "RigidExt": (lambda: S.rand_rigid(rng), TRIVIAL),
        "OkExt": (lambda: S.rand_okext(rng), OkExt.zero()),
    }
    start = time.perf_counter()
    failures = {}
    for name, (gen, zero) in families.items():
        failures[name] = sum(not _group_axioms(gen(), gen(), gen(), zero) for _ in range(300))
    elapsed = time.perf_counter() - start
    ok = not any(failures.values()) and elapsed < 10
    report(3, "abelian group axioms in five families", ok, f"5 x 300 triples, failures {failures}, {elapsed:.2f}s")


# 4


def test_criterion_4_baer_coherence():
    rng = random.Random(f"{SEED}:4")
    start = time.perf_counter()
    bad = 0
    for _ in range(100):
        e0, e1 = S.rand_rigid(rng), S.rand_rigid(rng)
        total = baer_sum(e0, e1)
        structural = baer_structural(e0, e1)
        ok = congruent_z0(structural, total) is not None
        for _ in range(20):
            q = S.rand_rat(rng, 40)
            be = baer_pullback(e0, e1, q, e0.pres.lift(q) + rng.randint(-3, 3), e1.pres.lift(q) + rng.randint(-3, 3))
            img = baer_quotient(be)
            ok &= total.pres.contains(img.q, img.y) and structural.pres.contains(img.q, img.y)
            ok &= delta_bar(total, q) == delta_bar(e0, q) + delta_bar(e1, q)
        bad += not ok
    elapsed = time.perf_counter() - start
    report(4, "pullback-quotient congruent to baer_sum, delta_bar additive", bad == 0 and elapsed < 10, f"100 pairs x 20 q, {bad} failures, {elapsed:.2f}s")


# 5


def test_criterion_5_exact_sequence():
    rng = random.Random(f"{SEED}:5")
    bad_a = bad_b = bad_c = 0
    for _ in range(200):
        r = S.rand_rat(rng, 30)
        lifted = r_action(r, TRIVIAL)
        bad_a += not (ext_class(forget(lifted).a) == FA_ZERO and to_solenoid(lifted) == real_inject(r))

        e = S.rand_diagonal_rigid(rng)
        w = exactness_witness(e)
        bad_b += w is None or congruent_z0(r_action(w, TRIVIAL), e) is None

        e = S.rand_rigid(rng)
        r = S.rand_rat(rng, 30) if rng.random() < 0.8 else F(0)
        bad_c += (congruent_z0(r_action(r, e), e) is not None) != (r == 0)
    ok = bad_a == bad_b == bad_c == 0
    report(5, "exact sequence R -> Ext_Z0 -> Ext_Z", ok, f"200 samples; failures a={bad_a} b={bad_b} c={bad_c}")


# 6


def test_criterion_6_solenoid_isomorphism():
    rng = random.Random(f"{SEED}:6")
    bad_iff = bad_chi = congruent_pairs = 0
    for i in range(200):
        e0 = S.rand_rigid(rng)
        e1 = S.congruent_copy(rng, e0) if i % 2 == 0 else S.rand_rigid(rng)
        same = to_solenoid(e0) == to_solenoid(e1)
        witness = congruent_z0(e0, e1)
        congruent_pairs += witness is not None
        bad_iff += same != (witness is not None)
        for e in (e0, e1):
            x = to_solenoid(e)
            for _ in range(20):
                q = S.rand_rat(rng, 40)
                bad_chi += chi_class(x, q) != delta_bar(e, q)
    ok = bad_iff == bad_chi == 0 and congruent_pairs >= 100
    report(6, "to_solenoid equality iff Z0-congruence; chi = delta_bar", ok, f"200 pairs ({congruent_pairs} congruent), failures iff={bad_iff} chi={bad_chi}")


# 7


def test_criterion_7_haar_normalization():
    start = time.perf_counter()
    bad, count = [], 0
    for d in range(-50, 51):
        if d in (0, 1) or not is_squarefree(d):
            continue
        count += 1
        K = make_field(d)
        _, det = trace_gram(K)
        expected = d if d % 4 == 1 else 4 * d
        if not (K.disc == expected and haar_mass_squared(K) == abs(K.disc) == abs(det)):
            bad.append(d)
    elapsed = time.perf_counter() - start
    report(7, "haar_mass_squared = |disc| = |det trace_gram|", not bad and elapsed < 1, f"{count} fields, failures {bad}, {elapsed:.3f}s")


# 8


def test_criterion_8_decomposition():
    rng = random.Random(f"{SEED}:8")
    bad = 0
    for _ in range(300):
        p = rng.choice((2, 3, 5, 7, 11, 13))
        q = F(rng.randint(-(10**6), 10**6), rng.randint(1, 10**6))
        u, v = decompose(q, p)
        den = v.denominator
        while den % p == 0:
            den //= p
        bad += not (u - v == q and _p_integral(u, p) and 0 <= v < 1 and den == 1)
    report(8, "decompose gives q = u - v, u p-integral, v in Z[1/p] cap [0,1)", bad == 0, f"300 cases, {bad} failures")


# 9

GOLDEN = [
    (["frac", "-p", "5", "3/10"], "4/5\n"),
    (["delta", "--ext", "sigma=1/3; 5:1", "--q", "3/10"], "7/10\n"),
    (["congruent", "--rigid", "--e0", "5:1", "--e1", "tail=1/2; 5:3/2; sigma=1/2"], "witness d=1/2\n"),
    (["field", "--d", "5", "haar"], "haar_mass_squared=5\n"),
]


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "solenoid", *argv], capture_output=True)


def test_criterion_9_cli_golden():
    mismatches = []
    for argv, expected in GOLDEN:
        proc = _cli(*argv)
        if proc.returncode != 0 or proc.stdout != expected.encode():
            mismatches.append(" ".join(argv))
    st1, st2 = _cli("selftest", "--seed", "1", "--cases", "100"), _cli("selftest", "--seed", "1", "--cases", "100")
    selftest_ok = st1.returncode == 0 and st1.stdout == st2.stdout
    ok = not mismatches and selftest_ok
    report(9, "CLI golden outputs and selftest", ok, f"golden mismatches {mismatches}, selftest exit {st1.returncode}")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

