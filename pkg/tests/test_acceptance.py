"""
Acceptance gate: one check per criterion, exact integer comparisons, wall-clock limits.

Run under pytest, or directly with ``python3 tests/test_acceptance.py`` for the
summary lines alone.
"""

from __future__ import annotations

import subprocess
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eqpic.abgroup import GroupPresentation, quotient_structure, smith_normal_form  # noqa: E402
from eqpic.chern import euler_omega_twist, standard_ring  # noqa: E402
from eqpic.moduli import (  # noqa: E402
    FabSetup,
    GdmnSetup,
    f_closed_form,
    f_divisor_class,
    g_closed_form,
    g_divisor_class,
    genus_pipeline,
)
from eqpic.moduli import fab, gdmn  # noqa: E402
from eqpic.moduli.gdmn import g_raw_pushforward  # noqa: E402
from eqpic.symcalc import omega_chern_via_roots  # noqa: E402
from oracles import (  # noqa: E402
    classical_discriminant_degree,
    coset_count,
    determinantal_divisors,
    matmul,
    random_matrices,
    sympy_det,
)


def _cold():
    fab.f_singular_class.cache_clear()
    gdmn._singular_class.cache_clear()


def c1_anchor():
    s = FabSetup(2, 3, 3)
    want = s.divisor_ring.parse("33*u + 34*v - 42*c1")
    got, closed = f_divisor_class(s), f_closed_form(s)
    return got == want and closed == want, f"pipeline {got}; closed form {closed}"


def c2_genus3():
    r = genus_pipeline(3)
    open_ok = r.open_structure.rank == 0 and r.open_structure.invariant_factors == (9,)
    c1_gen = r.open_coordinates({"c1": 1})
    gen_ok = all(not r.open_coordinates({"c1": k}).is_zero() for k in range(1, 9)) and not c1_gen.is_zero()
    ok = open_ok and gen_ok and r.structure.rank == 1 and r.structure.is_free() and r.divisor_multiples == {"H3": 9}
    return ok, f"Pic(U3) = {r.open_structure} on c1, Pic(M3) = {r.structure}, H3 -> {r.divisor_multiples['H3']}"


def c3_genus5():
    r = genus_pipeline(5)
    open_ok = r.open_structure.rank == 0 and r.open_structure.invariant_factors == (8,)
    gen_ok = all(not r.open_coordinates({"c1": k}).is_zero() for k in range(1, 8))
    ok = open_ok and gen_ok and r.structure.is_free() and r.divisor_multiples == {"T5": 8}
    return ok, f"Pic(U5) = {r.open_structure} on c1, T5 -> {r.divisor_multiples['T5']}"


def c4_genus4():
    r = genus_pipeline(4)
    delta_ok = str(r.extra_classes["Delta2"]) == "4*u - 2*c1"
    ok = r.structure.rank == 1 and r.structure.is_free() and delta_ok and r.divisor_multiples == {"M4ev": 34}
    return ok, f"Pic(M4) = {r.structure}, M4ev -> {r.divisor_multiples['M4ev']}"


def c5_closed_forms():
    bad = []
    count = 0
    for n in range(3, 6):
        for b in range(2, 5):
            for a in range(1, b):
                s = FabSetup(a, b, n)
                count += 1
                if f_closed_form(s) != f_divisor_class(s):
                    bad.append(s.label())
    for n in range(2, 6):
        for m in range(1, n):
            for d in range(1, 5):
                for char in (0, 2):
                    s = GdmnSetup(d, m, n, char)
                    count += 1
                    if g_closed_form(s) != g_divisor_class(s):
                        bad.append(s.label())
    return not bad, f"{count} points, mismatches: {bad or 'none'}"


def c6_omega_routes():
    bad = [n for n in range(1, 7) if omega_chern_via_roots(n, standard_ring(n)) != euler_omega_twist(n)]
    return not bad, f"n = 1..6, mismatches: {bad or 'none'}"


def c7_hypersurface_degree():
    bad = []
    for d in range(1, 6):
        for n in range(2, 6):
            got = g_divisor_class(GdmnSetup(d, 1, n)).coefficient({"s1": 1})
            if got != classical_discriminant_degree(d, n):
                bad.append((d, n, got))
    return not bad, f"d <= 5, 2 <= n <= 5, mismatches: {bad or 'none'}"


def c8_alpha():
    s = GdmnSetup(2, 1, 3, 2)
    raw = g_raw_pushforward(s)
    even = all(c % 2 == 0 for c in raw.linear_coefficients().values())
    halved = g_divisor_class(s)
    exact = halved * 2 == raw and str(halved) == "2*s1 - c1"
    unchanged = all(
        g_divisor_class(GdmnSetup(d, m, n, ch)) == g_raw_pushforward(GdmnSetup(d, m, n, ch))
        for n in range(2, 6) for m in range(1, n) for d in range(1, 5) for ch in (0, 2, 3)
        if not (ch == 2 and (n - m) % 2 == 0)
    )
    return even and exact and unchanged, f"raw {raw}, halved {halved}, alpha=1 regimes unchanged: {unchanged}"


def c9_snf():
    problems = []
    enumerated = 0
    for A in random_matrices(200):
        D, U, V = smith_normal_form(A)
        if matmul(matmul(U, A), V) != D:
            problems.append(("UAV", A))
            continue
        if abs(sympy_det(U)) != 1 or abs(sympy_det(V)) != 1:
            problems.append(("unimodular", A))
        diag = [D[i][i] for i in range(min(len(A), len(A[0])))]
        nz = [x for x in diag if x]
        if any(y % x for x, y in zip(nz, nz[1:])) or diag[: len(nz)] != nz or any(x < 0 for x in diag):
            problems.append(("chain", A))
        g = determinantal_divisors(A)
        rank = sum(1 for x in g if x)
        prod = 1
        for x in nz:
            prod *= x
        if len(nz) != rank or (rank and prod != g[rank - 1]):
            problems.append(("minors", A))
        if len(A) == len(A[0]):
            det = sympy_det(A)
            if det and prod != abs(det):
                problems.append(("det", A))
            if det and abs(det) <= 200:
                enumerated += 1
                G = quotient_structure(GroupPresentation(tuple(f"g{i}" for i in range(len(A))), tuple(map(tuple, A))))
                if coset_count(A) != G.order():
                    problems.append(("cosets", A))
    return not problems, f"200 matrices, {enumerated} orders checked by coset enumeration, problems: {problems or 'none'}"


def c10_determinism():
    cmd = [sys.executable, "-m", "eqpic", "genus", "4", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    return a == b and len(a) > 0, f"{len(a)} bytes, identical: {a == b}"


CRITERIA = [
    (1, "F-family anchor", c1_anchor, 1.0),
    (2, "genus 3", c2_genus3, 1.0),
    (3, "genus 5", c3_genus5, 1.0),
    (4, "genus 4", c4_genus4, 1.0),
    (5, "closed forms vs pipeline", c5_closed_forms, 30.0),
    (6, "dual-route Chern classes", c6_omega_routes, 10.0),
    (7, "classical discriminant degree", c7_hypersurface_degree, None),
    (8, "alpha regime", c8_alpha, None),
    (9, "Smith normal form suite", c9_snf, None),
    (10, "determinism of genus 4 JSON", c10_determinism, None),
]


def evaluate(check, limit):
    _cold()
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    timed_ok = limit is None or elapsed < limit
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    return ok and timed_ok, f"{detail}; {elapsed:.3f} s{budget}"


@pytest.mark.parametrize("number, title, check, limit", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, limit, capsys):
    ok, detail = evaluate(check, limit)
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for number, title, check, limit in CRITERIA:
        ok, detail = evaluate(check, limit)
        failures += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {detail}")
    sys.exit(1 if failures else 0)
