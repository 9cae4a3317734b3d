import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import from_sympy, to_sympy, truncate_sympy
from eqpic.chern import (
    KClassRep,
    binom,
    chern_of_difference,
    euler_omega_twist,
    schur_delta,
    standard_bundle,
    standard_ring,
    total_segre,
    twist_chern,
    twist_segre,
)
from eqpic.gring import RingSpec
from eqpic.symcalc import omega_chern_via_roots

R = RingSpec.of([("t", 1), ("x", 1), ("y", 1), ("c1", 1), ("c2", 2), ("c3", 3)], truncation=4)


def P(s):
    return R.parse(s)


def bundle(r, *classes):
    return KClassRep(r, R.one + sum((P(c) for c in classes), R.zero))


def test_binom_vanishes_outside_range():
    assert binom(3, -1) == 0
    assert binom(3, 4) == 0
    assert binom(5, 2) == 10
    assert binom(0, 0) == 1


def test_segre_examples():
    T = KClassRep(1, P("1 + x"))
    assert total_segre(T) == P("1 - x + x^2 - x^3 + x^4")
    assert total_segre(KClassRep.trivial(R, 3)) == 1
    s = total_segre(bundle(2, "c1", "c2"))
    assert s.homogeneous(2) == P("c1^2 - c2")


def test_kclass_needs_unit_constant():
    with pytest.raises(ValueError):
        KClassRep(1, P("2 + x"))


def test_twist_by_zero_is_identity():
    E = bundle(3, "c1", "c2", "c3")
    assert twist_chern(E, R.zero).total_chern == E.total_chern
    assert twist_segre(E, R.zero, 2) == total_segre(E).homogeneous(2)


def test_line_bundle_twist():
    L = KClassRep.line(P("x"))
    assert twist_chern(L, P("y")).total_chern == P("1 + x + y")


def test_dual_standard_twist_matches_closed_sum():
    n = 2
    S = standard_ring(n)
    E = standard_bundle(n, S)
    got = twist_chern(E.dual(), -S.var("t"))
    c = [S.one] + [S.var(f"c{i}") for i in range(1, n + 2)]
    t = S.var("t")
    for i in range(n + 2):
        want = S.zero
        for j in range(i + 1):
            want = want + c[j] * t ** (i - j) * ((-1) ** i * binom(n + 1 - j, i - j))
        assert got.c(i) == want


def test_twist_against_chern_roots():
    # E = L1 + L2 with roots x, y; E (x) M has roots x + t, y + t
    E = KClassRep.line(P("x")) + KClassRep.line(P("y"))
    assert twist_chern(E, P("t")).total_chern == (1 + P("x") + P("t")) * (1 + P("y") + P("t"))


def test_twist_segre_against_inverse():
    E = bundle(3, "c1", "c2", "c3")
    lam = P("2*t - x")
    s = total_segre(twist_chern(E, lam))
    for p in range(R.truncation + 1):
        assert twist_segre(E, lam, p) == s.homogeneous(p)


def test_twist_segre_for_tautological_sub_bundle():
    # rank-2 T with s(T) = 1/(1 + tau1 + tau2); s_p(T (x) O(-d t)) expanded by hand
    Q = RingSpec.of([("t", 1), ("a", 1), ("b", 2)], truncation=4)
    T = KClassRep(2, Q.parse("1 + a + b"))
    d = 3
    s = total_segre(T)
    for p in range(5):
        want = Q.zero
        for k in range(p + 1):
            want = want + s.homogeneous(k) * Q.var("t") ** (p - k) * (binom(1 + p, 1 + k) * d ** (p - k))
        assert twist_segre(T, Q.var("t") * (-d), p) == want


def test_chern_of_difference_edge_cases():
    E = bundle(3, "c1", "c2", "c3")
    triv = KClassRep.trivial(R)
    assert chern_of_difference(E, triv, 2) == P("c2")
    assert chern_of_difference(E, E, 0) == 1
    for e in range(1, 5):
        assert chern_of_difference(E, E, e) == 0


@pytest.mark.parametrize(
    "p, q, expected",
    [(1, 2, "c2"), (1, 3, "c3"), (2, 1, "c1^2 - c2"), (2, 0, "1"), (2, 2, "c2^2 - c1*c3")],
)
def test_schur_delta(p, q, expected):
    cls = [R.one, P("c1"), P("c2"), P("c3")]
    assert schur_delta(p, q, cls) == P(expected)


def test_euler_omega_small_n():
    S = standard_ring(1)
    assert euler_omega_twist(1) == S.parse("1 - c1 - 2*t + c2 + c1*t + t^2")


@pytest.mark.parametrize("n", range(1, 7))
def test_euler_omega_nonequivariant(n):
    x = euler_omega_twist(n)
    S = x.ring
    rest = S.zero
    for exps, c in x.items():
        if not any(exps[1:]):
            rest = rest + S.monomial({"t": exps[0]}, c)
    t = S.var("t")
    assert rest == sum(((-t) ** i * binom(n + 1, i) for i in range(n + 2)), S.zero)


@pytest.mark.parametrize("n", range(1, 7))
def test_euler_omega_dual_route(n):
    assert euler_omega_twist(n) == omega_chern_via_roots(n, standard_ring(n))


coeffs = st.integers(-4, 4)


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs, coeffs, st.integers(1, 3))
def test_twist_inversion(a, b, c, r):
    E = KClassRep(r, R.one + P("c1") * a + P("c2") * b + P("x*y") * c)
    lam = P("t") * a + P("x") * (b + 1)
    back = twist_chern(twist_chern(E, lam), -lam)
    assert back.total_chern.homogeneous(0) == 1
    # twisting by lam then -lam recovers E in every degree up to its rank
    for i in range(r + 1):
        assert back.c(i) == E.c(i)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(coeffs, coeffs, coeffs), min_size=1, max_size=4))
def test_whitney_on_line_sums(rows):
    x, y, t = sp.symbols("x y t")
    total = KClassRep.trivial(R)
    ref = sp.Integer(1)
    for a, b, c in rows:
        lam = P("x") * a + P("y") * b + P("t") * c
        total = total + KClassRep.line(lam)
        ref *= 1 + a * x + b * y + c * t
    assert total.rank == len(rows)
    assert total.total_chern == from_sympy(truncate_sympy(ref, R), R)


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs, coeffs)
def test_segre_times_chern_is_one(a, b, c):
    E = KClassRep(3, R.one + P("c1") * a + P("c2") * b + P("c3") * c + P("x^2"))
    assert total_segre(E) * E.total_chern == 1


def test_schur_first_row_is_class():
    cls = [R.one, P("c1"), P("c2"), P("c3")]
    for q in range(len(cls)):
        assert schur_delta(1, q, cls) == cls[q]


def test_schur_matches_sympy_determinant():
    cls = [R.one, P("c1"), P("c2"), P("c3")]
    syms = [sp.Integer(1)] + [to_sympy(c) for c in cls[1:]]

    def c(k):
        return syms[k] if 0 <= k < len(syms) else sp.Integer(0)

    for p in (2, 3):
        for q in range(3):
            M = sp.Matrix(p, p, lambda i, j: c(q + j - i))
            assert schur_delta(p, q, cls) == from_sympy(truncate_sympy(M.det(), R), R)
