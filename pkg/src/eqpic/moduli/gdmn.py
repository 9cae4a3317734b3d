"""
Discriminant of complete intersections of ``m`` degree-``d`` hypersurfaces in ``P^n``.

On ``Gr(m, W_d) x P^n`` the universal complete intersection is the zero
locus of a section of ``T^vee (x) O(d)``, and its singular locus has class

    [X] * c_e([Omega^1_{P^n}] - [T (x) O(-d)]),   e = n - m + 1.

Pushing forward along ``P^n`` and writing ``s1 = -c_1(T)`` gives ``alpha``
times the discriminant class, where ``alpha = 2`` exactly in characteristic
two with ``n - m`` even.
"""

from __future__ import annotations

from functools import lru_cache

from ..chern import (
    KClassRep,
    binom,
    chern_of_difference,
    euler_omega_twist,
    twist_chern,
    twist_segre,
)
from ..gring import Poly
from ..push import BundleRelation, RelationList, pushforward_t, relation_coefficients
from .setups import GdmnSetup

__all__ = [
    "AlphaDivisionError",
    "tautological_bundle",
    "g_complete_intersection_class",
    "g_singular_class",
    "alpha_factor",
    "g_raw_pushforward",
    "g_divisor_class",
    "g_closed_form",
    "g_relations",
]


class AlphaDivisionError(ArithmeticError):
    """The pushforward is not divisible by the multiplicity ``alpha``."""


def tautological_bundle(s: GdmnSetup) -> KClassRep:
    R = s.ring
    total = R.one
    for p in range(1, s.m + 1):
        total = total + R.var(f"tau{p}")
    return KClassRep(s.m, total)


def g_complete_intersection_class(s: GdmnSetup) -> Poly:
    """``[X] = c_m(T^vee (x) O(d))``."""
    R = s.ring
    tw = twist_chern(tautological_bundle(s).dual(), R.var("t") * s.d)
    return tw.c(s.m)


def g_singular_class(s: GdmnSetup, route: str = "chern") -> Poly:
    """Class of the singular locus, homogeneous of degree ``n + 1`` in ``t, c_i, tau_p``.

    ``route="chern"`` inverts the total Chern class of ``T (x) O(-d)``;
    ``route="segre"`` assembles ``c_e`` from the twisted-Segre formula
    degree by degree.  Both must agree.
    """
    # characteristic does not enter the class
    return _singular_class(s.d, s.m, s.n, route)


@lru_cache(maxsize=None)
def _singular_class(d: int, m: int, n: int, route: str) -> Poly:
    s = GdmnSetup(d, m, n)
    R = s.ring
    t = R.var("t")
    omega = KClassRep(s.n, euler_omega_twist(s.n, R))
    T = tautological_bundle(s)
    lam = t * (-s.d)
    if route == "chern":
        E = twist_chern(T, lam)
        ce = chern_of_difference(omega, E, s.e)
    elif route == "segre":
        ce = R.zero
        for i in range(s.e + 1):
            ce = ce + omega.c(i) * twist_segre(T, lam, s.e - i)
    else:
        raise ValueError(f"unknown route {route!r}; use 'chern' or 'segre'")
    return g_complete_intersection_class(s) * ce


def alpha_factor(s: GdmnSetup) -> int:
    return 2 if s.char == 2 and (s.n - s.m) % 2 == 0 else 1


def _to_divisor(x: Poly, s: GdmnSetup) -> Poly:
    """Rewrite a degree-one class in ``c1, tau1`` over ``s1 = -tau1``."""
    D = s.divisor_ring
    out = D.zero
    for name, coeff in x.linear_coefficients().items():
        if name == "c1":
            out = out + D.var("c1") * coeff
        elif name == "tau1":
            out = out - D.var("s1") * coeff
        else:
            raise ValueError(f"unexpected generator {name!r} in a divisor class")
    return out


def g_raw_pushforward(s: GdmnSetup, route: str = "chern") -> Poly:
    """``alpha * [D]`` before division, as a linear form in ``s1, c1``."""
    rel = BundleRelation.standard(s.ring, s.n)
    return _to_divisor(pushforward_t(g_singular_class(s, route), rel), s)


def _divide_alpha(x: Poly, s: GdmnSetup) -> Poly:
    alpha = alpha_factor(s)
    try:
        return x.exact_div(alpha)
    except ArithmeticError as exc:
        raise AlphaDivisionError(f"{s.label()}: class {x} is not divisible by alpha={alpha}") from exc


def g_divisor_class(s: GdmnSetup, route: str = "chern") -> Poly:
    """``[D_dmn]`` as a linear form in ``s1, c1``."""
    return _divide_alpha(g_raw_pushforward(s, route), s)


def g_closed_form(s: GdmnSetup) -> Poly:
    """Direct evaluation of the two binomial sums for the ``s1`` and ``c1`` coefficients."""
    d, m, n = s.d, s.m, s.n
    top = n - m + 1
    cs = sum((-1) ** i * binom(n + 1, i) * binom(n + 1 - i, m) * d ** (n - i) for i in range(top + 1))
    cc = sum((-1) ** (i + 1) * binom(n, i) * binom(n - i, m - 1) * d ** (n + 1 - i) for i in range(top + 1))
    D = s.divisor_ring
    return _divide_alpha(D.var("s1") * cs + D.var("c1") * cc, s)


def g_relations(s: GdmnSetup, route: str = "chern") -> RelationList:
    """Coefficients indexed by ``t``-power: ``rels[q]`` multiplies ``t^q``, ``0 <= q <= n``."""
    rel = BundleRelation.standard(s.ring, s.n)
    out = relation_coefficients(g_singular_class(s, route), rel, max_degree=s.free_degree_bound())
    return out.with_ascending()
