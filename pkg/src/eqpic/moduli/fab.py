"""
Discriminant of bidegree ``(a, b)`` complete intersections in ``P^n``.

The singular locus of the universal complete intersection has class

    (u + a t)(v + b t) * c_{n-1}([Omega^1_{P^n}] - [E_ab]),
    c(E_ab) = (1 - (u + a t))(1 - (v + b t)),

on ``P(V_ab) x P^n``, and the discriminant class is its pushforward.
"""

from __future__ import annotations

from functools import lru_cache

from ..chern import KClassRep, binom, chern_of_difference, euler_omega_twist
from ..gring import Poly
from ..push import BundleRelation, RelationList, pushforward_t, relation_coefficients
from ..symcalc import omega_chern_via_roots
from .setups import FabSetup

__all__ = [
    "f_singular_class",
    "f_divisor_class",
    "f_closed_form",
    "f_relations",
    "f_closed_form_sums",
    "CLOSED_FORM_VARIANTS",
]

CLOSED_FORM_VARIANTS = ("corrected", "statement", "proof")


def _omega(s: FabSetup, route: str) -> Poly:
    if route == "twist":
        return euler_omega_twist(s.n, s.ring)
    if route == "roots":
        return omega_chern_via_roots(s.n, s.ring)
    raise ValueError(f"unknown route {route!r}; use 'twist' or 'roots'")


@lru_cache(maxsize=None)
def f_singular_class(s: FabSetup, route: str = "twist") -> Poly:
    """Class of the singular locus, homogeneous of degree ``n + 1`` in ``u, v, t, c_i``.

    ``route`` picks how ``c(Omega^1)`` is obtained: by twisting the dual
    standard bundle or by symmetrizing Chern roots.
    """
    R = s.ring
    u, v, t = R.var("u"), R.var("v"), R.var("t")
    la, lb = u + t * s.a, v + t * s.b
    omega = KClassRep(s.n, _omega(s, route))
    E = KClassRep(2, (1 - la) * (1 - lb))
    return la * lb * chern_of_difference(omega, E, s.n - 1)


def _to_divisor(x: Poly, s: FabSetup) -> Poly:
    return x.to_ring(s.divisor_ring)


def f_divisor_class(s: FabSetup, route: str = "twist") -> Poly:
    """``[D_ab]`` as a linear form in ``u, v, c1``."""
    rel = BundleRelation.standard(s.ring, s.n)
    return _to_divisor(pushforward_t(f_singular_class(s, route), rel), s)


def f_closed_form_sums(s: FabSetup, variant: str = "corrected") -> dict[str, int]:
    """The scalar sums entering the closed form, keyed ``F0, F1u, F1v, F1c``.

    ``"corrected"`` runs the ``F1`` sums over ``i + j + k = n - 2`` with a
    negative ``c1`` term, which is what the expansion produces.  ``"proof"``
    keeps the range ``n - 1`` and the positive sign.
    """
    a, b, n = s.a, s.b, s.n
    F0 = sum((-1) ** k * binom(n + 1, k) * a ** i * b ** (n - 1 - i - k)
             for k in range(n) for i in range(n - k))
    top = n - 2 if variant == "corrected" else n - 1
    sign = -1 if variant == "corrected" else 1
    triples = [(i, top - i - k, k) for k in range(top + 1) for i in range(top - k + 1)]
    F1u = sum((-1) ** k * binom(n + 1, k) * (i + 1) * a ** i * b ** j for i, j, k in triples)
    F1v = sum((-1) ** k * binom(n + 1, k) * (j + 1) * a ** i * b ** j for i, j, k in triples)
    F1c = sign * sum((-1) ** k * binom(n, k) * a ** i * b ** j for i, j, k in triples)
    return {"F0": F0, "F1u": F1u, "F1v": F1v, "F1c": F1c}


def f_closed_form(s: FabSetup, variant: str = "corrected") -> Poly:
    """Closed-form ``[D_ab] = (a v + b u) F0 + a b (F1 - c1 F0)``.

    ``variant="statement"`` expands everything into sums over
    ``i + j + k = n - 1`` instead.  That version disagrees with the pipeline;
    it stays here so the disagreement can be reproduced.
    """
    if variant not in CLOSED_FORM_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {CLOSED_FORM_VARIANTS}")
    a, b, n = s.a, s.b, s.n
    R = s.divisor_ring
    u, v, c1 = R.var("u"), R.var("v"), R.var("c1")
    if variant == "statement":
        triples = [(i, n - 1 - i - k, k) for k in range(n) for i in range(n - k)]
        cc = sum((-1) ** k * binom(n, k) * a ** (i + 1) * b ** (j + 1) for i, j, k in triples) \
            - sum((-1) ** k * binom(n + 1, k) * a ** i * b ** j for i, j, k in triples)
        cu = sum((-1) ** k * binom(n + 1, k) * a ** i * b ** (j + 1) * (1 + (i + 1) * a) for i, j, k in triples)
        cv = sum((-1) ** k * binom(n + 1, k) * a ** (i + 1) * b ** j * (1 + (j + 1) * b) for i, j, k in triples)
        return c1 * cc + u * cu + v * cv
    F = f_closed_form_sums(s, variant)
    return (v * a + u * b) * F["F0"] + (u * F["F1u"] + v * F["F1v"] + c1 * (F["F1c"] - F["F0"])) * (a * b)


def f_relations(s: FabSetup, route: str = "twist") -> RelationList:
    """Canonical-form coefficients ``xi_1..xi_{n+1}`` (``xi_q`` multiplies ``t^(n+1-q)``)."""
    rel = BundleRelation.standard(s.ring, s.n)
    return relation_coefficients(f_singular_class(s, route), rel, max_degree=s.free_degree_bound())
