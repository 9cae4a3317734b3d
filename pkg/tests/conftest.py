"""Shared helpers: bridges between :class:`eqpic.Poly` and sympy, used as an independent oracle."""

from __future__ import annotations

import sympy as sp
from hypothesis import strategies as st

from eqpic.gring import Poly, RingSpec


def to_sympy(x: Poly) -> sp.Expr:
    syms = sp.symbols(x.ring.names)
    if not isinstance(syms, tuple):
        syms = (syms,)
    out = sp.Integer(0)
    for exps, c in x.items():
        term = sp.Integer(c)
        for s, e in zip(syms, exps):
            term *= s ** e
        out += term
    return out


def truncate_sympy(expr: sp.Expr, ring: RingSpec) -> sp.Expr:
    """Drop every monomial of weighted degree above the ring's truncation."""
    syms = sp.symbols(ring.names)
    if not isinstance(syms, tuple):
        syms = (syms,)
    expr = sp.expand(expr)
    if expr == 0:
        return sp.Integer(0)
    poly = sp.Poly(expr, *syms)
    out = sp.Integer(0)
    for exps, c in poly.terms():
        if ring.weight(exps) <= ring.truncation:
            term = sp.Integer(c)
            for s, e in zip(syms, exps):
                term *= s ** e
            out += term
    return out


def from_sympy(expr: sp.Expr, ring: RingSpec) -> Poly:
    syms = sp.symbols(ring.names)
    if not isinstance(syms, tuple):
        syms = (syms,)
    expr = sp.expand(expr)
    if expr == 0:
        return ring.zero
    return Poly(ring, {tuple(int(e) for e in exps): int(c) for exps, c in sp.Poly(expr, *syms).terms()})


SMALL_RING = RingSpec((("u", 1), ("v", 1), ("t", 1), ("c2", 2)), truncation=4)


@st.composite
def polys(draw, ring: RingSpec = SMALL_RING, max_terms: int = 6, coeff: int = 20, unit: bool = False):
    """Random polynomials within the truncation of ``ring``."""
    n = ring.nvars
    exps = st.tuples(*[st.integers(0, ring.truncation)] * n).filter(lambda e: ring.weight(e) <= ring.truncation)
    terms = draw(st.dictionaries(exps, st.integers(-coeff, coeff), max_size=max_terms))
    if unit:
        terms[(0,) * n] = draw(st.sampled_from([1, -1]))
    return Poly(ring, terms)
