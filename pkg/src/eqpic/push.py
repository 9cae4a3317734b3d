"""
Reduction modulo the projective-bundle relation and pushforward along ``P^n``.

On ``B x P(E)`` with ``E`` of rank ``n + 1`` the hyperplane class ``t``
satisfies ``sum_{i=0}^{n+1} c_i t^(n+1-i) = 0``.  Every class has a unique
representative of ``t``-degree at most ``n``; its ``t^n`` coefficient is the
pushforward to ``B``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gring import Poly, coeff_of_power

__all__ = [
    "BundleRelation",
    "RelationList",
    "FreeVariableBoundError",
    "t_divmod",
    "t_canonicalize",
    "pushforward_t",
    "pushforward_top_form",
    "relation_coefficients",
]


class FreeVariableBoundError(ValueError):
    """Requested degree reaches relations that free generators do not carry."""


@dataclass(frozen=True)
class BundleRelation:
    """``c[0] = 1, c[1], ..., c[n+1]`` and the name of the fibre hyperplane class."""

    n: int
    chern: tuple[Poly, ...]
    tvar: str = "t"

    def __post_init__(self):
        if len(self.chern) != self.n + 2:
            raise ValueError(f"need c_0..c_{self.n + 1}, got {len(self.chern)} classes")
        if self.chern[0] != 1:
            raise ValueError("c_0 must be 1")
        ring = self.chern[0].ring
        for i, c in enumerate(self.chern):
            if c.ring != ring:
                raise ValueError("relation classes live in different rings")
            if c.degree_in(self.tvar):
                raise ValueError(f"c_{i} must not involve {self.tvar}")

    @classmethod
    def standard(cls, ring, n: int, tvar: str = "t") -> "BundleRelation":
        """Relation from the ring variables ``c1..c{n+1}``."""
        return cls(n, (ring.one,) + tuple(ring.var(f"c{i}") for i in range(1, n + 2)), tvar)

    @property
    def ring(self):
        return self.chern[0].ring

    def polynomial(self) -> Poly:
        t = self.ring.var(self.tvar)
        out = self.ring.zero
        for i, c in enumerate(self.chern):
            out = out + c * t ** (self.n + 1 - i)
        return out


def t_divmod(x: Poly, rel: BundleRelation) -> tuple[Poly, Poly]:
    """``(q, r)`` with ``x = q * rel + r`` and ``deg_t r <= n``."""
    if x.ring != rel.ring:
        raise ValueError("class and relation live in different rings")
    n, tv = rel.n, rel.tvar
    top = x.degree_in(tv)
    slices = [coeff_of_power(x, tv, k) for k in range(top + 1)]
    quot = [x.ring.zero] * max(top - n, 0)
    for k in range(top, n, -1):
        lead = slices[k]
        if not lead:
            continue
        quot[k - n - 1] = lead
        for i in range(1, n + 2):
            if rel.chern[i]:
                slices[k - i] = slices[k - i] - lead * rel.chern[i]
        slices[k] = x.ring.zero
    t = x.ring.var(tv)
    rem = x.ring.zero
    for k in range(min(top, n) + 1):
        if slices[k]:
            rem = rem + slices[k] * t ** k
    q = x.ring.zero
    for k, piece in enumerate(quot):
        if piece:
            q = q + piece * t ** k
    return q, rem


def t_canonicalize(x: Poly, rel: BundleRelation) -> Poly:
    return t_divmod(x, rel)[1]


def pushforward_t(x: Poly, rel: BundleRelation) -> Poly:
    """Coefficient of ``t^n`` after canonicalization."""
    return coeff_of_power(t_canonicalize(x, rel), rel.tvar, rel.n)


def pushforward_top_form(x: Poly, rel: BundleRelation) -> Poly:
    """Pushforward read off an unreduced class of ``t``-degree at most ``n + 1``.

    With ``x = sum_q xi_q t^q`` this is ``xi_n - xi_{n+1} c_1``.
    """
    n, tv = rel.n, rel.tvar
    if x.degree_in(tv) > n + 1:
        raise ValueError(f"class has {tv}-degree above {n + 1}")
    return coeff_of_power(x, tv, n) - coeff_of_power(x, tv, n + 1) * rel.chern[1]


@dataclass(frozen=True)
class RelationList:
    """Coefficients of the canonical form of a degree ``n + 1`` class.

    ``coefficients[q - 1]`` multiplies ``t^(n+1-q)`` (so the first entry is
    the pushforward).  With ``ascending=True`` indexing follows the
    ``t``-power instead: ``self[q]`` is the coefficient of ``t^q``.
    """

    coefficients: tuple[Poly, ...]
    ascending: bool = False

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    def coefficient_of_t(self, k: int) -> Poly:
        return self.coefficients[self.n - k]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, q: int) -> Poly:
        if self.ascending:
            if not 0 <= q <= self.n:
                raise IndexError(q)
            return self.coefficient_of_t(q)
        if not 1 <= q <= self.n + 1:
            raise IndexError(q)
        return self.coefficients[q - 1]

    @property
    def indices(self) -> range:
        return range(0, self.n + 1) if self.ascending else range(1, self.n + 2)

    @property
    def relations(self) -> tuple[Poly, ...]:
        """The entries that vanish on the complement: all but the ``t^0`` one."""
        return self.coefficients[:-1]

    def with_ascending(self) -> "RelationList":
        return RelationList(self.coefficients, ascending=True)


def relation_coefficients(x: Poly, rel: BundleRelation, max_degree: int | None = None) -> RelationList:
    """Full list of canonical-form coefficients of a homogeneous degree ``n + 1`` class.

    ``max_degree`` is the highest degree in which the base generators are
    relation-free; it must cover ``n + 1``.
    """
    n = rel.n
    if x and not x.is_homogeneous(n + 1):
        raise ValueError(f"class must be homogeneous of degree {n + 1}, has degrees {sorted(x.degrees_present())}")
    if max_degree is not None and n + 1 > max_degree:
        raise FreeVariableBoundError(
            f"relation list needs degree {n + 1} but base generators are only relation-free up to degree {max_degree}"
        )
    canon = t_canonicalize(x, rel)
    return RelationList(tuple(coeff_of_power(canon, rel.tvar, n + 1 - q) for q in range(1, n + 2)))
