"""
Characteristic-class calculus on formal bundle classes.

A :class:`KClassRep` is a rank together with a total Chern class.  Segre
classes are series inverses (``c * s = 1``).  Twisting by a line bundle uses

    c_i(E (x) L) = sum_j binom(r - j, i - j) c_j(E) l^(i - j)
    s_p(E (x) L) = sum_k (-1)^(p - k) binom(r - 1 + p, r - 1 + k) s_k(E) l^(p - k)

with ``l = c_1(L)`` and ``r = rank E``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb

from .gring import Poly, RingSpec, unit_series_inverse

__all__ = [
    "binom",
    "KClassRep",
    "total_segre",
    "twist_chern",
    "twist_segre",
    "chern_of_difference",
    "schur_delta",
    "euler_omega_twist",
    "standard_ring",
    "standard_bundle",
]


def binom(x: int, y: int) -> int:
    """Binomial coefficient, zero when ``y < 0`` or ``y > x``."""
    if y < 0 or x < 0 or y > x:
        return 0
    return comb(x, y)


@dataclass(frozen=True)
class KClassRep:
    """Formal class of a bundle (or difference): rank and total Chern class."""

    rank: int
    total_chern: Poly

    def __post_init__(self):
        if self.total_chern.constant_term != 1:
            raise ValueError("total Chern class must have constant term 1")

    @property
    def ring(self) -> RingSpec:
        return self.total_chern.ring

    def c(self, i: int) -> Poly:
        if i < 0 or i > self.ring.truncation:
            return self.ring.zero
        return self.total_chern.homogeneous(i)

    @classmethod
    def trivial(cls, ring: RingSpec, rank: int = 0) -> "KClassRep":
        return cls(rank, ring.one)

    @classmethod
    def line(cls, first_chern: Poly) -> "KClassRep":
        return cls(1, 1 + first_chern)

    def dual(self) -> "KClassRep":
        """``c_i(E^vee) = (-1)^i c_i(E)``."""
        out = self.ring.zero
        for i, part in enumerate(self.total_chern.graded_parts()):
            out = out + (part if i % 2 == 0 else -part)
        return KClassRep(self.rank, out)

    def __add__(self, other: "KClassRep") -> "KClassRep":
        # Whitney sum
        return KClassRep(self.rank + other.rank, self.total_chern * other.total_chern)


def total_segre(x: KClassRep) -> Poly:
    return unit_series_inverse(x.total_chern)


def _check_linear(lam: Poly) -> None:
    if lam and not lam.is_homogeneous(1):
        raise ValueError(f"twisting class must be homogeneous of degree 1, got {lam}")


def twist_chern(x: KClassRep, lam: Poly, rank: int | None = None) -> KClassRep:
    """Total Chern class of ``E (x) L`` where ``c_1(L) = lam``."""
    r = x.rank if rank is None else rank
    if r < 1:
        raise ValueError(f"twisting needs rank >= 1, got {r}")
    _check_linear(lam)
    ring = x.ring
    top = min(r, ring.truncation)
    cs = [x.c(j) for j in range(top + 1)]
    lam_pow = [ring.one]
    for _ in range(top):
        lam_pow.append(lam_pow[-1] * lam)
    out = ring.zero
    for i in range(top + 1):
        for j in range(i + 1):
            k = binom(r - j, i - j)
            if k and cs[j]:
                out = out + cs[j] * lam_pow[i - j] * k
    return KClassRep(r, out)


def twist_segre(x: KClassRep, lam: Poly, p: int) -> Poly:
    """``s_p(E (x) L)`` from the Segre classes of ``E``, without inverting the twist."""
    r = x.rank
    if r < 1:
        raise ValueError(f"twisting needs rank >= 1, got {r}")
    _check_linear(lam)
    if p < 0:
        return x.ring.zero
    ring = x.ring
    s = total_segre(x).graded_parts()
    out = ring.zero
    for k in range(min(p, ring.truncation) + 1):
        coeff = (-1) ** (p - k) * binom(r - 1 + p, r - 1 + k)
        if coeff and s[k]:
            out = out + s[k] * lam ** (p - k) * coeff
    return out


def chern_of_difference(a: KClassRep, b: KClassRep, e: int) -> Poly:
    """``c_e([a] - [b])``: the degree-``e`` part of ``c(a) * s(b)``."""
    if e < 0:
        raise ValueError("degree must be non-negative")
    if a.ring != b.ring:
        raise ValueError("classes live in different rings")
    return (a.total_chern * total_segre(b)).homogeneous(e)


def _det(m: list[list[Poly]], ring: RingSpec) -> Poly:
    n = len(m)
    out = ring.zero
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ring.one
        for i, j in enumerate(perm):
            term = term * m[i][j]
            if not term:
                break
        if term:
            out = out + (-term if inversions % 2 else term)
    return out


def schur_delta(p: int, q: int, cls: list[Poly]) -> Poly:
    """``det(c_{q+j-i})`` of size ``p``, with ``c_0 = 1`` and ``c_k = 0`` for ``k < 0``.

    ``cls[k]`` is the degree-``k`` class; indices past the list count as zero.
    """
    if p < 1 or q < 0:
        raise ValueError("need p >= 1 and q >= 0")
    if not cls:
        raise ValueError("need at least one graded piece to fix the ring")
    ring = cls[0].ring

    def c(k):
        if k == 0:
            return ring.one
        if k < 0 or k >= len(cls):
            return ring.zero
        return cls[k]

    return _det([[c(q + j - i) for j in range(p)] for i in range(p)], ring)


def standard_ring(n: int, extra: tuple[tuple[str, int], ...] = (), truncation: int | None = None) -> RingSpec:
    """Roster ``(*extra, t, c1, ..., c{n+1})`` with truncation ``n + 1`` by default."""
    roster = tuple(extra) + (("t", 1),) + tuple((f"c{i}", i) for i in range(1, n + 2))
    return RingSpec(roster, n + 1 if truncation is None else truncation)


def standard_bundle(n: int, ring: RingSpec) -> KClassRep:
    """The standard representation ``E_{n+1}``: ``c = 1 + c1 + ... + c{n+1}``."""
    total = ring.one
    for i in range(1, n + 2):
        total = total + ring.var(f"c{i}")
    return KClassRep(n + 1, total)


def euler_omega_twist(n: int, ring: RingSpec | None = None) -> Poly:
    """``c(Omega^1_{P^n}) = c(E^vee (x) O(-1))``, through :func:`twist_chern` only."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    R = ring if ring is not None else standard_ring(n)
    E = standard_bundle(n, R)
    return twist_chern(E.dual(), -R.var("t")).total_chern
