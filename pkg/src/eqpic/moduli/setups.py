"""Validated parameter records for the two families of complete intersections."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ..chern import standard_ring
from ..gring import RingSpec

__all__ = ["SetupError", "FabSetup", "GdmnSetup", "is_prime", "check_characteristic"]


class SetupError(ValueError):
    """Parameters violate a family's standing hypotheses."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def check_characteristic(char: int) -> int:
    if not isinstance(char, int) or (char != 0 and not is_prime(char)):
        raise SetupError(f"characteristic must be 0 or a prime, got {char}")
    return char


@dataclass(frozen=True)
class FabSetup:
    """Codimension-two complete intersections of bidegree ``(a, b)`` in ``P^n``."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        for name in ("a", "b", "n"):
            if not isinstance(getattr(self, name), int):
                raise SetupError(f"{name} must be an integer")
        if not 0 < self.a < self.b:
            raise SetupError(f"requires 0<a<b, got a={self.a}, b={self.b}")
        if self.n <= 2:
            raise SetupError(f"requires n>2, got n={self.n}")

    @property
    def ring(self) -> RingSpec:
        """``u, v, t, c1..c{n+1}`` truncated at ``n + 1``."""
        return standard_ring(self.n, extra=(("u", 1), ("v", 1)))

    @property
    def divisor_ring(self) -> RingSpec:
        return RingSpec.of(["u", "v", "c1"], truncation=1)

    @property
    def generators(self) -> tuple[str, ...]:
        return ("c1", "u", "v")

    def free_degree_bound(self) -> int:
        """Largest degree in which ``u`` and ``v`` satisfy no relation.

        ``u`` lives on ``P(W_a)`` with ``dim W_a = binom(n + a, n)`` and ``v`` on
        a projective bundle of rank ``dim W_b - dim W_{b-a}`` over it.
        """
        n, a, b = self.n, self.a, self.b
        wa = comb(n + a, n)
        vab = comb(n + b, n) - comb(n + b - a, n)
        return min(wa, vab) - 1

    def label(self) -> str:
        return f"F(a={self.a}, b={self.b}, n={self.n})"


@dataclass(frozen=True)
class GdmnSetup:
    """Complete intersections of ``m`` hypersurfaces of degree ``d`` in ``P^n``.

    ``char`` is 0 or a prime; only whether it equals 2 changes any result.
    """

    d: int
    m: int
    n: int
    char: int = 0

    def __post_init__(self):
        for name in ("d", "m", "n", "char"):
            if not isinstance(getattr(self, name), int):
                raise SetupError(f"{name} must be an integer")
        if self.d <= 0:
            raise SetupError(f"requires d>0, got d={self.d}")
        if not 0 < self.m < self.n:
            raise SetupError(f"requires 0<m<n, got m={self.m}, n={self.n}")
        check_characteristic(self.char)

    @property
    def e(self) -> int:
        return self.n - self.m + 1

    @property
    def ring(self) -> RingSpec:
        """``t, c1..c{n+1}, tau1..tau_m`` (``tau_p = c_p(T)``, degree ``p``) truncated at ``n + 1``."""
        taus = tuple((f"tau{p}", p) for p in range(1, self.m + 1))
        return RingSpec(standard_ring(self.n).variables + taus, self.n + 1)

    @property
    def divisor_ring(self) -> RingSpec:
        return RingSpec.of(["s1", "c1"], truncation=1)

    @property
    def generators(self) -> tuple[str, ...]:
        return ("c1", "s1")

    def free_degree_bound(self) -> int:
        """Largest degree in which the ``tau_p`` satisfy no relation on ``Gr(m, W_d)``.

        The first Grassmannian relations are ``s_k(T) = 0`` for
        ``k > dim W_d - m``.
        """
        return comb(self.n + self.d, self.n) - self.m

    def label(self) -> str:
        return f"G(d={self.d}, m={self.m}, n={self.n}, char={self.char})"
