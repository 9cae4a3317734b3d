"""
Chern-root arithmetic.

Symmetric expressions in the roots ``l1, ..., l{n+1}`` of the standard
representation are rewritten in the Chern classes ``c1, ..., c{n+1}`` by
leading-term reduction.  This is the root-based route to ``c(Omega^1)`` on
projective space; :func:`eqpic.chern.euler_omega_twist` is the root-free one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .gring import Poly, RingSpec

__all__ = [
    "RootContext",
    "NotSymmetricError",
    "elementary_symmetric",
    "symmetrize_to_chern",
    "omega_chern_via_roots",
]


class NotSymmetricError(ValueError):
    pass


@dataclass(frozen=True)
class RootContext:
    """Roots ``l1..l{n+1}`` (degree 1) plus auxiliary variables passed through unchanged.

    ``root_ring`` holds the roots followed by the auxiliaries;
    ``chern_ring`` holds the auxiliaries followed by ``c1..c{n+1}``.
    """

    n: int
    aux: tuple[tuple[str, int], ...] = (("t", 1),)
    truncation: int | None = None
    root_ring: RingSpec = field(init=False, repr=False, compare=False)
    chern_ring: RingSpec = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least two roots (n >= 1), got n={self.n}")
        top = self.truncation if self.truncation is not None else self.n + 1
        roots = tuple((f"l{i}", 1) for i in range(1, self.n + 2))
        cherns = tuple((f"c{i}", i) for i in range(1, self.n + 2))
        object.__setattr__(self, "root_ring", RingSpec(roots + tuple(self.aux), top))
        object.__setattr__(self, "chern_ring", RingSpec(tuple(self.aux) + cherns, top))

    @property
    def nroots(self) -> int:
        return self.n + 1


def elementary_symmetric(k: int, ctx: RootContext) -> Poly:
    """``e_k(l1, ..., l{n+1})`` in the root ring."""
    N = ctx.nroots
    if not 0 <= k <= N:
        raise ValueError(f"elementary symmetric index {k} outside 0..{N}")
    ring = ctx.root_ring
    terms = {}
    for idx in combinations(range(N), k):
        exps = [0] * ring.nvars
        for i in idx:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return Poly(ring, terms)


def _is_symmetric(x: Poly, N: int) -> bool:
    terms = x.terms
    # adjacent transpositions generate the symmetric group
    for i in range(N - 1):
        for e, c in terms.items():
            f = list(e)
            f[i], f[i + 1] = f[i + 1], f[i]
            if terms.get(tuple(f), 0) != c:
                return False
    return True


def symmetrize_to_chern(x: Poly, ctx: RootContext) -> Poly:
    """Rewrite a root-symmetric polynomial in ``c_i``; auxiliaries pass through.

    Raises :class:`NotSymmetricError` if ``x`` is not invariant under
    permutations of the roots.
    """
    if x.ring != ctx.root_ring:
        x = x.to_ring(ctx.root_ring)
    N = ctx.nroots
    if not _is_symmetric(x, N):
        raise NotSymmetricError("input is not symmetric in the Chern roots")
    es = [elementary_symmetric(k, ctx) for k in range(N + 1)]
    cring = ctx.chern_ring
    out: dict = {}
    rest = x
    while rest:
        # lex-leading root exponent vector; symmetric => it is a partition
        lead, coeff = max(rest.terms.items(), key=lambda kv: kv[0][:N] + kv[0][N:])
        lam = lead[:N]
        if any(lam[i] < lam[i + 1] for i in range(N - 1)):
            raise NotSymmetricError("reduction reached a non-partition leading term")
        mult = [lam[k - 1] - (lam[k] if k < N else 0) for k in range(1, N + 1)]
        piece = x.ring.monomial({name: e for (name, _), e in zip(ctx.aux, lead[N:]) if e}, coeff)
        for k, mk in enumerate(mult, start=1):
            if mk:
                piece = piece * es[k] ** mk
        rest = rest - piece
        key = tuple(lead[N:]) + tuple(mult)
        out[key] = out.get(key, 0) + coeff
    return Poly(cring, out)


def omega_chern_via_roots(n: int, ring: RingSpec | None = None) -> Poly:
    """Total equivariant Chern class of ``Omega^1_{P^n}`` as ``prod (1 - l_i - t)``, symmetrized."""
    ctx = RootContext(n)
    R = ctx.root_ring
    t = R.var("t")
    prod = R.one
    for i in range(1, n + 2):
        prod = prod * (1 - R.var(f"l{i}") - t)
    out = symmetrize_to_chern(prod, ctx)
    return out.to_ring(ring) if ring is not None else out
