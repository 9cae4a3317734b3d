"""
Finitely generated abelian groups from integer relation matrices.

A :class:`GroupPresentation` is ``Z<generators> / rowspan(relations)``.
:func:`smith_normal_form` diagonalizes the relation matrix by unimodular row
and column operations, which reads off the structure:

>>> p = GroupPresentation(("c1", "s1"), ((-36, 27), (1, -1)))
>>> G = quotient_structure(p)
>>> G.rank, G.invariant_factors
(0, (9,))
>>> str(G)
'Z/9'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

__all__ = [
    "IntMatrix",
    "smith_normal_form",
    "GroupPresentation",
    "FGAbelian",
    "Coordinates",
    "quotient_structure",
    "class_coordinates",
    "integer_det",
]

IntMatrix = list[list[int]]


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(D, U, V)`` with ``U @ A @ V == D``.

    ``D`` is diagonal with non-negative entries ``d_1 | d_2 | ...`` (zeros
    last); ``U`` and ``V`` are unimodular.  The pivot is always the smallest
    nonzero entry in absolute value.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if any(len(r) != cols for r in A):
        raise ValueError("matrix is not rectangular")
    M = [[int(x) for x in r] for r in A]
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        M[dst] = [a + k * b for a, b in zip(M[dst], M[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for r in M:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if M[i][j] and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return M, U, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = M[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if M[i][t]:
                    add_row(i, t, -(M[i][t] // p))
                    dirty |= M[i][t] != 0
            for j in range(t + 1, cols):
                if M[t][j]:
                    add_col(j, t, -(M[t][j] // p))
                    dirty |= M[t][j] != 0
            if dirty:
                continue
            # row and column cleared; enforce divisibility on the remaining block
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if M[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
    return M, U, V


def integer_det(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    M = [[int(x) for x in r] for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(tuple(int(x) for x in r) for r in self.relations))
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        for r in self.relations:
            if len(r) != len(self.generators):
                raise ValueError(f"relation {r} has {len(r)} entries for {len(self.generators)} generators")

    def vector(self, cls: Mapping[str, int]) -> tuple[int, ...]:
        """Coefficient vector of ``{generator: coefficient}``; unknown names are an error."""
        unknown = set(cls) - set(self.generators)
        if unknown:
            raise KeyError(f"not generators of this presentation: {sorted(unknown)}")
        return tuple(int(cls.get(g, 0)) for g in self.generators)

    def with_relation(self, row: Sequence[int]) -> "GroupPresentation":
        return GroupPresentation(self.generators, self.relations + (tuple(row),))


@dataclass(frozen=True)
class FGAbelian:
    """``Z^rank + Z/d_1 + ... + Z/d_k`` with the change of basis that exhibits it.

    ``D = U * A * V``; a class ``x`` (row vector) has new coordinates ``x * V``.
    """

    rank: int
    invariant_factors: tuple[int, ...]
    D: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    generators: tuple[str, ...]

    @property
    def diagonal(self) -> tuple[int, ...]:
        """``d_i`` for each new basis direction; 0 means a free direction."""
        g = len(self.generators)
        return tuple(self.D[i][i] if i < len(self.D) else 0 for i in range(g))

    @property
    def torsion_order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def is_free(self) -> bool:
        return not self.invariant_factors

    def order(self) -> int | None:
        return None if self.rank else self.torsion_order

    def __str__(self) -> str:
        parts = (["Z"] if self.rank == 1 else [f"Z^{self.rank}"] if self.rank else [])
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Coordinates:
    free: tuple[int, ...]
    torsion: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)


def quotient_structure(p: GroupPresentation) -> FGAbelian:
    A = [list(r) for r in p.relations]
    g = len(p.generators)
    if not A:
        D, U, V = [], [], _identity(g)
    else:
        D, U, V = smith_normal_form(A)
    diag = [D[i][i] if i < len(D) and i < g else 0 for i in range(g)]
    rank = sum(1 for d in diag if d == 0)
    factors = tuple(d for d in diag if d > 1)
    return FGAbelian(
        rank=rank,
        invariant_factors=factors,
        D=tuple(map(tuple, D)),
        U=tuple(map(tuple, U)),
        V=tuple(map(tuple, V)),
        generators=p.generators,
    )


def class_coordinates(vec: Sequence[int] | Mapping[str, int], p: GroupPresentation,
                      structure: FGAbelian | None = None) -> Coordinates:
    """Image of a class in the decomposition: free coordinates and torsion residues in ``[0, d)``."""
    if isinstance(vec, Mapping):
        vec = p.vector(vec)
    g = len(p.generators)
    if len(vec) != g:
        raise ValueError(f"vector of length {len(vec)} for {g} generators")
    G = structure if structure is not None else quotient_structure(p)
    V = G.V
    y = [sum(int(vec[i]) * V[i][j] for i in range(g)) for j in range(g)]
    free, tors = [], []
    for yj, d in zip(y, G.diagonal):
        if d == 0:
            free.append(yj)
        elif d > 1:
            tors.append(yj % d)
    return Coordinates(tuple(free), tuple(tors))
