"""
Picard groups of the complete-intersection stacks, their torsors, and of ``M_g`` for ``g = 3, 4, 5``.

Conventions:

* ``F`` presentations use generators ``(c1, u, v)``, ``G`` ones ``(c1, s1)``.
* The ``Q`` torsor over ``F`` adds the relation ``c1 - u - v``; the ``P``
  torsor over ``G`` adds ``c1 - s1``.
* ``lambda1`` is identified with ``c1``.  Divisor multiples are reported as
  absolute values; the signed value under ``lambda1 = c1`` is kept alongside.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..abgroup import (
    Coordinates,
    FGAbelian,
    GroupPresentation,
    class_coordinates,
    quotient_structure,
)
from ..gring import Poly, RingSpec
from .fab import f_divisor_class
from .gdmn import g_divisor_class
from .setups import FabSetup, GdmnSetup, SetupError, check_characteristic

__all__ = [
    "Note",
    "AXIOM_LAMBDA_NON_TORSION",
    "AXIOM_C1_IS_LAMBDA1",
    "ERRATUM_FAB_CLOSED_FORM",
    "ERRATUM_QUADRIC_DISCRIMINANT",
    "PicardReport",
    "NotRankOneError",
    "divisor_class",
    "picard_presentation",
    "quadric_discriminant_class",
    "divisor_multiple",
    "genus_pipeline",
    "GENUS_DATA",
]


@dataclass(frozen=True)
class Note:
    id: str
    text: str


AXIOM_LAMBDA_NON_TORSION = Note(
    "lambda1-non-torsion",
    "lambda1 has infinite order in Pic(M_g) (the rational Picard group has rank one); "
    "used to conclude that no further relation holds after the localization sequence",
)
AXIOM_C1_IS_LAMBDA1 = Note(
    "c1-is-lambda1",
    "the first Chern class c1 of the standard representation pulls back to the Hodge class lambda1; "
    "taken as an input identification, not verified symbolically",
)
ERRATUM_FAB_CLOSED_FORM = Note(
    "fab-closed-form-F1",
    "closed form for [D_ab] uses F1 sums over i+j+k=n-2 with a negative c1 term; "
    "the range n-1 with a positive c1 term disagrees with the symbolic pipeline",
)
ERRATUM_QUADRIC_DISCRIMINANT = Note(
    "quadric-discriminant",
    "discriminant of quadrics in P^n taken as (n+1)u - 2c1 from the determinant line; "
    "the value 4u - c1 for n=3 would give 33 instead of 34 for [M4^ev]",
)


class NotRankOneError(ValueError):
    """Divisor multiples need a quotient that is free of rank one."""


def divisor_class(s: FabSetup | GdmnSetup) -> Poly:
    if isinstance(s, FabSetup):
        return f_divisor_class(s)
    if isinstance(s, GdmnSetup):
        return g_divisor_class(s)
    raise TypeError(f"expected FabSetup or GdmnSetup, got {type(s).__name__}")


def picard_presentation(s: FabSetup | GdmnSetup, torsor: str | None = None) -> GroupPresentation:
    """``Z<generators> / <[D]>``, plus the torsor relation when ``torsor`` is ``"Q"`` (F) or ``"P"`` (G)."""
    D = divisor_class(s)
    gens = s.generators
    rows = [tuple(D.coefficient({g: 1}) for g in gens)]
    if torsor is None:
        pass
    elif isinstance(s, FabSetup) and torsor == "Q":
        rows.append((1, -1, -1))
    elif isinstance(s, GdmnSetup) and torsor == "P":
        rows.append((1, -1))
    else:
        family = "F" if isinstance(s, FabSetup) else "G"
        raise SetupError(f"torsor {torsor!r} does not apply to the {family} family (F takes Q, G takes P)")
    return GroupPresentation(gens, tuple(rows))


def quadric_discriminant_class(n: int, ring: RingSpec | None = None) -> Poly:
    """``(n + 1) u - 2 c1``: the discriminant of quadrics in ``P(E_{n+1})``.

    A quadric on the tautological line ``O(-1)`` of ``P(Sym^2 E^vee)`` is a
    symmetric map ``E -> E^vee (x) O(1)``; its determinant is a section of
    ``O(n + 1) (x) (det E^vee)^2``.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    R = ring if ring is not None else RingSpec.of(["u", "v", "c1"], truncation=1)
    return R.var("u") * (n + 1) - R.var("c1") * 2


def _as_mapping(cls: Poly | Mapping[str, int]) -> dict[str, int]:
    if isinstance(cls, Poly):
        return cls.linear_coefficients()
    return dict(cls)


def divisor_multiple(cls: Poly | Mapping[str, int], pres: GroupPresentation, generator: str = "c1") -> int:
    """Signed ``k`` with ``cls = k * generator`` in a rank-one free quotient."""
    G = quotient_structure(pres)
    if G.rank != 1 or G.invariant_factors:
        raise NotRankOneError(f"quotient is {G}, not free of rank one")
    gen = class_coordinates(pres.vector({generator: 1}), pres, G)
    if abs(gen.free[0]) != 1:
        raise NotRankOneError(f"{generator} is not a generator of the free quotient (coordinate {gen.free[0]})")
    x = class_coordinates(pres.vector(_as_mapping(cls)), pres, G)
    return x.free[0] * gen.free[0]


@dataclass(frozen=True)
class PicardReport:
    """Assembled Picard data for ``M_g``.

    ``open_presentation`` is the presentation of the open part ``U_g``;
    ``presentation`` adds the removed divisors as generators (or equals the
    open one when the complement has codimension two).
    """

    genus: int
    char: int
    setup: FabSetup | GdmnSetup
    family_class: Poly
    open_presentation: GroupPresentation
    open_structure: FGAbelian
    presentation: GroupPresentation
    structure: FGAbelian
    generator: str
    generator_expression: dict[str, int]
    divisor_multiples_signed: dict[str, int]
    axioms: tuple[Note, ...] = ()
    errata: tuple[Note, ...] = ()
    extra_classes: dict[str, Poly] = field(default_factory=dict)

    @property
    def divisor_multiples(self) -> dict[str, int]:
        return {k: abs(v) for k, v in self.divisor_multiples_signed.items()}

    @property
    def rank(self) -> int:
        return self.structure.rank

    def open_coordinates(self, cls: Mapping[str, int]) -> Coordinates:
        return class_coordinates(self.open_presentation.vector(cls), self.open_presentation, self.open_structure)


# genus -> (family setup factory, torsor, removed divisor name or None)
GENUS_DATA = {
    3: (lambda char: GdmnSetup(4, 1, 2, char), "P", "H3"),
    4: (lambda char: FabSetup(2, 3, 3), "Q", None),
    5: (lambda char: GdmnSetup(2, 3, 4, char), "P", "T5"),
}


def genus_pipeline(g: int, char: int = 0) -> PicardReport:
    if g not in GENUS_DATA:
        raise SetupError(f"unsupported genus {g}; choose 3, 4 or 5")
    check_characteristic(char)
    make, torsor, removed = GENUS_DATA[g]
    s = make(char)
    open_pres = picard_presentation(s, torsor)
    open_G = quotient_structure(open_pres)
    D = divisor_class(s)
    errata = (ERRATUM_FAB_CLOSED_FORM,) if isinstance(s, FabSetup) else ()
    extra: dict[str, Poly] = {}
    if removed is not None:
        # localization: Z[removed] -> Pic(M_g) -> Pic(U_g) -> 0, with the
        # removed divisor equal to the discriminant class
        gens = open_pres.generators + (removed,)
        rows = [r + (0,) for r in open_pres.relations[1:]]
        d_row = open_pres.relations[0]
        rows.append(d_row + (-1,))
        pres = GroupPresentation(gens, tuple(rows))
        target = {removed: 1}
        axioms = (AXIOM_LAMBDA_NON_TORSION, AXIOM_C1_IS_LAMBDA1)
    else:
        # complement of the open part has codimension two
        pres = open_pres
        delta = quadric_discriminant_class(s.n, s.divisor_ring)
        extra["Delta2"] = delta
        target = delta.linear_coefficients()
        removed = "M4ev"
        axioms = (AXIOM_C1_IS_LAMBDA1,)
        errata = errata + (ERRATUM_QUADRIC_DISCRIMINANT,)
    structure = quotient_structure(pres)
    k = divisor_multiple(target, pres, "c1")
    return PicardReport(
        genus=g,
        char=char,
        setup=s,
        family_class=D,
        open_presentation=open_pres,
        open_structure=open_G,
        presentation=pres,
        structure=structure,
        generator="lambda1",
        generator_expression={"c1": 1},
        divisor_multiples_signed={removed: k},
        axioms=axioms,
        errata=errata,
        extra_classes=extra,
    )
