"""
Graded, truncated polynomial rings with exact integer coefficients.

Every cycle class in the package is a :class:`Poly` living in a
:class:`RingSpec`: an ordered roster of variables, each carrying a positive
degree (codimension), and a truncation degree above which monomials are
discarded.  Coefficients are Python integers, so nothing ever overflows.

>>> R = RingSpec.of([("u", 1), ("v", 1), ("c1", 1)], truncation=2)
>>> x = R.parse("33*u + 34*v - 42*c1")
>>> str(substitute(x, "v", R.parse("c1 - u")))
'-u - 8*c1'
>>> s = unit_series_inverse(R.parse("1 + c1"))
>>> str(s)
'c1^2 - c1 + 1'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

__all__ = [
    "RingSpec",
    "Poly",
    "RingMismatchError",
    "poly_add",
    "poly_mul",
    "unit_series_inverse",
    "coeff_of_power",
    "substitute",
]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingMismatchError(ValueError):
    """Raised when two polynomials from different rings are combined."""


@dataclass(frozen=True)
class RingSpec:
    """Ordered graded variable roster with a truncation degree."""

    variables: tuple[tuple[str, int], ...]
    truncation: int

    def __post_init__(self):
        names = [name for name, _ in self.variables]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name, deg in self.variables:
            if not _NAME.match(name):
                raise ValueError(f"invalid variable name {name!r}")
            if not isinstance(deg, int) or deg < 1:
                raise ValueError(f"variable {name!r} needs a positive degree, got {deg!r}")
        if not isinstance(self.truncation, int) or self.truncation < 1:
            raise ValueError(f"truncation must be a positive integer, got {self.truncation!r}")

    @classmethod
    def of(cls, variables: Iterable[tuple[str, int] | str], truncation: int) -> "RingSpec":
        """Build a ring; bare names get degree 1."""
        roster = tuple((v, 1) if isinstance(v, str) else (v[0], int(v[1])) for v in variables)
        return cls(roster, int(truncation))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.variables)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(deg for _, deg in self.variables)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} (ring has {', '.join(self.names)})") from None

    def degree_of(self, name: str) -> int:
        return self.variables[self.index(name)][1]

    def weight(self, exps: tuple[int, ...]) -> int:
        return sum(e * d for e, d in zip(exps, self.degrees))

    def with_truncation(self, truncation: int) -> "RingSpec":
        return RingSpec(self.variables, truncation)

    # -- constructors -----------------------------------------------------

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c: int) -> "Poly":
        return Poly(self, {(0,) * self.nvars: int(c)})

    def var(self, name: str) -> "Poly":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Poly(self, {tuple(exps): 1})

    def monomial(self, powers: Mapping[str, int], coeff: int = 1) -> "Poly":
        exps = [0] * self.nvars
        for name, e in powers.items():
            if e < 0:
                raise ValueError("negative exponent")
            exps[self.index(name)] += e
        return Poly(self, {tuple(exps): int(coeff)})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.var(name) for name in self.names)

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)


class Poly:
    """Sparse polynomial over the integers in a :class:`RingSpec`.

    Treated as immutable: every operation returns a new instance.  The term
    map sends exponent tuples (aligned with the ring roster) to nonzero ints.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[tuple[int, ...], int]):
        self.ring = ring
        top = ring.truncation
        clean = {}
        for exps, c in terms.items():
            if c and ring.weight(exps) <= top:
                clean[exps] = clean.get(exps, 0) + c
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, ring: RingSpec, terms: dict) -> "Poly":
        # caller guarantees nonzero coefficients within truncation
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Terms in canonical graded-lex order (highest first)."""
        ring = self.ring
        return iter(sorted(self._terms.items(), key=lambda kv: (-ring.weight(kv[0]), tuple(-e for e in kv[0]))))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def constant_term(self) -> int:
        return self._terms.get((0,) * self.ring.nvars, 0)

    def coefficient(self, powers: Mapping[str, int] | None = None) -> int:
        """Coefficient of a monomial given as ``{name: exponent}``."""
        exps = [0] * self.ring.nvars
        for name, e in (powers or {}).items():
            exps[self.ring.index(name)] = e
        return self._terms.get(tuple(exps), 0)

    def degrees_present(self) -> set[int]:
        return {self.ring.weight(e) for e in self._terms}

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self.degrees_present())

    def homogeneous(self, d: int) -> "Poly":
        w = self.ring.weight
        return Poly._raw(self.ring, {e: c for e, c in self._terms.items() if w(e) == d})

    def graded_parts(self) -> list["Poly"]:
        """``[x_0, x_1, ..., x_T]`` with ``x_d`` the degree-``d`` part, ``T`` the truncation."""
        parts: list[dict] = [{} for _ in range(self.ring.truncation + 1)]
        w = self.ring.weight
        for e, c in self._terms.items():
            parts[w(e)][e] = c
        return [Poly._raw(self.ring, p) for p in parts]

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = self.degrees_present()
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs == {d})

    def variables_used(self) -> set[str]:
        names = self.ring.names
        return {names[i] for e in self._terms for i, k in enumerate(e) if k}

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((e[i] for e in self._terms), default=0)

    def linear_coefficients(self) -> dict[str, int]:
        """Coefficients of a homogeneous degree-one class, keyed by variable name."""
        out = {}
        for exps, c in self._terms.items():
            if sum(exps) != 1:
                raise ValueError(f"{self} is not linear in the ring variables")
            out[self.ring.names[exps.index(1)]] = c
        return out

    # -- ring changes -----------------------------------------------------

    def to_ring(self, target: RingSpec) -> "Poly":
        """Re-express in another roster by variable name, re-truncating.

        Every variable actually used must exist in ``target`` with the same
        degree.
        """
        if target == self.ring:
            return self
        src = self.ring
        pos = []
        for i, (name, deg) in enumerate(src.variables):
            j = target.names.index(name) if name in target.names else None
            if j is not None and target.variables[j][1] != deg:
                raise RingMismatchError(f"variable {name!r} has degree {deg} here but {target.variables[j][1]} in target")
            pos.append(j)
        out = {}
        for exps, c in self._terms.items():
            new = [0] * target.nvars
            for i, k in enumerate(exps):
                if k:
                    if pos[i] is None:
                        raise RingMismatchError(f"variable {src.names[i]!r} missing from target ring")
                    new[pos[i]] = k
            out[tuple(new)] = c
        return Poly(target, out)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero
            return Poly._raw(self.ring, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, k: int) -> "Poly":
        """Divide every coefficient by ``k``; raises if any division is inexact."""
        out = {}
        for e, c in self._terms.items():
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"coefficient {c} not divisible by {k}")
            out[e] = q
        return Poly._raw(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = self.ring.names
        chunks = []
        for exps, c in self.items():
            factors = [names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(exps) if k]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not chunks:
                chunks.append(body if c > 0 else "-" + body)
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def _check(x: Poly, y: Poly) -> None:
    if x.ring != y.ring:
        raise RingMismatchError("polynomials live in different rings")


def poly_add(x: Poly, y: Poly) -> Poly:
    _check(x, y)
    out = dict(x._terms)
    for e, c in y._terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return Poly._raw(x.ring, out)


def poly_mul(x: Poly, y: Poly) -> Poly:
    """Product with every monomial above the truncation degree dropped."""
    _check(x, y)
    ring = x.ring
    if not x._terms or not y._terms:
        return ring.zero
    top = ring.truncation
    w = ring.weight
    ys = sorted(((w(e), e, c) for e, c in y._terms.items()), key=lambda t: t[0])
    out: dict = {}
    for ea, ca in x._terms.items():
        room = top - w(ea)
        for wb, eb, cb in ys:
            if wb > room:
                break
            key = tuple(p + q for p, q in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return Poly._raw(ring, {e: c for e, c in out.items() if c})


def unit_series_inverse(x: Poly) -> Poly:
    """Inverse of ``x`` up to the truncation degree; constant term must be +-1."""
    c0 = x.constant_term
    if c0 not in (1, -1):
        raise ValueError(f"constant term {c0} is not a unit")
    parts = x.graded_parts()
    top = x.ring.truncation
    inv = [x.ring.const(c0)]
    # degree-by-degree from x*y = 1: y_d = -c0 * sum_{j>=1} x_j y_{d-j}
    for d in range(1, top + 1):
        acc = x.ring.zero
        for j in range(1, d + 1):
            if parts[j] and inv[d - j]:
                acc = acc + parts[j] * inv[d - j]
        inv.append(acc * (-c0))
    out = x.ring.zero
    for p in inv:
        out = out + p
    return out


def coeff_of_power(x: Poly, var: str, k: int) -> Poly:
    """The polynomial multiplying ``var^k`` in ``x`` (free of ``var``)."""
    i = x.ring.index(var)
    if k < 0:
        raise ValueError("power must be non-negative")
    out = {}
    for e, c in x._terms.items():
        if e[i] == k:
            out[e[:i] + (0,) + e[i + 1:]] = c
    return Poly._raw(x.ring, out)


def substitute(x: Poly, var: str, value: Poly | int) -> Poly:
    """Replace ``var`` by ``value`` and re-truncate."""
    i = x.ring.index(var)
    if isinstance(value, int):
        value = x.ring.const(value)
    _check(x, value)
    powers = {0: x.ring.one}
    by_power: dict[int, dict] = {}
    for e, c in x._terms.items():
        by_power.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
    out = x.ring.zero
    for k in sorted(by_power):
        if k not in powers:
            powers[k] = value ** k
        out = out + Poly._raw(x.ring, by_power[k]) * powers[k]
    return out


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(ring: RingSpec, text: str) -> Poly:
    """Parse the canonical text form, e.g. ``33*u + 34*v - 42*c1``."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return ring.zero
    out = ring.zero
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, body = m.group(1), m.group(2).strip()
        if sign is None and not first:
            raise ValueError(f"missing operator before {body!r}")
        first = False
        coeff = -1 if sign == "-" else 1
        powers: dict[str, int] = {}
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, exp = factor.partition("^")
            name = name.strip()
            k = int(exp) if exp else 1
            if not _NAME.match(name):
                raise ValueError(f"bad factor {factor!r}")
            if name not in ring.names:
                raise ValueError(f"unknown variable {name!r} (ring has {', '.join(ring.names)})")
            powers[name] = powers.get(name, 0) + k
        out = out + ring.monomial(powers, coeff)
        pos = m.end()
    return out
