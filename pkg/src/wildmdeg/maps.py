"""Polynomial maps of 3-space built from invertible generators.

A :class:`PolyMap` is a triple of polynomials in x, y, z.  Maps produced
by the constructors in this module carry a *factorization*: the list of
generators whose composition they are, each of which has a closed-form
inverse.  Such maps are automorphisms by construction, and their inverses
come from reversing and inverting the factor list — no elimination theory
is ever needed.

Generator kinds:

``Transposition``
    the linear swap (x, y, z) -> (z, y, x);
``Triangular(variable, shift)``
    adds a polynomial in the *other two* variables to one coordinate;
``NagataShear(power, scale)``
    the shear (x - 2c*y*q^k - c^2*z*q^2k, y + c*z*q^k, z) along the level
    sets of the invariant quadric q = y^2 + x*z.

Coordinates of a factored map are realized lazily: composing a factored
map with another map folds the generators one at a time, which keeps the
intermediate polynomials small (crucial when verifying that high-degree
constructions compose with their inverses to the identity).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .poly import Coeff, Polynomial, X, Y, Z, _VAR_INDEX

#: The quadric y^2 + x*z preserved by every Nagata shear.
INVARIANT_QUADRIC = Y * Y + X * Z

Coords = Tuple[Polynomial, Polynomial, Polynomial]


class UnknownFactorization(ValueError):
    """Raised when an operation needs a factorization the map lacks."""


@dataclass(frozen=True)
class Transposition:
    """Swap of the outer variables: (x, y, z) -> (z, y, x)."""

    def applied_to(self, coords: Coords) -> Coords:
        u, v, w = coords
        return (w, v, u)

    def inverted(self) -> "Transposition":
        return self

    def token(self) -> str:
        return "T"


@dataclass(frozen=True)
class Triangular:
    """Add a polynomial in the other two variables to one coordinate."""

    variable: str
    shift: Polynomial

    def __post_init__(self):
        if self.variable not in _VAR_INDEX:
            raise ValueError(f"unknown variable {self.variable!r}")
        index = _VAR_INDEX[self.variable]
        if any(term[index] for term in self.shift.terms()):
            raise ValueError(
                f"triangular shift must not involve {self.variable!r}"
            )

    def applied_to(self, coords: Coords) -> Coords:
        u, v, w = coords
        s = self.shift.substitute(u, v, w)
        index = _VAR_INDEX[self.variable]
        if index == 0:
            return (u + s, v, w)
        if index == 1:
            return (u, v + s, w)
        return (u, v, w + s)

    def inverted(self) -> "Triangular":
        return Triangular(self.variable, -self.shift)

    def token(self) -> str:
        return f"shift({self.variable}, {self.shift})"


@dataclass(frozen=True)
class NagataShear:
    """Exponential shear along the invariant quadric q = y^2 + x*z.

    With q-power k and scale c this is
    (x - 2c*y*q^k - c^2*z*q^2k,  y + c*z*q^k,  z); scale -1 gives the
    inverse of scale +1.
    """

    power: int
    scale: Coeff = 1

    def __post_init__(self):
        if not isinstance(self.power, int) or self.power < 1:
            raise ValueError("shear power must be a positive integer")
        if isinstance(self.scale, bool) or not isinstance(
            self.scale, (int, Fraction)
        ):
            raise TypeError("shear scale must be int or Fraction")
        if self.scale == 0:
            raise ValueError("shear scale must be nonzero")

    def applied_to(self, coords: Coords) -> Coords:
        u, v, w = coords
        quadric = v * v + u * w
        q_k = quadric**self.power
        q_2k = q_k * q_k
        c = self.scale
        first = u - (v * q_k) * (2 * c) - (w * q_2k) * (c * c)
        second = v + (w * q_k) * c
        return (first, second, w)

    def inverted(self) -> "NagataShear":
        return NagataShear(self.power, -self.scale)

    def token(self) -> str:
        if self.scale == 1:
            return f"nagata({self.power})"
        return f"nagata({self.power})^{self.scale}"


Generator = Union[Transposition, Triangular, NagataShear]
_GENERATOR_TYPES = (Transposition, Triangular, NagataShear)


def _apply_factors(factors: Sequence[Generator], coords: Coords) -> Coords:
    # factors are listed in composition order: the last one acts first
    for generator in reversed(factors):
        coords = generator.applied_to(coords)
    return coords


class PolyMap:
    """Polynomial map of 3-space, optionally carrying its factorization."""

    __slots__ = ("_coords", "_factors")

    def __init__(
        self,
        coords: Optional[Iterable[Polynomial]] = None,
        factors: Optional[Iterable[Generator]] = None,
    ):
        if coords is None and factors is None:
            raise ValueError("a map needs coordinates or a factorization")
        if coords is not None:
            coords = tuple(coords)
            if len(coords) != 3 or not all(
                isinstance(c, Polynomial) for c in coords
            ):
                raise TypeError("coords must be three Polynomial values")
        if factors is not None:
            factors = tuple(factors)
            for generator in factors:
                if not isinstance(generator, _GENERATOR_TYPES):
                    raise TypeError(f"unknown generator {generator!r}")
        self._coords = coords
        self._factors = factors

    @property
    def coords(self) -> Coords:
        if self._coords is None:
            self._coords = _apply_factors(self._factors, (X, Y, Z))
        return self._coords

    @property
    def factors(self) -> Optional[Tuple[Generator, ...]]:
        return self._factors

    def multidegree(self) -> Tuple[int, int, int]:
        return multidegree(self)

    def inverse(self) -> "PolyMap":
        return inverse(self)

    def is_identity(self) -> bool:
        return is_identity(self)

    def to_dict(self) -> dict:
        document = {"coords": [str(c) for c in self.coords]}
        if self._factors is not None:
            document["factors"] = [g.token() for g in self._factors]
        return document

    def __mul__(self, other: object) -> "PolyMap":
        if not isinstance(other, PolyMap):
            return NotImplemented
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.coords == other.coords

    __hash__ = None  # mutable cache; identity-by-coords only via ==

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"PolyMap({str(self)})"


def compose(outer: PolyMap, inner: PolyMap) -> PolyMap:
    """Composition applying ``inner`` first, then ``outer``.

    The coordinates are those of ``outer`` with x, y, z replaced by the
    coordinates of ``inner``.  When ``outer`` is factored, its generators
    are folded one at a time onto ``inner``'s coordinates.
    """
    if outer.factors is not None:
        coords = _apply_factors(outer.factors, inner.coords)
    else:
        cx, cy, cz = inner.coords
        coords = tuple(c.substitute(cx, cy, cz) for c in outer.coords)
    factors = None
    if outer.factors is not None and inner.factors is not None:
        factors = outer.factors + inner.factors
    return PolyMap(coords=coords, factors=factors)


def inverse(map_: PolyMap) -> PolyMap:
    """Inverse from the factorization (closed form, factor by factor)."""
    if map_.factors is None:
        raise UnknownFactorization(
            "inverse needs a factored map; this one has no factorization"
        )
    return PolyMap(
        factors=tuple(g.inverted() for g in reversed(map_.factors))
    )


def multidegree(map_: PolyMap) -> Tuple[int, int, int]:
    """Coordinate degrees, in coordinate order (not sorted)."""
    degrees = []
    for position, coord in zip(("first", "second", "third"), map_.coords):
        if coord.is_zero():
            raise ValueError(
                f"{position} coordinate is zero; the map is not an automorphism"
            )
        degrees.append(coord.total_degree())
    return tuple(degrees)


def is_identity(map_: PolyMap) -> bool:
    return map_.coords == (X, Y, Z)


def identity() -> PolyMap:
    return PolyMap(coords=(X, Y, Z), factors=())


def transposition() -> PolyMap:
    """The swap (x, y, z) -> (z, y, x)."""
    return PolyMap(coords=(Z, Y, X), factors=(Transposition(),))


def triangular(variable: str, shift: Polynomial) -> PolyMap:
    """Elementary map adding ``shift`` (free of ``variable``) to one coordinate."""
    generator = Triangular(variable, shift)
    return PolyMap(
        coords=generator.applied_to((X, Y, Z)), factors=(generator,)
    )


def z_shift(d: int) -> PolyMap:
    """The triangular map (x, y, z + x^d)."""
    if not isinstance(d, int) or d < 1:
        raise ValueError("z_shift needs a positive integer power")
    return triangular("z", X**d)


def nagata(k: int) -> PolyMap:
    """k-th power Nagata-type shear, in closed form.

    Coordinates (x - 2y*q^k - z*q^2k, y + z*q^k, z) with q = y^2 + x*z;
    k = 1 is the classical Nagata automorphism, with multidegree (5, 3, 1).
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError("nagata needs a positive integer power")
    q_k = INVARIANT_QUADRIC**k
    q_2k = q_k * q_k
    coords = (X - (Y * q_k) * 2 - Z * q_2k, Y + Z * q_k, Z)
    return PolyMap(coords=coords, factors=(NagataShear(k),))


def sheared_nagata(d: int, k: int) -> PolyMap:
    """Transposition ∘ nagata(k) ∘ z_shift(d).

    Its multidegree is (d, d + k(d+1), d + 2k(d+1)).
    """
    if not isinstance(d, int) or d < 1:
        raise ValueError("sheared_nagata needs d >= 1")
    return compose(compose(transposition(), nagata(k)), z_shift(d))


def short_progression_map(l: int, k: int) -> PolyMap:
    """Composite of two transposed Nagata shears.

    Realizes the arithmetic-progression multidegree
    (4l+1, 4l+1 + 2k, 4l+1 + 4k).  The construction leans on the identity
    g^2 + f*h = y^2 + x*z for the inner map (f, g, h), which is checked at
    build time.
    """
    if not isinstance(l, int) or l < 1:
        raise ValueError("short_progression_map needs l >= 1")
    if not isinstance(k, int) or k < 1:
        raise ValueError("short_progression_map needs k >= 1")
    inner = compose(transposition(), nagata(l))
    f, g, h = inner.coords
    if g * g + f * h != INVARIANT_QUADRIC:
        raise AssertionError(
            "inner map lost the invariant quadric; construction is broken"
        )
    return compose(compose(transposition(), nagata(k)), inner)


def long_progression_map(r: int, k: int) -> PolyMap:
    """Map with multidegree (r, r + k(r+1), r + 2k(r+1)) for any r >= 1.

    For r = 1 this is transposition ∘ nagata(k); for larger r it is the
    sheared construction.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError("long_progression_map needs r >= 1")
    if not isinstance(k, int) or k < 1:
        raise ValueError("long_progression_map needs k >= 1")
    if r == 1:
        return compose(transposition(), nagata(k))
    return sheared_nagata(r, k)


def tame_witness(d1: int, d2: int, d3: int, a: int, b: int) -> PolyMap:
    """Tame map with multidegree (d1, d2, d3), given a*d1 + b*d2 = d3.

    The map is (x + z^d1, y + z^d2, z + (x + z^d1)^a * (y + z^d2)^b),
    composed from three triangular generators.
    """
    for name, value in (("d1", d1), ("d2", d2), ("d3", d3)):
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"{name} must be a positive integer")
    if not (d1 <= d2 <= d3):
        raise ValueError("degrees must satisfy d1 <= d2 <= d3")
    for name, value in (("a", a), ("b", b)):
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"{name} must be a non-negative integer")
    if (a, b) == (0, 0):
        raise ValueError("witness exponents (a, b) must not both be zero")
    if a * d1 + b * d2 != d3:
        raise ValueError(
            f"witness exponents do not reach d3: {a}*{d1} + {b}*{d2} != {d3}"
        )
    factors = (
        Triangular("z", (X**a) * (Y**b)),
        Triangular("x", Z**d1),
        Triangular("y", Z**d2),
    )
    return PolyMap(factors=factors)
