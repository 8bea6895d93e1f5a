"""Degree lower bounds that rule out elementary reductions.

For a would-be elementary reduction of an automorphism F one coordinate
must drop in degree after subtracting a polynomial G evaluated at the
other two coordinates.  A Shestakov–Umirbaev-style inequality bounds
deg G(f, g) from below in terms of deg f, deg g, the y-degree split of G
(q, r) and a lower bound on the degree of the Poisson-type bracket [f, g].

This module packages those bounds as executable inequality checks: for
the even-degree map family with multidegree (d, d+k(d+1), d+2k(d+1)) it
audits every inequality and gcd fact needed to exclude an elementary
reduction of each coordinate, and separately checks the parity/ratio
conditions that exclude the delicate type-III reduction shape.  Together
the two reports certify non-tameness of the triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Tuple, Union

from .poly import Degree, MINUS_INFINITY, Polynomial

REDUCTION_IMPOSSIBLE = "reduction_impossible"
INCONCLUSIVE = "inconclusive"


def bracket_degree(f: Polynomial, g: Polynomial) -> Degree:
    """2 + max degree of the Jacobian 2x2 minors of (f, g).

    Returns ``MINUS_INFINITY`` when every minor vanishes, which signals
    algebraic dependence of f and g (the "+2" is absorbed by the
    sentinel).  Raises on zero input.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("bracket_degree needs nonzero polynomials")
    best: Degree = MINUS_INFINITY
    for v, w in (("x", "y"), ("x", "z"), ("y", "z")):
        minor = f.partial(v) * g.partial(w) - f.partial(w) * g.partial(v)
        degree = minor.total_degree()
        if degree > best:
            best = degree
    return best + 2


@dataclass(frozen=True)
class ReductionQuery:
    """Inputs of the composition-degree lower bound.

    ``deg_f < deg_g`` are the degrees of the two coordinates used to build
    G(f, g); ``q`` and ``r`` split the degree of G in its second argument
    as p*q + r with 0 <= r < p, where p = deg_f / gcd(deg_f, deg_g); and
    ``bracket_deg_lb`` is a lower bound (>= 2) for deg [f, g].
    """

    deg_f: int
    deg_g: int
    q: int
    r: int
    bracket_deg_lb: int = 2

    def __post_init__(self):
        for name in ("deg_f", "deg_g", "q", "r", "bracket_deg_lb"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an int")
        if not 0 < self.deg_f < self.deg_g:
            raise ValueError("need 0 < deg_f < deg_g")
        if self.q < 0:
            raise ValueError("q must be non-negative")
        if self.bracket_deg_lb < 2:
            raise ValueError("bracket degree lower bound is at least 2")
        if not 0 <= self.r < self.p:
            raise ValueError(f"r must satisfy 0 <= r < p = {self.p}")

    @property
    def p(self) -> int:
        return self.deg_f // gcd(self.deg_f, self.deg_g)


def su_lower_bound(query: ReductionQuery) -> int:
    """Lower bound for deg G(f, g): q*(p*deg_g - deg_g - deg_f + lb) + r*deg_g."""
    p = query.p
    return (
        query.q
        * (p * query.deg_g - query.deg_g - query.deg_f + query.bracket_deg_lb)
        + query.r * query.deg_g
    )


@dataclass(frozen=True)
class InequalityCheck:
    """One named numeric fact; the relation is spelled out in ``name``."""

    name: str
    lhs: int
    rhs: int
    holds: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class CaseReport:
    """Audit of one coordinate's elementary-reduction case analysis."""

    coordinate: str
    checks: Tuple[InequalityCheck, ...]
    conclusion: str

    @classmethod
    def from_checks(
        cls, coordinate: str, checks: List[InequalityCheck]
    ) -> "CaseReport":
        verdict = (
            REDUCTION_IMPOSSIBLE
            if all(c.holds for c in checks)
            else INCONCLUSIVE
        )
        return cls(coordinate, tuple(checks), verdict)

    def to_dict(self) -> dict:
        return {
            "coordinate": self.coordinate,
            "checks": [c.to_dict() for c in self.checks],
            "conclusion": self.conclusion,
        }


def _check(name: str, lhs: int, rhs: int, holds: bool) -> InequalityCheck:
    return InequalityCheck(name, lhs, rhs, holds)


def no_elementary_reduction_check(d: int, k: int) -> List[CaseReport]:
    """Per-coordinate inequality audit for the (d, d+k(d+1), d+2k(d+1)) family.

    Requires even d with d > 4, or d = 4 with odd k, and gcd(d, k) = 1.
    Each report lists the gcd facts and inequalities that together rule
    out an elementary reduction of that coordinate; its conclusion is
    ``reduction_impossible`` exactly when all of them hold.
    """
    if not isinstance(d, int) or not isinstance(k, int):
        raise TypeError("d and k must be ints")
    if k < 1:
        raise ValueError("k must be a positive integer")
    if d % 2:
        raise ValueError("d must be even")
    if d < 4:
        raise ValueError("d must be at least 4")
    if d == 4 and k % 2 == 0:
        raise ValueError("for d = 4 the parameter k must be odd")
    if gcd(d, k) != 1:
        raise ValueError(f"gcd(d, k) must be 1, got gcd({d}, {k}) = {gcd(d, k)}")

    d1 = d
    d2 = d + k * (d + 1)
    d3 = d + 2 * k * (d + 1)

    # First coordinate: G built from the degree-(d2, d3) pair.
    reports = [
        CaseReport.from_checks(
            "first",
            [
                _check("gcd(d2, d3) == 1", gcd(d2, d3), 1, gcd(d2, d3) == 1),
                _check(
                    "d1 < (d2 - 1)*(d3 - 1), so q = 0",
                    d1,
                    (d2 - 1) * (d3 - 1),
                    d1 < (d2 - 1) * (d3 - 1),
                ),
                _check("d1 < d3, so r = 0", d1, d3, d1 < d3),
                _check(
                    "d1 < d2, so d1 is no multiple of d2", d1, d2, d1 < d2
                ),
            ],
        )
    ]

    # Second coordinate: G built from the degree-(d1, d3) pair; p = d/2.
    exact_floor = ((d - 2) // 2) * (2 * k * (d + 1) + d) - d + 2
    middle_floor = (d - 2) * k * (d + 1) + 2
    final_floor = k * (d + 1) + d + 2
    reports.append(
        CaseReport.from_checks(
            "second",
            [
                _check("gcd(d1, d3) == 2", gcd(d1, d3), 2, gcd(d1, d3) == 2),
                _check("p = d/2 >= 2", d // 2, 2, d // 2 >= 2),
                _check(
                    "exact q-coefficient >= (d-2)*k*(d+1) + 2",
                    exact_floor,
                    middle_floor,
                    exact_floor >= middle_floor,
                ),
                _check(
                    "(d-2)*k*(d+1) + 2 >= k*(d+1) + d + 2",
                    middle_floor,
                    final_floor,
                    middle_floor >= final_floor,
                ),
                _check(
                    "d2 < k*(d+1) + d + 2, so q = 0",
                    d2,
                    final_floor,
                    d2 < final_floor,
                ),
                _check("d2 < d3, so r = 0", d2, d3, d2 < d3),
                _check("gcd(d1, d2) == 1", gcd(d1, d2), 1, gcd(d1, d2) == 1),
                _check(
                    "1 < d1, so d2 is no multiple of d1", 1, d1, 1 < d1
                ),
            ],
        )
    )

    # Third coordinate: G built from the degree-(d1, d2) pair; p = d.
    exact_floor_3 = (d - 1) * d2 - d + 2
    floor_3 = 2 * k * (d + 1) + d + 2
    reports.append(
        CaseReport.from_checks(
            "third",
            [
                _check("gcd(d1, d2) == 1", gcd(d1, d2), 1, gcd(d1, d2) == 1),
                _check(
                    "exact q-coefficient >= 2*k*(d+1) + d + 2",
                    exact_floor_3,
                    floor_3,
                    exact_floor_3 >= floor_3,
                ),
                _check(
                    "d3 < 2*k*(d+1) + d + 2, so q = 0",
                    d3,
                    floor_3,
                    d3 < floor_3,
                ),
                _check("d3 < 2*d2, so r <= 1", d3, 2 * d2, d3 < 2 * d2),
                _check(
                    "r = 0 case: gcd(d3, d1) == 2",
                    gcd(d3, d1),
                    2,
                    gcd(d3, d1) == 2,
                ),
                _check("r = 0 case: 2 < d1", 2, d1, 2 < d1),
                _check(
                    "r = 1 case: gcd(d3 - d2, d1) == 1",
                    gcd(d3 - d2, d1),
                    1,
                    gcd(d3 - d2, d1) == 1,
                ),
                _check("r = 1 case: 1 < d1", 1, d1, 1 < d1),
            ],
        )
    )
    return reports


@dataclass(frozen=True)
class TypeThreeReport:
    """Necessary conditions for a type-III reduction shape.

    ``condition1``: the middle degree is even; ``condition2``: 3 divides
    the smallest degree or the top/middle ratio is exactly 3/2.  The shape
    is excluded whenever either condition fails.
    """

    triple: Tuple[int, int, int]
    condition1: bool
    condition2: bool
    excluded: bool

    def to_dict(self) -> dict:
        return {
            "triple": list(self.triple),
            "condition1": self.condition1,
            "condition2": self.condition2,
            "excluded": self.excluded,
        }


def type_iii_check(triple: Tuple[int, int, int]) -> TypeThreeReport:
    """Evaluate the type-III necessary conditions on a sorted degree triple."""
    d1, d2, d3 = _validate_sorted_triple(triple)
    condition1 = d2 % 2 == 0
    condition2 = (d1 % 3 == 0) or (2 * d3 == 3 * d2)
    return TypeThreeReport(
        (d1, d2, d3), condition1, condition2, not (condition1 and condition2)
    )


def _validate_sorted_triple(triple) -> Tuple[int, int, int]:
    values = tuple(triple)
    if len(values) != 3 or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in values
    ):
        raise ValueError(f"a degree triple is three ints, got {triple!r}")
    d1, d2, d3 = values
    if d1 < 1:
        raise ValueError("degrees must be positive")
    if not d1 <= d2 <= d3:
        raise ValueError(f"degree triple must be sorted, got {values}")
    return values
