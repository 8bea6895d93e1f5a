"""Exact sparse polynomials in the variables x, y, z over the rationals.

Polynomials are immutable value objects: every operation returns a new
instance and no floating point is involved anywhere.  Coefficients are
Python ints or :class:`fractions.Fraction` values, so arithmetic is exact
at arbitrary size.

A polynomial is stored as a mapping from exponent triples ``(ex, ey, ez)``
to nonzero coefficients.  The zero polynomial is the empty mapping, and
its total degree is the sentinel ``MINUS_INFINITY`` (never ``-1``), which
orders below every integer and absorbs integer addition.

Text format, shared by :func:`parse` and ``str()``::

    polynomial = terms joined by '+' / '-'
    term       = optional rational coefficient ('7' or '7/2') and
                 '*'-separated variable powers 'x^e', 'y^e', 'z^e'

Input may additionally use parentheses and '^' on parenthesized groups,
e.g. ``x - 2*y*(y^2+z*x) - z*(y^2+z*x)^2``.  Output is always the expanded
normal form with terms in descending graded lexicographic order (total
degree first, then x > y > z), so rendered strings are stable across runs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional, Tuple, Union

Term = Tuple[int, int, int]
Coeff = Union[int, Fraction]

VARIABLES = ("x", "y", "z")
_VAR_INDEX = {"x": 0, "y": 1, "z": 2}

#: Largest exponent accepted by the parser and the term validator.
MAX_EXPONENT = 10**9


class MinusInfinity:
    """Total degree of the zero polynomial.

    A single instance exists (``MINUS_INFINITY``).  It compares strictly
    below every integer and absorbs integer addition, so degree arithmetic
    never silently treats the zero polynomial as a constant.
    """

    _instance: Optional["MinusInfinity"] = None

    def __new__(cls) -> "MinusInfinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other: object) -> bool:
        return not isinstance(other, MinusInfinity)

    def __le__(self, other: object) -> bool:
        return True

    def __gt__(self, other: object) -> bool:
        return False

    def __ge__(self, other: object) -> bool:
        return isinstance(other, MinusInfinity)

    def __add__(self, other: object) -> "MinusInfinity":
        if isinstance(other, (int, MinusInfinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __repr__(self) -> str:
        return "MINUS_INFINITY"


MINUS_INFINITY = MinusInfinity()

Degree = Union[int, MinusInfinity]


def _check_coeff(value: object) -> Coeff:
    if isinstance(value, bool):
        raise TypeError("coefficients must be int or Fraction, not bool")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        # keep integral values as plain ints; cheaper and renders identically
        return int(value) if value.denominator == 1 else value
    raise TypeError(
        f"coefficients must be int or Fraction, got {type(value).__name__}"
    )


def _check_term(term: object) -> Term:
    if (
        not isinstance(term, tuple)
        or len(term) != 3
        or not all(isinstance(e, int) and not isinstance(e, bool) for e in term)
    ):
        raise TypeError(f"a monomial is a triple of ints, got {term!r}")
    if any(e < 0 for e in term):
        raise ValueError(f"monomial exponents must be non-negative, got {term!r}")
    if any(e > MAX_EXPONENT for e in term):
        raise OverflowError(f"monomial exponent exceeds {MAX_EXPONENT}")
    return term


def _grlex(term: Term) -> Tuple[int, Term]:
    """Sort key for graded lexicographic order with x > y > z."""
    return (term[0] + term[1] + term[2], term)


class Polynomial:
    """Immutable sparse polynomial in x, y, z with exact coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Term, Coeff]] = None):
        clean: dict = {}
        if terms:
            for term, coeff in terms.items():
                term = _check_term(term)
                coeff = _check_coeff(coeff)
                if coeff:
                    clean[term] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        # internal fast path: `terms` is already validated and zero-pruned
        poly = object.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, value: Coeff) -> "Polynomial":
        value = _check_coeff(value)
        return cls._raw({(0, 0, 0): value} if value else {})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}; expected one of x, y, z")
        exponents = [0, 0, 0]
        exponents[_VAR_INDEX[name]] = 1
        return cls._raw({tuple(exponents): 1})

    # -- structure -----------------------------------------------------

    def terms(self) -> dict:
        """Copy of the term map (exponent triple -> coefficient)."""
        return dict(self._terms)

    def coefficient(self, term: Term) -> Coeff:
        """Coefficient of the given exponent triple (0 when absent)."""
        return self._terms.get(_check_term(term), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> Degree:
        """Maximal term degree; ``MINUS_INFINITY`` for the zero polynomial."""
        if not self._terms:
            return MINUS_INFINITY
        return max(ex + ey + ez for (ex, ey, ez) in self._terms)

    def is_homogeneous(self) -> bool:
        degrees = {ex + ey + ez for (ex, ey, ez) in self._terms}
        return len(degrees) <= 1

    def has_integer_coefficients(self) -> bool:
        return all(
            isinstance(c, int) or c.denominator == 1 for c in self._terms.values()
        )

    def top_form(self) -> "Polynomial":
        """Sum of the terms of maximal total degree.  Raises on zero."""
        if not self._terms:
            raise ValueError("the zero polynomial has no top form")
        degree = self.total_degree()
        return Polynomial._raw(
            {t: c for t, c in self._terms.items() if t[0] + t[1] + t[2] == degree}
        )

    def partial(self, variable: str) -> "Polynomial":
        """Formal partial derivative with respect to ``variable``."""
        if variable not in _VAR_INDEX:
            raise ValueError(f"unknown variable {variable!r}; expected one of x, y, z")
        index = _VAR_INDEX[variable]
        out = {}
        for term, coeff in self._terms.items():
            e = term[index]
            if e:
                lowered = list(term)
                lowered[index] = e - 1
                out[tuple(lowered)] = coeff * e
        return Polynomial._raw(out)

    # -- arithmetic ------------------------------------------------------

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({t: -c for t, c in self._terms.items()})

    def __add__(self, other: object) -> "Polynomial":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for term, coeff in rhs._terms.items():
            value = out.get(term, 0) + coeff
            if value:
                out[term] = value
            else:
                out.pop(term, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Polynomial":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Polynomial":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, Polynomial):
            out: dict = {}
            for (a0, a1, a2), ca in self._terms.items():
                for (b0, b1, b2), cb in other._terms.items():
                    key = (a0 + b0, a1 + b1, a2 + b2)
                    value = out.get(key, 0) + ca * cb
                    if value:
                        out[key] = value
                    else:
                        out.pop(key, None)
            return Polynomial._raw(out)
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            scalar = _check_coeff(other)
            if not scalar:
                return ZERO
            return Polynomial._raw({t: c * scalar for t, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: object) -> "Polynomial":
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("polynomial exponent must be non-negative")
        result = ONE
        base = self
        n = exponent
        while True:
            if n & 1:
                result = result * base
            n >>= 1
            if not n:
                return result
            base = base * base

    def substitute(
        self,
        x_image: "Polynomial",
        y_image: "Polynomial",
        z_image: "Polynomial",
    ) -> "Polynomial":
        """Evaluate at three polynomial arguments (map-composition workhorse)."""
        if not self._terms:
            return ZERO
        pow_x = _power_table(x_image, max(t[0] for t in self._terms))
        pow_y = _power_table(y_image, max(t[1] for t in self._terms))
        pow_z = _power_table(z_image, max(t[2] for t in self._terms))
        out: dict = {}
        for (ex, ey, ez), coeff in self._terms.items():
            piece = pow_x[ex] * pow_y[ey] * pow_z[ez]
            for term, c in piece._terms.items():
                out[term] = out.get(term, 0) + coeff * c
        return Polynomial._raw({t: c for t, c in out.items() if c})

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for term in sorted(self._terms, key=_grlex, reverse=True):
            coeff = self._terms[term]
            negative = coeff < 0
            body = _render_term(-coeff if negative else coeff, term)
            if not chunks:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _coerce(value: object) -> Optional[Polynomial]:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return None


def _power_table(poly: Polynomial, up_to: int) -> list:
    table = [ONE]
    for _ in range(up_to):
        table.append(table[-1] * poly)
    return table


def _render_term(coeff: Coeff, term: Term) -> str:
    powers = []
    for name, e in zip(VARIABLES, term):
        if e == 1:
            powers.append(name)
        elif e > 1:
            powers.append(f"{name}^{e}")
    if not powers:
        return str(coeff)
    if coeff == 1:
        return "*".join(powers)
    return f"{coeff}*" + "*".join(powers)


ZERO = Polynomial()
ONE = Polynomial.constant(1)
X = Polynomial.variable("x")
Y = Polynomial.variable("y")
Z = Polynomial.variable("z")


class ParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse(text: str) -> Polynomial:
    """Parse the polynomial grammar described in the module docstring."""
    return _Parser(text).run()


class _Parser:
    """Recursive-descent parser over the +, -, *, ^, () grammar."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def run(self) -> Polynomial:
        value = self._expression()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing input", self.pos)
        return value

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> Optional[str]:
        self._skip_ws()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return None

    def _expression(self) -> Polynomial:
        sign = 1
        while self._peek() in ("+", "-"):
            if self.text[self.pos] == "-":
                sign = -sign
            self.pos += 1
        value = self._term()
        if sign < 0:
            value = -value
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                value = value + self._term()
            elif ch == "-":
                self.pos += 1
                value = value - self._term()
            else:
                return value

    def _term(self) -> Polynomial:
        value = self._factor()
        while self._peek() == "*":
            self.pos += 1
            value = value * self._factor()
        return value

    def _factor(self) -> Polynomial:
        atom = self._atom()
        if self._peek() == "^":
            self.pos += 1
            exponent = self._integer("exponent")
            if exponent > MAX_EXPONENT:
                raise ParseError(f"exponent exceeds {MAX_EXPONENT}", self.pos)
            atom = atom**exponent
        return atom

    def _atom(self) -> Polynomial:
        ch = self._peek()
        if ch is None:
            raise ParseError("unexpected end of input", self.pos)
        if ch == "(":
            self.pos += 1
            value = self._expression()
            if self._peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return value
        if ch.isdigit():
            numerator = self._integer("integer")
            if self._peek() == "/":
                self.pos += 1
                at = self.pos
                denominator = self._integer("denominator")
                if denominator == 0:
                    raise ParseError("zero denominator", at)
                return Polynomial.constant(Fraction(numerator, denominator))
            return Polynomial.constant(numerator)
        if ch in _VAR_INDEX:
            self.pos += 1
            return Polynomial.variable(ch)
        raise ParseError(f"unexpected character {ch!r}", self.pos)

    def _integer(self, what: str) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(f"expected {what}", start)
        return int(self.text[start : self.pos])


def is_scaled_power(
    candidate: Polynomial, base: Polynomial
) -> Optional[Tuple[Coeff, int]]:
    """Write ``candidate`` as ``c * base**t`` when possible.

    Both arguments must be nonzero and homogeneous.  Returns ``(c, t)``
    with ``t >= 0`` when such a representation exists, else ``None``.
    """
    if candidate.is_zero() or base.is_zero():
        raise ValueError("is_scaled_power needs nonzero polynomials")
    if not candidate.is_homogeneous() or not base.is_homogeneous():
        raise ValueError("is_scaled_power needs homogeneous polynomials")
    deg_candidate = candidate.total_degree()
    deg_base = base.total_degree()
    if deg_candidate == 0:
        return (candidate.coefficient((0, 0, 0)), 0)
    if deg_base == 0 or deg_candidate % deg_base:
        return None
    t = deg_candidate // deg_base
    power = base**t
    lead = max(power._terms, key=_grlex)
    numerator = candidate.coefficient(lead)
    if numerator == 0:
        return None
    scale = _check_coeff(Fraction(numerator) / Fraction(power._terms[lead]))
    if candidate == power * scale:
        return (scale, t)
    return None
