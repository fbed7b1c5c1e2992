"""Exact dimensional algebra over CGS-Gaussian physical quantities.

A Dimension is a vector of rational exponents over the base dimensions
(mass, length, time, temperature). Charge is deliberately *not* a base
dimension: in Gaussian units e^2/r is an energy, which puts the esu at
g^(1/2) cm^(3/2) / s. Half-integer exponents are why the vector holds
fractions.Fraction rather than plain integers; Fraction also guarantees
the reduced-form invariants (gcd 1, positive denominator, 0 == 0/1).

Values are ordinary IEEE-754 doubles. Every operation that returns a
Quantity checks the result is finite and raises QuantityOverflowError
otherwise; nothing here ever hands back a NaN silently.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    DivisionByZeroError,
    DomainError,
    ParseError,
    QuantityOverflowError,
)

RationalLike = Fraction | int

_BASE_SYMBOLS = ("M", "L", "T", "K")
_BASE_UNITS = ("g", "cm", "s", "K")


def _as_fraction(p: RationalLike) -> Fraction:
    if isinstance(p, Fraction):
        return p
    if isinstance(p, int):
        return Fraction(p)
    raise TypeError(f"rational exponent expected, got {type(p).__name__}")


@dataclass(frozen=True)
class Dimension:
    """Rational exponent vector over (mass, length, time, temperature)."""

    mass: Fraction = Fraction(0)
    length: Fraction = Fraction(0)
    time: Fraction = Fraction(0)
    temperature: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("mass", "length", "time", "temperature"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, Fraction(v))

    def _exponents(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.mass, self.length, self.time, self.temperature)

    @property
    def is_dimensionless(self) -> bool:
        return all(e == 0 for e in self._exponents())

    def __mul__(self, other: "Dimension") -> "Dimension":
        return Dimension(*(a + b for a, b in zip(self._exponents(), other._exponents())))

    def __truediv__(self, other: "Dimension") -> "Dimension":
        return Dimension(*(a - b for a, b in zip(self._exponents(), other._exponents())))

    def __pow__(self, p: RationalLike) -> "Dimension":
        q = _as_fraction(p)
        return Dimension(*(e * q for e in self._exponents()))

    def inverse(self) -> "Dimension":
        return Dimension(*(-e for e in self._exponents()))

    def __str__(self) -> str:
        parts = []
        for sym, exp in zip(_BASE_SYMBOLS, self._exponents()):
            if exp == 0:
                continue
            if exp == 1:
                parts.append(sym)
            elif exp.denominator == 1:
                parts.append(f"{sym}^{exp.numerator}")
            else:
                parts.append(f"{sym}^({exp.numerator}/{exp.denominator})")
        return " ".join(parts) if parts else "dimensionless"

    def unit_string(self) -> str:
        """Render as a CGS unit expression, reparseable by parse_unit_text."""
        num, den = [], []
        for unit, exp in zip(_BASE_UNITS, self._exponents()):
            if exp == 0:
                continue
            mag = exp if exp > 0 else -exp
            atom = unit if mag == 1 else f"{unit}^({mag.numerator}/{mag.denominator})"
            (num if exp > 0 else den).append(atom)
        if not num and not den:
            return "1"
        head = "*".join(num) if num else "1"
        return head + "".join("/" + atom for atom in den)


DIMENSIONLESS = Dimension()
MASS = Dimension(mass=Fraction(1))
LENGTH = Dimension(length=Fraction(1))
TIME = Dimension(time=Fraction(1))
TEMPERATURE = Dimension(temperature=Fraction(1))

# Unit atoms accepted in constants files and after numeric literals.
# All carry scale factor 1 in CGS-Gaussian; only the dimension matters.
UNIT_DIMENSIONS: dict[str, Dimension] = {
    "g": MASS,
    "cm": LENGTH,
    "s": TIME,
    "K": TEMPERATURE,
    "erg": Dimension(Fraction(1), Fraction(2), Fraction(-2)),
    "esu": Dimension(Fraction(1, 2), Fraction(3, 2), Fraction(-1)),
}


def _finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise QuantityOverflowError(f"non-finite result in {what}: {value!r}")
    return value


@dataclass(frozen=True)
class Quantity:
    """A finite real magnitude paired with a Dimension."""

    value: float
    dim: Dimension = DIMENSIONLESS

    def _coerce(self, other) -> "Quantity":
        if isinstance(other, Quantity):
            return other
        if isinstance(other, (int, float)):
            return Quantity(float(other), DIMENSIONLESS)
        return NotImplemented

    def __mul__(self, other) -> "Quantity":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return Quantity(_finite(self.value * q.value, "multiplication"), self.dim * q.dim)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Quantity":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        if q.value == 0.0:
            raise DivisionByZeroError("division by zero quantity")
        return Quantity(_finite(self.value / q.value, "division"), self.dim / q.dim)

    def __rtruediv__(self, other) -> "Quantity":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return q / self

    def __add__(self, other) -> "Quantity":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        if self.dim != q.dim:
            raise DimensionMismatchError(self.dim, q.dim, context="addition")
        return Quantity(_finite(self.value + q.value, "addition"), self.dim)

    def __sub__(self, other) -> "Quantity":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        if self.dim != q.dim:
            raise DimensionMismatchError(self.dim, q.dim, context="subtraction")
        return Quantity(_finite(self.value - q.value, "subtraction"), self.dim)

    def __neg__(self) -> "Quantity":
        return Quantity(-self.value, self.dim)

    def pow(self, p: RationalLike) -> "Quantity":
        """Raise to an exact rational power; the exponent lattice stays rational.

        Fractional exponents demand a strictly positive base (real roots
        only); integer exponents work for any sign. p == 0 yields the
        dimensionless 1 regardless of the base dimension.
        """
        q = _as_fraction(p)
        if q == 0:
            return Quantity(1.0, DIMENSIONLESS)
        if q.denominator > 1 and self.value <= 0.0:
            raise DomainError(
                f"fractional power {q} of non-positive value {self.value!r}"
            )
        if self.value == 0.0 and q < 0:
            raise DivisionByZeroError("negative power of zero quantity")
        if q.denominator == 1:
            raw = self.value ** q.numerator
        else:
            raw = self.value ** float(q)
        return Quantity(_finite(raw, f"power {q}"), self.dim ** q)

    def __pow__(self, p: RationalLike) -> "Quantity":
        return self.pow(p)


def decades_deviation(a: Quantity, b: Quantity) -> float:
    """|log10(a/b)|: the order-of-magnitude distance between two quantities.

    Computed as |log10 a - log10 b| so the symmetry in the arguments is
    exact, not merely up to rounding.
    """
    if a.dim != b.dim:
        raise DimensionMismatchError(a.dim, b.dim, context="decades_deviation")
    if a.value <= 0.0 or b.value <= 0.0:
        raise DomainError(
            f"decades_deviation requires positive values, got {a.value!r} and {b.value!r}"
        )
    return abs(math.log10(a.value) - math.log10(b.value))


def agree_within(a: Quantity, b: Quantity, k: float) -> bool:
    """True iff a and b agree to within k decades."""
    return decades_deviation(a, b) <= k


_UNIT_ATOM_RE = re.compile(
    r"\s*([A-Za-z]+|1)\s*(?:\^\(\s*(-?\d+)\s*/\s*(\d+)\s*\)|\^(-?\d+))?\s*"
)


def parse_unit_text(text: str) -> Dimension:
    """Parse a unit expression like ``erg*s`` or ``cm^(3/1)/g/s^(2/1)``.

    Atoms come from UNIT_DIMENSIONS plus the literal ``1`` (dimensionless),
    joined by ``*`` and ``/`` with optional ``^(<int>/<int>)`` exponents.
    """
    pos = 0
    dim = DIMENSIONLESS
    sign = 1
    while True:
        m = _UNIT_ATOM_RE.match(text, pos)
        if not m:
            raise ParseError(f"bad unit expression {text!r} at offset {pos}")
        name = m.group(1)
        if name == "1":
            atom_dim = DIMENSIONLESS
        elif name in UNIT_DIMENSIONS:
            atom_dim = UNIT_DIMENSIONS[name]
        else:
            raise ParseError(f"unknown unit {name!r} in {text!r}")
        if m.group(2) is not None:
            exp = Fraction(int(m.group(2)), int(m.group(3)))
        elif m.group(4) is not None:
            exp = Fraction(int(m.group(4)))
        else:
            exp = Fraction(1)
        dim = dim * atom_dim ** (exp * sign)
        pos = m.end()
        if pos >= len(text):
            return dim
        if text[pos] == "*":
            sign = 1
        elif text[pos] == "/":
            sign = -1
        else:
            raise ParseError(f"bad unit expression {text!r} at offset {pos}")
        pos += 1
