"""Exact arithmetic on angles that are rational multiples of pi.

All vertex conditions in the tilings handled by this package are linear
identities over rational multiples of pi, so angles are kept as reduced
fractions and only converted to floating point at the numerical boundary
(trigonometry, realization).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

TWO_PI = 2.0 * math.pi

#: default tolerance for floating comparisons of internally solved values
TOL = 1e-9
#: tolerance against 4-decimal printed values (multiples of pi)
PAPER_TOL = 1.5e-4 * math.pi


@dataclass(frozen=True, order=False)
class Angle:
    """An exact angle ``(num/den) * pi``, reduced to lowest terms."""

    num: int
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("angle denominator must be nonzero")
        frac = Fraction(self.num, self.den)
        object.__setattr__(self, "num", frac.numerator)
        object.__setattr__(self, "den", frac.denominator)

    @classmethod
    def from_fraction(cls, frac: Fraction) -> "Angle":
        return cls(frac.numerator, frac.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def radians(self) -> float:
        return self.num * math.pi / self.den

    def __float__(self) -> float:
        return self.radians

    def __add__(self, other: "Angle") -> "Angle":
        if not isinstance(other, Angle):
            return NotImplemented
        return Angle.from_fraction(self.fraction + other.fraction)

    def __sub__(self, other: "Angle") -> "Angle":
        if not isinstance(other, Angle):
            return NotImplemented
        return Angle.from_fraction(self.fraction - other.fraction)

    def __neg__(self) -> "Angle":
        return Angle(-self.num, self.den)

    def __mul__(self, k) -> "Angle":
        if isinstance(k, (int, Fraction)):
            return Angle.from_fraction(self.fraction * k)
        return NotImplemented

    __rmul__ = __mul__

    def __lt__(self, other: "Angle") -> bool:
        return self.fraction < other.fraction

    def __le__(self, other: "Angle") -> bool:
        return self.fraction <= other.fraction

    def __str__(self) -> str:
        if self.num == 0:
            return "0"
        if self.den == 1:
            return f"{self.num}π" if self.num != 1 else "π"
        return f"({self.num}/{self.den})π"

    def to_json(self) -> dict:
        return {"num": self.num, "den": self.den}


@dataclass(frozen=True)
class FreeAngle:
    """An angle known only numerically, in radians, strictly in (0, 2*pi)."""

    value: float

    def __post_init__(self):
        if not 0.0 < self.value < TWO_PI:
            raise ValueError(f"free angle {self.value} outside (0, 2pi)")

    @property
    def radians(self) -> float:
        return self.value

    def __float__(self) -> float:
        return self.value

    def to_json(self) -> dict:
        return {"rad": self.value}


AngleLike = Angle | FreeAngle | float | int


def radians(x: AngleLike) -> float:
    """Numeric value of an Angle, FreeAngle, or plain number."""
    return float(x)


def angle_from_json(obj: dict) -> Angle | FreeAngle:
    if "num" in obj:
        return Angle(obj["num"], obj.get("den", 1))
    return FreeAngle(obj["rad"])


def parse_angle(text: str) -> Angle | FreeAngle:
    """Parse "p/q pi" (or "p/q*pi", "pi/q", "0.8240pi") or plain radians."""
    s = text.strip().lower().replace("π", "pi").replace("*", " ")
    if "pi" in s:
        coeff = s.replace("pi", " ").strip()
        if not coeff:
            return Angle(1)
        if "/" in coeff:
            p, q = coeff.split("/")
            p = p.strip() or "1"
            try:
                return Angle(int(p), int(q))
            except ValueError:
                return FreeAngle(float(p) / float(q) * math.pi)
        try:
            return Angle(int(coeff))
        except ValueError:
            return FreeAngle(float(coeff) * math.pi)
    return FreeAngle(float(s))


def pentagon_angle_sum(f: int) -> Angle:
    """Total interior angle (3 + 4/f)*pi of the pentagon in an f-tile tiling.

    Requires f even and >= 12; equivalently the spherical excess per tile is
    the sphere area 4*pi divided evenly among the f tiles.
    """
    if f % 2 != 0 or f < 12:
        raise ValueError(f"tile count must be an even integer >= 12, got {f}")
    return Angle(3 * f + 4, f)


def angle_close(x: float, y: float, tol: float = TOL) -> bool:
    """True iff |x - y| <= tol (radians)."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return abs(x - y) <= tol
