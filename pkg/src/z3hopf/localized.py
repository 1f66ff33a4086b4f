"""Localization of a presented algebra at a central element.

A LocalizedElement is a pair (numerator, m) standing for numerator *
center^(-m).  Because the center commutes with everything, products
multiply numerators and add powers, and equality is decided by exact
cross-multiplication: (p1, m1) == (p2, m2) iff p1 * c^m2 == p2 * c^m1.
Cross-multiplication is faithful as long as the center is not a zero
divisor; the test suite checks this on all normal monomials up to a
degree bound.
"""

from __future__ import annotations

from .algebra import Poly, Presentation
from .scalars import CycScalar


class LocalizedElement:
    __slots__ = ("pres", "center", "numerator", "power")

    def __init__(self, numerator: Poly, power: int, center: Poly):
        if power < 0:
            raise ValueError("denominator power must be >= 0")
        if center.pres is not numerator.pres:
            raise ValueError("center and numerator live over different presentations")
        self.pres = numerator.pres
        self.center = center
        self.numerator = numerator
        self.power = power

    @staticmethod
    def from_poly(p: Poly, center: Poly) -> "LocalizedElement":
        return LocalizedElement(p, 0, center)

    @staticmethod
    def one(pres: Presentation, center: Poly) -> "LocalizedElement":
        return LocalizedElement(pres.one(), 0, center)

    @staticmethod
    def zero(pres: Presentation, center: Poly) -> "LocalizedElement":
        return LocalizedElement(pres.zero(), 0, center)

    def _coerce(self, other):
        if isinstance(other, LocalizedElement):
            if other.pres is not self.pres or other.center != self.center:
                raise ValueError("localized elements over different localizations")
            return other
        if isinstance(other, Poly):
            return LocalizedElement.from_poly(other, self.center)
        if isinstance(other, (int, CycScalar)):
            return LocalizedElement.from_poly(self.pres.scalar(other), self.center)
        return None

    def __mul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return LocalizedElement(self.numerator * other, self.power, self.center)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LocalizedElement(
            self.numerator * other.numerator, self.power + other.power, self.center
        )

    def __rmul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return self * other
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = LocalizedElement.one(self.pres, self.center)
        for _ in range(k):
            out = out * self
        return out

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m = max(self.power, other.power)
        p1 = self.numerator * self.center ** (m - self.power)
        p2 = other.numerator * self.center ** (m - other.power)
        return LocalizedElement(p1 + p2, m, self.center)

    __radd__ = __add__

    def __neg__(self):
        return LocalizedElement(-self.numerator, self.power, self.center)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.numerator * other.center ** other.power == other.numerator * self.center ** self.power

    def __hash__(self):
        raise TypeError("LocalizedElement is unhashable (use explicit comparison)")

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.power == 0:
            return str(self.numerator)
        exp = "^-1" if self.power == 1 else f"^-{self.power}"
        return f"({self.numerator}) * Dq{exp}"

    def __repr__(self):
        return f"LocalizedElement({self})"
