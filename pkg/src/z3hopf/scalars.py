"""Exact arithmetic in Q(q) with q a primitive cube root of unity.

Elements are stored on the basis {1, q} as a0 + a1*q with rational
coordinates, reduced by q^2 = -1 - q (so q^3 = 1 and 1 + q + q^2 = 0).
Everything is immutable and exact; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

RationalLike = "int | Fraction"


class CycScalar:
    """a0 + a1*q in Q[q]/(q^2 + q + 1), kept canonical (Fraction coords)."""

    __slots__ = ("a0", "a1")

    def __init__(self, a0=0, a1=0):
        object.__setattr__(self, "a0", Fraction(a0))
        object.__setattr__(self, "a1", Fraction(a1))

    def __setattr__(self, name, value):
        raise AttributeError("CycScalar is immutable")

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycScalar(self.a0 + other.a0, self.a1 + other.a1)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(-self.a0, -self.a1)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycScalar(self.a0 - other.a0, self.a1 - other.a1)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a0 + a1 q)(b0 + b1 q), reduced with q^2 = -1 - q
        a0, a1, b0, b1 = self.a0, self.a1, other.a0, other.a1
        return CycScalar(a0 * b0 - a1 * b1, a0 * b1 + a1 * b0 - a1 * b1)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = ONE
        for _ in range(abs(k)):
            out = out * base
        return out

    # -- field extras ----------------------------------------------------

    def conjugate(self) -> "CycScalar":
        """The Galois conjugation q -> q^2; an involutive automorphism."""
        return CycScalar(self.a0 - self.a1, -self.a1)

    def norm(self) -> Fraction:
        """N(x) = x * conj(x) as a rational: a0^2 - a0*a1 + a1^2."""
        return self.a0 * self.a0 - self.a0 * self.a1 + self.a1 * self.a1

    def inverse(self) -> "CycScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(q)")
        c = self.conjugate()
        return CycScalar(c.a0 / n, c.a1 / n)

    def is_zero(self) -> bool:
        return self.a0 == 0 and self.a1 == 0

    def is_rational(self) -> bool:
        return self.a1 == 0

    # -- canonical value semantics ----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a0 == other.a0 and self.a1 == other.a1

    def __hash__(self):
        return hash((self.a0, self.a1))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycScalar({self.a0!r}, {self.a1!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce(x) -> "CycScalar":
    if isinstance(x, CycScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return CycScalar(x)
    return NotImplemented


ZERO = CycScalar(0)
ONE = CycScalar(1)
Q = CycScalar(0, 1)
Q2 = CycScalar(-1, -1)  # q^2 = -1 - q
# q - q^2, the Hecke/RLL deformation constant; squares to -3
LAMBDA = Q - Q2


def q_power(k: int) -> CycScalar:
    """q^k, normalized through k mod 3."""
    return (ONE, Q, Q2)[k % 3]


def cyc_add(x: CycScalar, y: CycScalar) -> CycScalar:
    return x + y


def cyc_mul(x: CycScalar, y: CycScalar) -> CycScalar:
    return x * y


def cyc_inv(x: CycScalar) -> CycScalar:
    return x.inverse()


def cyc_conj(x: CycScalar) -> CycScalar:
    return x.conjugate()


def _format_rational(r: Fraction) -> str:
    return str(r)  # Fraction renders p/q with positive denominator


def format_scalar(x: CycScalar) -> str:
    """Render on the {1, q} basis, with q^2 recovered when exact.

    r*q^2 has coordinates (-r, -r); spotting that case keeps outputs like
    q^2 readable instead of "-1 - q".
    """
    a0, a1 = x.a0, x.a1
    if a1 == 0:
        return _format_rational(a0)
    if a0 == 0:
        if a1 == 1:
            return "q"
        if a1 == -1:
            return "-q"
        return f"{_format_rational(a1)}*q"
    if a0 == a1:
        r = -a0
        if r == 1:
            return "q^2"
        if r == -1:
            return "-q^2"
        return f"{_format_rational(r)}*q^2"
    # two-part sum; lead with the q term if that avoids a leading minus
    if a0 < 0 < a1:
        head = "q" if a1 == 1 else f"{_format_rational(a1)}*q"
        return f"{head} - {_format_rational(-a0)}"
    qpart = "q" if a1 == 1 else ("-q" if a1 == -1 else f"{_format_rational(abs(a1))}*q")
    sign = "+" if a1 > 0 else "-"
    if a1 == -1:
        return f"{_format_rational(a0)} - q"
    return f"{_format_rational(a0)} {sign} {_format_rational(abs(a1))}*q"
