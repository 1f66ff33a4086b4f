"""n-fold Z3-graded tensor products with the q-factor multiplication rule.

Two homogeneous simple tensors multiply slotwise with a braiding factor:
for two slots  (x1 (x) x2)(y1 (x) y2) = q^(t(x2) t(y1)) x1 y1 (x) x2 y2,
and for n slots the factor is q^(sum over i > j of t(x_i) t(y_j)) -- the
unique extension making the iterated product associative.  Slots may
carry different presentations; the factor only uses grades.
"""

from __future__ import annotations

from .algebra import Poly, Presentation, word_grade
from .scalars import CycScalar, ONE, ZERO, q_power


class TensorPoly:
    """Finite map from slot-monomial tuples to coefficients, no zeros."""

    __slots__ = ("slots", "terms")

    def __init__(self, slots, terms):
        self.slots: tuple[Presentation, ...] = tuple(slots)
        self.terms: dict[tuple, CycScalar] = {
            m: c for m, c in terms.items() if not c.is_zero()
        }

    # -- constructors -----------------------------------------------------

    @staticmethod
    def pure(*polys: Poly) -> "TensorPoly":
        """The simple tensor p1 (x) ... (x) pn (no braiding is involved)."""
        slots = tuple(p.pres for p in polys)
        terms = {(): ONE}
        out: dict[tuple, CycScalar] = terms
        for p in polys:
            nxt: dict[tuple, CycScalar] = {}
            for mono, c in out.items():
                for w, cw in p.terms.items():
                    key = mono + (w,)
                    acc = nxt.get(key, ZERO) + c * cw
                    if acc.is_zero():
                        nxt.pop(key, None)
                    else:
                        nxt[key] = acc
            out = nxt
        return TensorPoly(slots, out)

    @staticmethod
    def one(slots) -> "TensorPoly":
        return TensorPoly(slots, {tuple(() for _ in slots): ONE})

    @staticmethod
    def zero(slots) -> "TensorPoly":
        return TensorPoly(slots, {})

    @staticmethod
    def embed(p: Poly, slot: int, slots) -> "TensorPoly":
        """p placed in one slot, identities elsewhere."""
        slots = tuple(slots)
        if not (0 <= slot < len(slots)):
            raise ValueError("slot index out of range")
        if slots[slot] is not p.pres:
            raise ValueError("slot presentation does not match the polynomial")
        unit = tuple(() for _ in slots)
        terms = {}
        for w, c in p.terms.items():
            key = unit[:slot] + (w,) + unit[slot + 1:]
            terms[key] = c
        return TensorPoly(slots, terms)

    # -- algebra -----------------------------------------------------------

    def _check(self, other: "TensorPoly"):
        if len(self.slots) != len(other.slots) or any(
            a is not b for a, b in zip(self.slots, other.slots)
        ):
            raise ValueError("tensor slot mismatch")

    def __add__(self, other):
        if isinstance(other, (int, CycScalar)):
            other = self._scalar(other)
        if not isinstance(other, TensorPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m, ZERO) + c
            if acc.is_zero():
                out.pop(m, None)
            else:
                out[m] = acc
        return TensorPoly(self.slots, out)

    __radd__ = __add__

    def __neg__(self):
        return TensorPoly(self.slots, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, CycScalar)):
            other = self._scalar(other)
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _scalar(self, c) -> "TensorPoly":
        c = c if isinstance(c, CycScalar) else CycScalar(c)
        unit = tuple(() for _ in self.slots)
        return TensorPoly(self.slots, {unit: c})

    def __mul__(self, other):
        if isinstance(other, (int, CycScalar)):
            c = other if isinstance(other, CycScalar) else CycScalar(other)
            return TensorPoly(self.slots, {m: cc * c for m, cc in self.terms.items()})
        if not isinstance(other, TensorPoly):
            return NotImplemented
        self._check(other)
        n = len(self.slots)
        out: dict[tuple, CycScalar] = {}
        for xm, xc in self.terms.items():
            xg = [word_grade(self.slots[i], xm[i]) for i in range(n)]
            for ym, yc in other.terms.items():
                e = 0
                for i in range(n):
                    if xg[i] == 0:
                        continue
                    for j in range(i):
                        e += xg[i] * word_grade(self.slots[j], ym[j])
                coeff = xc * yc * q_power(e)
                # slotwise reduced products, expanded into tensor monomials
                parts = [
                    self.slots[i].normal_form({xm[i] + ym[i]: ONE}) for i in range(n)
                ]
                keys = [()]
                coeffs = [coeff]
                for part in parts:
                    nkeys, ncoeffs = [], []
                    for k, c0 in zip(keys, coeffs):
                        for w, cw in part.terms.items():
                            nkeys.append(k + (w,))
                            ncoeffs.append(c0 * cw)
                    keys, coeffs = nkeys, ncoeffs
                for k, c0 in zip(keys, coeffs):
                    acc = out.get(k, ZERO) + c0
                    if acc.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = acc
        return TensorPoly(self.slots, out)

    def __rmul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = TensorPoly.one(self.slots)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "TensorPoly":
        """Braided inverse of a single simple tensor of invertible monomials."""
        if len(self.terms) != 1:
            raise ValueError("only simple tensors are invertible")
        (mono, c), = self.terms.items()
        grades = [word_grade(self.slots[i], w) for i, w in enumerate(mono)]
        e = 0
        for i in range(len(mono)):
            for j in range(i):
                e += grades[i] * grades[j]
        inv_slots = []
        for i, w in enumerate(mono):
            p = Poly(self.slots[i], {w: ONE}).inverse()
            inv_slots.append(p)
        out = TensorPoly.pure(*inv_slots)
        return out * (c.inverse() * q_power(e))

    # -- inspection ----------------------------------------------------------

    def grade(self) -> int | None:
        if not self.terms:
            return 0
        grades = set()
        for m in self.terms:
            grades.add(sum(word_grade(self.slots[i], m[i]) for i in range(len(m))) % 3)
        return grades.pop() if len(grades) == 1 else None

    def is_zero(self) -> bool:
        return not self.terms

    def to_poly(self) -> Poly:
        if len(self.slots) != 1:
            raise ValueError("only 1-slot tensors collapse to a Poly")
        return Poly(self.slots[0], {m[0]: c for m, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, CycScalar)):
            other = self._scalar(other)
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return (
            len(self.slots) == len(other.slots)
            and all(a is b for a, b in zip(self.slots, other.slots))
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((tuple(id(s) for s in self.slots), frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"TensorPoly({'x'.join(s.name for s in self.slots)}: {self})"

    def __str__(self):
        from .algebra import coefficient_pieces, render_word, term_sort_key

        if not self.terms:
            return "0"
        chunks = []
        for mono in sorted(self.terms, key=lambda m: tuple(term_sort_key(w) for w in m)):
            neg, s = coefficient_pieces(self.terms[mono])
            body = " ox ".join(render_word(self.slots[i], w) for i, w in enumerate(mono))
            if s != "1":
                s = f"({s})" if ("+" in s or " - " in s) else s
                body = f"{s} * {body}"
            if not chunks:
                chunks.append(body if not neg else f"-{body}")
            else:
                chunks.append(("- " if neg else "+ ") + body)
        return " ".join(chunks)


def tensor_mul(x: TensorPoly, y: TensorPoly) -> TensorPoly:
    return x * y


def tensor_grade(x: TensorPoly) -> int | None:
    return x.grade()


def slot_embed(p: Poly, slot: int, slots) -> TensorPoly:
    return TensorPoly.embed(p, slot, slots)


def flip(tp: TensorPoly, graded: bool = False) -> TensorPoly:
    """Swap the two slots; with graded=True insert q^(t(x) t(y)) per term."""
    if len(tp.slots) != 2:
        raise ValueError("flip is defined on two slots")
    out: dict[tuple, CycScalar] = {}
    slots = (tp.slots[1], tp.slots[0])
    for (w0, w1), c in tp.terms.items():
        if graded:
            c = c * q_power(word_grade(tp.slots[0], w0) * word_grade(tp.slots[1], w1))
        key = (w1, w0)
        acc = out.get(key, ZERO) + c
        if acc.is_zero():
            out.pop(key, None)
        else:
            out[key] = acc
    return TensorPoly(slots, out)
