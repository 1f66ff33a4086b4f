"""Graded (anti)homomorphisms between presented algebras and tensor targets.

A GradedMorphism is determined by generator images; words map to ordered
products of images (mode "hom"), reversed products ("anti"), or reversed
products with the braiding factor q^(sum_{i<j} t(w_i) t(w_j)) inserted
("anti_graded" -- the reversal that is well defined on graded quotients).
Coefficients pass through unchanged or through the conjugation q -> q^2.

Images may live in a Presentation (Poly), a braided tensor product
(TensorPoly), the scalars (CycScalar) or the central localization
(LocalizedElement); application code only relies on +, * and one().
"""

from __future__ import annotations

from .algebra import Poly, Presentation, letter_gen, letter_sign, word_grade
from .localized import LocalizedElement
from .scalars import CycScalar, ONE, q_power
from .tensor import TensorPoly

MODES = ("hom", "anti", "anti_graded")
TWISTS = ("id", "conj")


def one_like(value):
    if isinstance(value, CycScalar):
        return ONE
    if isinstance(value, Poly):
        return value.pres.one()
    if isinstance(value, TensorPoly):
        return TensorPoly.one(value.slots)
    if isinstance(value, LocalizedElement):
        return LocalizedElement.one(value.pres, value.center)
    raise TypeError(f"no unit for {type(value)!r}")


class GradedMorphism:
    def __init__(self, name, source: Presentation, images: dict, mode="hom", twist="id"):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if twist not in TWISTS:
            raise ValueError(f"twist must be one of {TWISTS}")
        missing = [g.name for g in source.generators if g.name not in images]
        if missing:
            raise ValueError(f"missing images for {missing}")
        self.name = name
        self.source = source
        self.images = dict(images)
        self.mode = mode
        self.twist = twist

    def _letter_image(self, letter: int):
        img = self.images[self.source.generators[letter_gen(letter)].name]
        if letter_sign(letter) < 0:
            img = img.inverse()
        return img

    def apply_word(self, word):
        """Image of a free word (need not be a normal form)."""
        letters = tuple(word)
        if self.mode != "hom":
            letters = tuple(reversed(letters))
        acc = None
        for l in letters:
            img = self._letter_image(l)
            acc = img if acc is None else acc * img
        if acc is None:
            acc = self._unit()
        if self.mode == "anti_graded":
            grades = [
                self.source.generators[letter_gen(l)].grade * letter_sign(l)
                for l in word
            ]
            e = 0
            for i in range(len(grades)):
                for j in range(i + 1, len(grades)):
                    e += grades[i] * grades[j]
            acc = acc * q_power(e)
        return acc

    def _unit(self):
        for img in self.images.values():
            return one_like(img)
        raise ValueError("morphism has no images")

    def __call__(self, x):
        if isinstance(x, Poly):
            if x.pres is not self.source:
                raise ValueError(f"{self.name}: element not over the source algebra")
            total = None
            for word, coeff in x.terms.items():
                c = coeff.conjugate() if self.twist == "conj" else coeff
                term = self.apply_word(word) * c
                total = term if total is None else total + term
            return total if total is not None else self._unit() * CycScalar(0)
        if isinstance(x, LocalizedElement):
            # S(center) = center^-1 for the group-like center, so the
            # denominator power turns into a positive center power
            img = self(x.numerator)
            if x.power:
                img = img * LocalizedElement.from_poly(x.center, x.center) ** x.power
            return img
        raise TypeError(f"cannot apply {self.name} to {type(x)!r}")

    def __repr__(self):
        return f"<GradedMorphism {self.name}: {self.source.name} ({self.mode}/{self.twist})>"


def apply_to_slot(f: GradedMorphism, tp: TensorPoly, slot: int) -> TensorPoly:
    """Apply f to one tensor slot, splicing the image slots in place.

    Slotwise application on basis tensors needs no braiding factor; the
    q-factors of the tensor algebra only enter products.
    """
    src = tp.slots[slot]
    if src is not f.source:
        raise ValueError("slot does not carry the morphism's source algebra")
    out_terms = {}
    out_slots = None
    for mono, coeff in tp.terms.items():
        img = f.apply_word(mono[slot])
        pieces, islots = _as_slot_terms(img)
        if out_slots is None:
            out_slots = tp.slots[:slot] + islots + tp.slots[slot + 1:]
        for iwords, ic in pieces:
            key = mono[:slot] + iwords + mono[slot + 1:]
            acc = out_terms.get(key)
            val = coeff * ic
            out_terms[key] = val if acc is None else acc + val
    if out_slots is None:  # zero input: infer target slots from a unit image
        img = f._unit()
        _, islots = _as_slot_terms(img)
        out_slots = tp.slots[:slot] + islots + tp.slots[slot + 1:]
    return TensorPoly(out_slots, out_terms)


def _as_slot_terms(img):
    if isinstance(img, CycScalar):
        return [((), img)], ()
    if isinstance(img, Poly):
        return [((w,), c) for w, c in img.terms.items()], (img.pres,)
    if isinstance(img, TensorPoly):
        return [(m, c) for m, c in img.terms.items()], img.slots
    raise TypeError(f"cannot splice {type(img)!r} into a tensor slot")


def check_relations(f: GradedMorphism):
    """Residues f(LHS) - f(RHS) for every defining relation of the source."""
    residues = []
    for tag, lhs_terms, rhs in f.source.relations():
        img = None
        for word, c in lhs_terms.items():
            t = f.apply_word(word) * (c.conjugate() if f.twist == "conj" else c)
            img = t if img is None else img + t
        res = img - f(rhs)
        residues.append((tag, res))
    return residues


def grading_violations(f: GradedMorphism):
    """Generators whose image is not homogeneous of the generator's grade."""
    bad = []
    for g in f.source.generators:
        img = f.images[g.name]
        grade = _grade_of(img)
        if _is_zero(img):
            continue
        if grade is None or grade != g.grade:
            bad.append((g.name, grade))
    return bad


def _grade_of(img):
    if isinstance(img, CycScalar):
        return 0
    if isinstance(img, (Poly, TensorPoly)):
        return img.grade()
    if isinstance(img, LocalizedElement):
        return img.numerator.grade()
    return None


def _is_zero(img):
    if isinstance(img, CycScalar):
        return img.is_zero()
    return img.is_zero()
