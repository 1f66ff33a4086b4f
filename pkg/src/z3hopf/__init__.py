"""Exact symbolic engine for a Z3-graded quantum group at a cube root of unity."""

from .scalars import CycScalar, LAMBDA, ONE, Q, Q2, ZERO, q_power
from .algebra import Generator, Poly, Presentation, RewriteLimitExceeded
from .tensor import TensorPoly, flip, slot_embed, tensor_grade, tensor_mul
from . import presets

__all__ = [
    "CycScalar",
    "Generator",
    "LAMBDA",
    "ONE",
    "Poly",
    "Presentation",
    "Q",
    "Q2",
    "RewriteLimitExceeded",
    "TensorPoly",
    "ZERO",
    "flip",
    "presets",
    "q_power",
    "slot_embed",
    "tensor_grade",
    "tensor_mul",
]
