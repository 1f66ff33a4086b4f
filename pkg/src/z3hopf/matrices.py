"""Graded matrices, the graded Kronecker product, and the R-matrix checks.

The 2-dimensional index space carries grades (1, 2), matching the grades
of the plane coordinates the matrices act on; entry (i, j) of a
quantum-matrix then has grade t(i) - t(j) mod 3, reproducing a, d grade 0,
gamma grade 1, beta grade 2.  (The additive entry-grade reading
t(i) + t(j) cannot reproduce those assignments.)

The graded Kronecker product is parameterized by a KronConvention because
its q-factor is not pinned down uniquely by the source material; the
convention shipped as PINNED is the one under which the full FRT check
over Mq2 produces sixteen zero residues -- convention_sweep() documents
how every candidate fares.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Poly, Presentation
from .scalars import CycScalar, LAMBDA, ONE, Q, Q2, ZERO, q_power
from .tensor import TensorPoly

INDEX_GRADES_2 = (1, 2)


@dataclass(frozen=True)
class KronConvention:
    """Exponent shape for (A (x) B)_{ij,kl} = q^e * A_ik * B_jl.

    anchor "row":   e = sign * t(j) * (t(i) + entry_sign * t(k))
    anchor "col":   e = sign * t(k) * (t(j) + entry_sign * t(l))
    anchor "diff2": e = sign * (t(j) - t(k))^2

    entry_sign -1 makes the bilinear factor q^(t . entry-grade) for the
    pinned difference grading of matrix entries; sign -1 swaps q for q^2.
    The quadratic "diff2" shape appears in the RLL embedding only.
    """

    anchor: str = "col"
    entry_sign: int = -1
    sign: int = 1

    def exponent(self, gi: int, gj: int, gk: int, gl: int) -> int:
        if self.anchor == "row":
            return self.sign * gj * (gi + self.entry_sign * gk)
        if self.anchor == "diff2":
            return self.sign * (gj - gk) ** 2
        return self.sign * gk * (gj + self.entry_sign * gl)

    def describe(self) -> str:
        t = "t"
        if self.anchor == "row":
            body = f"{t}(j)*({t}(i) {'+' if self.entry_sign > 0 else '-'} {t}(k))"
        elif self.anchor == "diff2":
            return ("q" if self.sign > 0 else "q^-1") + f"^[({t}(j)-{t}(k))^2]"
        else:
            body = f"{t}(k)*({t}(j) {'+' if self.entry_sign > 0 else '-'} {t}(l))"
        lead = "q" if self.sign > 0 else "q^2"
        return f"{lead}^[{body}]"


PINNED = KronConvention(anchor="col", entry_sign=-1, sign=1)
# the two legs of the RLL embedding: L1 = L (x) I, L2 = I (x) L
RLL_LEG1 = KronConvention(anchor="diff2", sign=-1)
RLL_LEG2 = KronConvention(anchor="diff2", sign=1)

ALL_CONVENTIONS = [
    KronConvention(anchor, entry_sign, sign)
    for anchor in ("row", "col")
    for entry_sign in (1, -1)
    for sign in (1, -1)
]


class GradedMatrix:
    """Square matrix with graded index set; entries Poly, TensorPoly or scalar."""

    __slots__ = ("entries", "grades")

    def __init__(self, entries, grades):
        self.entries = tuple(tuple(row) for row in entries)
        self.grades = tuple(grades)
        n = len(self.entries)
        if any(len(row) != n for row in self.entries) or len(self.grades) != n:
            raise ValueError("matrix must be square with one grade per index")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    @staticmethod
    def identity(n: int, grades, one=ONE, zero=ZERO) -> "GradedMatrix":
        return GradedMatrix(
            [[one if i == j else zero for j in range(n)] for i in range(n)], grades
        )

    def __mul__(self, other):
        if isinstance(other, GradedMatrix):
            if self.n != other.n:
                raise ValueError("dimension mismatch")
            rows = []
            for i in range(self.n):
                row = []
                for j in range(self.n):
                    acc = None
                    for k in range(self.n):
                        term = self.entries[i][k] * other.entries[k][j]
                        acc = term if acc is None else acc + term
                    row.append(acc)
                rows.append(row)
            return GradedMatrix(rows, self.grades)
        # scalar on the right
        return GradedMatrix(
            [[e * other for e in row] for row in self.entries], self.grades
        )

    def __rmul__(self, other):
        return GradedMatrix(
            [[other * e for e in row] for row in self.entries], self.grades
        )

    def __add__(self, other):
        if not isinstance(other, GradedMatrix) or self.n != other.n:
            raise ValueError("dimension mismatch")
        return GradedMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
            self.grades,
        )

    def __sub__(self, other):
        if not isinstance(other, GradedMatrix) or self.n != other.n:
            raise ValueError("dimension mismatch")
        return GradedMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
            self.grades,
        )

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.n == other.n and all(
            self.entries[i][j] == other.entries[i][j]
            for i in range(self.n)
            for j in range(self.n)
        )

    def __hash__(self):
        return hash((self.grades, tuple(tuple(map(str, row)) for row in self.entries)))

    def map(self, f) -> "GradedMatrix":
        return GradedMatrix([[f(e) for e in row] for row in self.entries], self.grades)

    def __str__(self):
        rows = [[str(e) for e in row] for row in self.entries]
        width = max((len(s) for row in rows for s in row), default=1)
        return "\n".join("  ".join(s.rjust(width) for s in row) for row in rows)

    def __repr__(self):
        return f"GradedMatrix(n={self.n}, grades={self.grades})\n{self}"


def graded_kron(
    A: GradedMatrix, B: GradedMatrix, convention: KronConvention = PINNED
) -> GradedMatrix:
    """(A (x) B)_{ij,kl} = q^e A_ik B_jl with e from the convention."""
    na, nb = A.n, B.n
    ga, gb = A.grades, B.grades
    rows = []
    grades = []
    for i in range(na):
        for j in range(nb):
            grades.append((ga[i] + gb[j]) % 3)
            row = []
            for k in range(na):
                for l in range(nb):
                    e = convention.exponent(ga[i], gb[j], ga[k], gb[l])
                    row.append(q_power(e) * (A.entries[i][k] * B.entries[j][l]))
            rows.append(row)
    return GradedMatrix(rows, grades)


def plain_kron(A: GradedMatrix, B: GradedMatrix) -> GradedMatrix:
    rows = []
    grades = []
    for i in range(A.n):
        for j in range(B.n):
            grades.append((A.grades[i] + B.grades[j]) % 3)
            rows.append(
                [
                    A.entries[i][k] * B.entries[j][l]
                    for k in range(A.n)
                    for l in range(B.n)
                ]
            )
    return GradedMatrix(rows, grades)


# -- the named 2x2 matrices ---------------------------------------------------


def matrix_T(pres: Presentation) -> GradedMatrix:
    """T = [[a, beta], [gamma, d]] over a matrix-type preset."""
    return GradedMatrix(
        [
            [pres.gen("a"), pres.gen("beta")],
            [pres.gen("gamma"), pres.gen("d")],
        ],
        INDEX_GRADES_2,
    )


def matrix_T_tilde(pres: Presentation) -> GradedMatrix:
    """The adjugate-style companion [[d, -beta], [-q*gamma, a]]."""
    return GradedMatrix(
        [
            [pres.gen("d"), -pres.gen("beta")],
            [-(Q * pres.gen("gamma")), pres.gen("a")],
        ],
        INDEX_GRADES_2,
    )


def rhat_matrix() -> GradedMatrix:
    """The 4x4 braid-form R-matrix in the pair basis (11, 12, 21, 22)."""
    z, o, lam = ZERO, ONE, LAMBDA
    entries = [
        [Q, z, z, z],
        [z, z, o, z],
        [z, o, lam, z],
        [z, z, z, Q],
    ]
    grades = _pair_grades(INDEX_GRADES_2, INDEX_GRADES_2)
    return GradedMatrix(entries, grades)


def graded_permutation(grades=INDEX_GRADES_2) -> GradedMatrix:
    """P_(e_i (x) e_j) = q^(t(i) t(j)) e_j (x) e_i as a matrix on pairs."""
    n = len(grades)
    size = n * n
    entries = [[ZERO] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            src = i * n + j
            dst = j * n + i
            entries[dst][src] = q_power(grades[i] * grades[j])
    return GradedMatrix(entries, _pair_grades(grades, grades))


def plain_permutation(grades=INDEX_GRADES_2) -> GradedMatrix:
    n = len(grades)
    size = n * n
    entries = [[ZERO] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            entries[j * n + i][i * n + j] = ONE
    return GradedMatrix(entries, _pair_grades(grades, grades))


def _pair_grades(g1, g2):
    return tuple((a + b) % 3 for a in g1 for b in g2)


def scalar_identity(n: int, grades) -> GradedMatrix:
    return GradedMatrix.identity(n, grades)


# -- FRT -----------------------------------------------------------------------


def t1_t2(pres: Presentation, convention: KronConvention = PINNED):
    """T1 = T (x) I and T2 = I (x) T with polynomial entries."""
    T = matrix_T(pres)
    one, zero = pres.one(), pres.zero()
    I = GradedMatrix.identity(2, INDEX_GRADES_2, one=one, zero=zero)
    T1 = graded_kron(T, I, convention)
    T2 = graded_kron(I, T, convention)
    return T1, T2


def frt_residues(
    pres: Presentation,
    rhat: GradedMatrix | None = None,
    convention: KronConvention = PINNED,
) -> GradedMatrix:
    """Entrywise R T1 T2 - T1 T2 R, reduced in the preset."""
    R = rhat if rhat is not None else rhat_matrix()
    T1, T2 = t1_t2(pres, convention)
    M = T1 * T2
    lhs = R.map(pres.scalar) * M if _is_scalar_matrix(R) else R * M
    rhs = M * (R.map(pres.scalar) if _is_scalar_matrix(R) else R)
    return lhs - rhs


def _is_scalar_matrix(M: GradedMatrix) -> bool:
    return all(isinstance(e, CycScalar) for row in M.entries for e in row)


def frt_convention_sweep(pres: Presentation) -> list[tuple[KronConvention, bool]]:
    """Which Kronecker conventions make every FRT residue vanish over `pres`."""
    out = []
    for conv in ALL_CONVENTIONS:
        D = frt_residues(pres, convention=conv)
        ok = all(e.is_zero() for row in D.entries for e in row)
        out.append((conv, ok))
    return out


# -- matrix tensor product (two algebra copies) ---------------------------------


def matrix_dot_tensor(A: GradedMatrix, B: GradedMatrix, slots) -> GradedMatrix:
    """(A .ox. B)_ij = sum_k A_ik (x) B_kj with entries in the braided product."""
    if A.n != B.n:
        raise ValueError("dimension mismatch")
    rows = []
    for i in range(A.n):
        row = []
        for j in range(A.n):
            acc = None
            for k in range(A.n):
                term = TensorPoly.pure(A.entries[i][k], B.entries[k][j])
                acc = term if acc is None else acc + term
            row.append(acc)
        rows.append(row)
    return GradedMatrix(rows, A.grades)


# -- L matrices and RLL ----------------------------------------------------------


def l_matrices():
    """L+ (upper) and L- (lower) over the enveloping preset, lambda = q - q^2."""
    from .presets import uqgl2

    p = uqgl2()
    U, V = p.gen("U"), p.gen("V")
    Ui, Vi = p.gen_inverse("U"), p.gen_inverse("V")
    Xp, Xm = p.gen("Xp"), p.gen("Xm")
    lam = LAMBDA
    Lp = GradedMatrix([[U, lam * Xp], [p.zero(), V]], INDEX_GRADES_2)
    Lm = GradedMatrix([[Ui, p.zero()], [lam * Xm, Vi]], INDEX_GRADES_2)
    return Lp, Lm


def r_plus() -> GradedMatrix:
    """R+ = P RP = Rhat P (since Rhat = P R)."""
    P = graded_permutation()
    return rhat_matrix() * P


def rll_residues(
    leg1: KronConvention = RLL_LEG1, leg2: KronConvention = RLL_LEG2
) -> dict[str, GradedMatrix]:
    """Residues of R+ L1^x L2^y = L2^y L1^x R+ for (x,y) in ++, --, -+.

    The embedding legs L1 = L (x) I and L2 = I (x) L carry the quadratic
    q^(-/+ (t(j)-t(k))^2) factors.  This is the unique decomposable graded
    Kronecker dressing (up to gauge) under which all three relation sets
    hold; equivalently, L1 L2 is the plain Kronecker contraction while the
    reversed product is conjugated by diag(q^((t(i)-t(j))^2)).
    """
    from .presets import uqgl2

    p = uqgl2()
    Lp, Lm = l_matrices()
    one, zero = p.one(), p.zero()
    I = GradedMatrix.identity(2, INDEX_GRADES_2, one=one, zero=zero)
    Rp = r_plus().map(p.scalar)

    def residue(Lx, Ly):
        L1 = graded_kron(Lx, I, leg1)
        L2 = graded_kron(I, Ly, leg2)
        return Rp * (L1 * L2) - (L2 * L1) * Rp

    return {
        "plus-plus": residue(Lp, Lp),
        "minus-minus": residue(Lm, Lm),
        "minus-plus": residue(Lm, Lp),
    }


def l_coproduct_images(convention: KronConvention = PINNED):
    """Generator images read off the entries of L (.ox.) L."""
    from .presets import uqgl2

    p = uqgl2()
    Lp, Lm = l_matrices()
    slots = (p, p)
    Mp = matrix_dot_tensor(Lp, Lp, slots)
    Mm = matrix_dot_tensor(Lm, Lm, slots)
    lam_inv = LAMBDA.inverse()
    images = {
        "U": Mp.entries[0][0],
        "V": Mp.entries[1][1],
        "Xp": Mp.entries[0][1] * lam_inv,
        "Xm": Mm.entries[1][0] * lam_inv,
    }
    return images, Mp, Mm
