"""Catalog of the canonical presentations and named elements.

Generator orders are fixed so that all swap rules are pure q-swaps except
the single inhomogeneous rule d*a -> a*d - (q-1)*beta*gamma (and, in the
enveloping algebra, Xm*Xp).  Every preset here passes the local-confluence
check, which is what makes Poly equality decide ideal membership.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Generator, Poly, Presentation
from .scalars import CycScalar, LAMBDA, ONE, Q, Q2, q_power

_cache: dict[str, Presentation] = {}
_elements: dict[str, object] = {}


def _memo(name):
    def wrap(builder):
        def get() -> Presentation:
            if name not in _cache:
                _cache[name] = builder()
            return _cache[name]

        get.__name__ = builder.__name__
        return get

    return wrap


@_memo("plane")
def plane() -> Presentation:
    """Exterior plane: theta (grade 1), phi (grade 2), theta*phi = q^2 phi*theta,
    cubes vanish."""
    p = Presentation(
        "plane",
        [Generator("theta", 1, nilpotency=3), Generator("phi", 2, nilpotency=3)],
    )
    # theta*phi = q^2 phi*theta  =>  phi*theta -> q*theta*phi
    p.add_swap_rule("phi", "theta", Q * (p.gen("theta") * p.gen("phi")))
    return p.freeze()


@_memo("free-plane")
def free_plane() -> Presentation:
    """Same generators as the plane but no relations at all."""
    p = Presentation(
        "free-plane", [Generator("theta", 1), Generator("phi", 2)]
    )
    return p.freeze()


@_memo("dual-plane")
def dual_plane() -> Presentation:
    """Dual plane: xi (grade 2) and x (grade 0) commute; no nilpotency."""
    p = Presentation("dual-plane", [Generator("xi", 2), Generator("x", 0)])
    p.add_swap_rule("x", "xi", p.gen("xi") * p.gen("x"))
    return p.freeze()


def _matrix_generators():
    return [
        Generator("a", 0),
        Generator("beta", 2),
        Generator("gamma", 1),
        Generator("d", 0),
    ]


def _add_matrix_rules(p: Presentation):
    a, b, g, d = (p.gen(n) for n in ("a", "beta", "gamma", "d"))
    p.add_swap_rule("beta", "a", a * b)
    p.add_swap_rule("gamma", "a", Q2 * (a * g))  # a*gamma = q gamma*a
    p.add_swap_rule("gamma", "beta", b * g)
    p.add_swap_rule("d", "beta", b * d)
    p.add_swap_rule("d", "gamma", Q2 * (g * d))  # d*gamma = q^2 gamma*d
    p.add_swap_rule("d", "a", a * d - (Q - 1) * (b * g))  # a*d = d*a + (q-1) beta*gamma


@_memo("Mq2")
def mq2() -> Presentation:
    """Graded 2x2 quantum matrices: a, d grade 0, gamma grade 1, beta grade 2."""
    p = Presentation("Mq2", _matrix_generators())
    _add_matrix_rules(p)
    return p.freeze()


@_memo("free-Mq2")
def free_mq2() -> Presentation:
    """Free algebra on a, beta, gamma, d with the same grades, no relations."""
    p = Presentation("free-Mq2", _matrix_generators())
    return p.freeze()


@_memo("SLq2")
def slq2() -> Presentation:
    """Mq2 with the quantum determinant set to 1.

    The pair collapse a*d -> 1 + q*beta*gamma and the duplicate swap
    d*a -> 1 + beta*gamma both restate Dq = 1; the confluence check
    validates that the pair is consistent with the Mq2 rules.
    """
    p = Presentation("SLq2", _matrix_generators())
    _add_matrix_rules(p)
    b, g = p.gen("beta"), p.gen("gamma")
    p.add_ordered_rule({"a": 1, "d": 1}, p.one() + Q * (b * g))
    p.add_swap_rule("d", "a", p.one() + b * g)
    return p.freeze()


@_memo("Uqgl2")
def uqgl2() -> Presentation:
    """Enveloping-algebra preset: U, V invertible grade 0, Xm grade 1, Xp grade 2.

    The diagonal generators twist the ladder generators by their grade,
    U X = q^(-t(X)) X U and V X = q^(+t(X)) X V; this is the orientation
    under which the lower/upper triangular matrix relations of the
    R-matrix construction hold exactly (see matrices.rll_residues, whose
    report records the discovery).  The ladder commutator is
    Xp Xm - Xm Xp = (U V^-1 - V U^-1) / (q^2 - q).
    """
    p = Presentation(
        "Uqgl2",
        [
            Generator("U", 0, invertible=True),
            Generator("V", 0, invertible=True),
            Generator("Xp", 2),
            Generator("Xm", 1),
        ],
    )
    U, V, Xp, Xm = (p.gen(n) for n in ("U", "V", "Xp", "Xm"))
    p.add_swap_rule("V", "U", U * V)
    # U Xp = q Xp U, U Xm = q^2 Xm U, V Xp = q^2 Xp V, V Xm = q Xm V
    p.add_swap_rule("Xp", "U", Q2 * (U * Xp))
    p.add_swap_rule("Xp", "V", Q * (V * Xp))
    p.add_swap_rule("Xm", "U", Q * (U * Xm))
    p.add_swap_rule("Xm", "V", Q2 * (V * Xm))
    # Xp Xm - Xm Xp = (U V^-1 - V U^-1) / (q^2 - q)
    c = (Q2 - Q).inverse()
    commutator = (U * p.gen_inverse("V") - V * p.gen_inverse("U")) * c
    p.add_swap_rule("Xm", "Xp", Xp * Xm - commutator)
    return p.freeze()


_PRESETS = {
    "plane": plane,
    "free-plane": free_plane,
    "dual-plane": dual_plane,
    "Mq2": mq2,
    "free-Mq2": free_mq2,
    "SLq2": slq2,
    "Uqgl2": uqgl2,
}


def preset_names() -> list[str]:
    return list(_PRESETS)


def get_preset(name: str) -> Presentation:
    try:
        return _PRESETS[name]()
    except KeyError:
        raise KeyError(
            f"unknown preset {name!r}; available: {', '.join(sorted(_PRESETS))}"
        ) from None


def quantum_determinant(pres: Presentation | None = None) -> Poly:
    """Dq = a*d - q*beta*gamma (equal to d*a - beta*gamma after reduction)."""
    p = pres if pres is not None else mq2()
    return p.gen("a") * p.gen("d") - Q * (p.gen("beta") * p.gen("gamma"))


def manin_element() -> Poly:
    """theta*phi - q^2 phi*theta in the free plane (nonzero there)."""
    p = free_plane()
    return p.gen("theta") * p.gen("phi") - Q2 * (p.gen("phi") * p.gen("theta"))


def get_element(name: str):
    from . import matrices  # local import; matrices builds on presets

    table = {
        "Dq": lambda: quantum_determinant(),
        "vartheta": manin_element,
        "lambda": lambda: LAMBDA,
        "T": lambda: matrices.matrix_T(mq2()),
        "Ttilde": lambda: matrices.matrix_T_tilde(mq2()),
        "Rhat": matrices.rhat_matrix,
        "Lplus": lambda: matrices.l_matrices()[0],
        "Lminus": lambda: matrices.l_matrices()[1],
    }
    try:
        return table[name]()
    except KeyError:
        raise KeyError(
            f"unknown element {name!r}; available: {', '.join(sorted(table))}"
        ) from None
