"""Z3-graded free algebras presented by rewrite rules, with normal forms.

A Presentation fixes an ordered list of graded generators together with

  * swap rules   -- for an out-of-order adjacent word  g_j g_i  (j > i in
                    the generator order) a replacement polynomial; several
                    rules may share one left-hand side (the confluence
                    checker verifies they agree),
  * ordered rules -- patterns on sorted monomials given as exponent
                    vectors (nilpotency g^m -> 0 and determinant-style
                    pair collapses such as a*d -> 1 + q*b*c).

Words are tuples of letters; letter i >= 0 is generator i, letter -1-i is
its inverse (only for generators marked invertible).  A Poly maps normal
words to CycScalar coefficients; equality of Polys decides equality in
the quotient algebra once the presentation passes the confluence check
(diamond lemma: terminating + locally confluent => unique normal forms).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scalars import CycScalar, ONE, ZERO, q_power


class RewriteLimitExceeded(RuntimeError):
    """Raised when one reduction exceeds the presentation's step bound."""


@dataclass(frozen=True)
class Generator:
    name: str
    grade: int  # 0, 1 or 2
    nilpotency: int | None = None  # g**m = 0
    invertible: bool = False  # Laurent exponents allowed

    def __post_init__(self):
        if self.grade not in (0, 1, 2):
            raise ValueError(f"grade of {self.name} must be 0, 1 or 2")
        if self.nilpotency is not None and self.invertible:
            raise ValueError(f"{self.name}: nilpotent and invertible exclude each other")
        if self.nilpotency is not None and self.nilpotency < 2:
            raise ValueError(f"{self.name}: nilpotency order must be >= 2")


def letter_gen(letter: int) -> int:
    return letter if letter >= 0 else -1 - letter


def letter_sign(letter: int) -> int:
    return 1 if letter >= 0 else -1


def inverse_letter(letter: int) -> int:
    return -1 - letter


class Presentation:
    """Ordered graded generators plus rewrite rules; freeze() before reducing."""

    DEFAULT_MAX_STEPS = 1_000_000

    def __init__(self, name: str, generators, max_steps: int = DEFAULT_MAX_STEPS):
        self.name = name
        self.generators = tuple(generators)
        self.max_steps = max_steps
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self.index = {g.name: i for i, g in enumerate(self.generators)}
        # (hi, lo) word  g_hi g_lo  ->  list of replacement Polys
        self.swap_rules: dict[tuple[int, int], list[Poly]] = {}
        # exponent-vector pattern on sorted monomials -> replacement Poly
        self.ordered_rules: list[tuple[tuple[int, ...], Poly]] = []
        self._pure: dict[tuple[int, int], CycScalar | None] = {}
        self._frozen = False
        for i, g in enumerate(self.generators):
            if g.nilpotency is not None:
                pattern = tuple(g.nilpotency if j == i else 0 for j in range(len(self.generators)))
                self.ordered_rules.append((pattern, self.zero()))

    # -- construction ------------------------------------------------------

    def gen(self, name: str) -> "Poly":
        return Poly(self, {(self.index[name],): ONE})

    def gen_inverse(self, name: str) -> "Poly":
        i = self.index[name]
        if not self.generators[i].invertible:
            raise ValueError(f"{name} is not invertible")
        return Poly(self, {(inverse_letter(i),): ONE})

    def one(self) -> "Poly":
        return Poly(self, {(): ONE})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def scalar(self, c) -> "Poly":
        c = c if isinstance(c, CycScalar) else CycScalar(c)
        return Poly(self, {(): c} if not c.is_zero() else {})

    def add_swap_rule(self, hi_name: str, lo_name: str, rhs: "Poly"):
        if self._frozen:
            raise RuntimeError("presentation is frozen")
        hi, lo = self.index[hi_name], self.index[lo_name]
        if hi <= lo:
            raise ValueError("swap rule LHS must be out of order: need hi > lo")
        self.swap_rules.setdefault((hi, lo), []).append(rhs)

    def add_ordered_rule(self, pattern: dict[str, int], rhs: "Poly"):
        """Rule on sorted monomials: the in-order word of `pattern` rewrites to rhs."""
        if self._frozen:
            raise RuntimeError("presentation is frozen")
        vec = [0] * len(self.generators)
        for name, e in pattern.items():
            if e <= 0:
                raise ValueError("pattern exponents must be positive")
            if self.generators[self.index[name]].invertible:
                raise ValueError("ordered rules on invertible generators are unsupported")
            vec[self.index[name]] = e
        self.ordered_rules.append((tuple(vec), rhs))

    def freeze(self) -> "Presentation":
        if self._frozen:
            return self
        for (hi, lo), rules in self.swap_rules.items():
            want = (self.generators[hi].grade + self.generators[lo].grade) % 3
            for rhs in rules:
                g = rhs.grade()
                if rhs.terms and (g is None or g != want):
                    raise ValueError(
                        f"{self.name}: swap rule {self.generators[hi].name}"
                        f"{self.generators[lo].name} replacement is not homogeneous"
                        f" of grade {want}"
                    )
                for word in rhs.terms:
                    if _inversions(self, word):
                        raise ValueError(f"{self.name}: swap rule replacement not in normal order")
            self._pure[(hi, lo)] = _pure_coefficient(self, hi, lo, rules[0])
        for pattern, rhs in self.ordered_rules:
            # deglex with earlier generators more significant; replacements
            # must drop strictly below the pattern so reduction terminates
            lhs_key = (sum(pattern), tuple(pattern))
            for word in rhs.terms:
                exps = word_exponents(self, word)
                key = (sum(abs(e) for e in exps), exps)
                if key >= lhs_key:
                    raise ValueError(
                        f"{self.name}: ordered rule does not decrease the monomial order"
                    )
        for (hi, lo), pure in self._pure.items():
            if pure is None and (
                self.generators[hi].invertible or self.generators[lo].invertible
            ):
                raise ValueError(
                    f"{self.name}: inhomogeneous swap rule on invertible pair "
                    f"({self.generators[hi].name},{self.generators[lo].name})"
                )
        self._frozen = True
        return self

    # -- reduction -----------------------------------------------------------

    def normal_form(self, terms, max_steps: int | None = None) -> "Poly":
        """Reduce a {word: coeff} mapping (words need not be sorted)."""
        limit = self.max_steps if max_steps is None else max_steps
        out: dict[tuple[int, ...], CycScalar] = {}
        stack: list[tuple[tuple[int, ...], CycScalar]] = [
            (tuple(w), c) for w, c in terms.items() if not c.is_zero()
        ]
        steps = 0
        while stack:
            word, coeff = stack.pop()
            steps += 1
            if steps > limit:
                raise RewriteLimitExceeded(
                    f"{self.name}: more than {limit} rewrite steps; "
                    "raise max_steps or fix the presentation"
                )
            redex = self._find_redex(word)
            if redex is None:
                acc = out.get(word, ZERO) + coeff
                if acc.is_zero():
                    out.pop(word, None)
                else:
                    out[word] = acc
                continue
            kind, pos, payload = redex
            if kind == "cancel":
                stack.append((word[:pos] + word[pos + 2:], coeff))
            elif kind == "pure":
                c = payload
                stack.append((word[:pos] + (word[pos + 1], word[pos]) + word[pos + 2:], coeff * c))
            elif kind == "swap":
                rhs = payload
                pre, post = word[:pos], word[pos + 2:]
                for rword, rc in rhs.terms.items():
                    stack.append((pre + rword + post, coeff * rc))
            else:  # ordered rule on a sorted monomial
                pattern, rhs = payload
                for nword, nc in _apply_ordered(self, word, pattern, rhs):
                    stack.append((nword, coeff * nc))
        return Poly(self, out)

    def _find_redex(self, word):
        n = len(word)
        for pos in range(n - 1):
            x, y = word[pos], word[pos + 1]
            gx, gy = letter_gen(x), letter_gen(y)
            if gx == gy and letter_sign(x) != letter_sign(y):
                return ("cancel", pos, None)
            if gx > gy:
                rules = self.swap_rules.get((gx, gy))
                if rules is None:
                    continue  # free pair: the inversion is irreducible
                sx, sy = letter_sign(x), letter_sign(y)
                if sx == 1 and sy == 1:
                    return ("swap", pos, rules[0])
                pure = self._pure_coeff(gx, gy)
                if pure is None:
                    raise RewriteLimitExceeded(
                        f"{self.name}: inverse letters need a pure swap rule for "
                        f"({self.generators[gx].name},{self.generators[gy].name})"
                    )
                c = pure if sx * sy == 1 else pure.inverse()
                return ("pure", pos, c)
        if self.ordered_rules and not _inversions(self, word):
            exps = word_exponents(self, word)
            for pattern, rhs in self.ordered_rules:
                if all(e >= p for e, p in zip(exps, pattern)):
                    return ("ordered", 0, (pattern, rhs))
        return None

    def _pure_coeff(self, hi: int, lo: int) -> CycScalar | None:
        key = (hi, lo)
        if key not in self._pure:
            self._pure[key] = _pure_coefficient(self, hi, lo, self.swap_rules[key][0])
        return self._pure[key]

    def is_normal_word(self, word) -> bool:
        return self._find_redex(tuple(word)) is None

    # -- census ---------------------------------------------------------------

    def dimension_census(self, max_degree: int) -> list[int]:
        """Count normal-form monomials per total degree, 0..max_degree.

        Only non-negative exponents are enumerated; Laurent directions are
        not counted.  Normality is prefix-closed, so a DFS with pruning is
        exact.
        """
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        counts = [0] * (max_degree + 1)
        letters = range(len(self.generators))

        def extend(word, depth):
            counts[depth] += 1
            if depth == max_degree:
                return
            for l in letters:
                w = word + (l,)
                if self.is_normal_word(w):
                    extend(w, depth + 1)

        extend((), 0)
        return counts

    def relations(self):
        """Yield (name, lhs_word_terms, rhs_poly) for every rule."""
        gname = lambda i: self.generators[i].name
        for (hi, lo), rules in sorted(self.swap_rules.items()):
            for k, rhs in enumerate(rules):
                tag = f"{gname(hi)}*{gname(lo)}" + (f"#{k}" if k else "")
                yield tag, {(hi, lo): ONE}, rhs
        for pattern, rhs in self.ordered_rules:
            word = word_from_exponents(pattern)
            name = "*".join(
                gname(i) + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(pattern)
                if e
            )
            yield name, {word: ONE}, rhs

    def __repr__(self):
        return f"<Presentation {self.name}: {', '.join(g.name for g in self.generators)}>"


def word_exponents(pres: Presentation, word) -> tuple[int, ...]:
    exps = [0] * len(pres.generators)
    for letter in word:
        exps[letter_gen(letter)] += letter_sign(letter)
    return tuple(exps)


def word_from_exponents(exps) -> tuple[int, ...]:
    word = []
    for i, e in enumerate(exps):
        letter = i if e >= 0 else inverse_letter(i)
        word.extend([letter] * abs(e))
    return tuple(word)


def word_grade(pres: Presentation, word) -> int:
    return sum(pres.generators[letter_gen(l)].grade * letter_sign(l) for l in word) % 3


def _inversions(pres: Presentation, word) -> int:
    gens = [letter_gen(l) for l in word]
    return sum(1 for i in range(len(gens) - 1) if gens[i] > gens[i + 1])


def _pure_coefficient(pres, hi, lo, rhs) -> CycScalar | None:
    """c if the rule is exactly  g_hi g_lo -> c * g_lo g_hi, else None."""
    if len(rhs.terms) != 1:
        return None
    (word, c), = rhs.terms.items()
    if word == (lo, hi):
        return c
    return None


def _apply_ordered(pres, word, pattern, rhs):
    """Rewrite a sorted word by an exponent-vector rule.

    The pattern word is pulled out adjacent to the block of its largest
    generator; commuting its other letters there crosses the in-between
    blocks, which must swap by pure scalars.  With crossing factor F the
    identity  word = F * A . W(pattern) . B  holds, so the replacement is
  F^-1 * A . rhs . B.
    """
    exps = list(word_exponents(pres, word))
    i_max = max(i for i, p in enumerate(pattern) if p)
    rem = [e - p for e, p in zip(exps, pattern)]
    factor = ONE
    for r, p_r in enumerate(pattern):
        if p_r == 0 or r == i_max:
            continue
        for t in range(r + 1, i_max):
            if rem[t] == 0:
                continue
            pure = pres._pure_coeff(t, r) if (t, r) in pres.swap_rules else None
            if pure is None:
                raise RewriteLimitExceeded(
                    f"{pres.name}: ordered rule needs a pure swap for "
                    f"({pres.generators[t].name},{pres.generators[r].name})"
                )
            factor = factor * pure ** (rem[t] * p_r)
    pre = []
    for t in range(i_max):
        letter = t if rem[t] >= 0 else inverse_letter(t)
        pre.extend([letter] * abs(rem[t]))
    pre.extend(word_from_exponents(pattern))
    post = []
    post.extend([i_max] * rem[i_max])
    for t in range(i_max + 1, len(exps)):
        letter = t if exps[t] >= 0 else inverse_letter(t)
        post.extend([letter] * abs(exps[t]))
    pre_a = tuple(pre[: len(pre) - sum(pattern)])
    patt_word = tuple(pre[len(pre) - sum(pattern):])
    inv = factor.inverse()
    for rword, rc in rhs.terms.items():
        yield pre_a + rword + tuple(post), rc * inv


class Poly:
    """Normal-form noncommutative polynomial over one presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: dict[tuple[int, ...], CycScalar]):
        self.pres = pres
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w, ZERO) + c
            if acc.is_zero():
                out.pop(w, None)
            else:
                out[w] = acc
        return Poly(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.pres, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if other.pres is not self.pres:
                raise ValueError("polynomials over different presentations")
            prod: dict[tuple[int, ...], CycScalar] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    acc = prod.get(w, ZERO) + c1 * c2
                    if acc.is_zero():
                        prod.pop(w, None)
                    else:
                        prod[w] = acc
            return self.pres.normal_form(prod)
        if isinstance(other, (CycScalar, int)):
            c = other if isinstance(other, CycScalar) else CycScalar(other)
            return Poly(self.pres, {w: cc * c for w, cc in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CycScalar, int)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            if isinstance(k, int) and k < 0:
                return self.inverse() ** (-k)
            return NotImplemented
        out = self.pres.one()
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "Poly":
        """Inverse of a single invertible monomial (Laurent letters only)."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible")
        (word, c), = self.terms.items()
        for l in word:
            if not self.pres.generators[letter_gen(l)].invertible:
                raise ValueError("monomial contains a non-invertible generator")
        inv_word = tuple(inverse_letter(l) for l in reversed(word))
        return self.pres.normal_form({inv_word: c.inverse()})

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.pres is not self.pres:
                raise ValueError("polynomials over different presentations")
            return other
        if isinstance(other, (CycScalar, int)):
            return self.pres.scalar(other)
        return NotImplemented

    # -- inspection ------------------------------------------------------------

    def grade(self) -> int | None:
        """Common grade of all monomials, None if inhomogeneous; grade(0) = 0."""
        if not self.terms:
            return 0
        grades = {word_grade(self.pres, w) for w in self.terms}
        return grades.pop() if len(grades) == 1 else None

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> CycScalar:
        if not self.terms:
            return ZERO
        if set(self.terms) == {()}:
            return self.terms[()]
        raise ValueError("polynomial is not a constant")

    def degree(self) -> int:
        return max((sum(abs(letter_sign(l)) for l in w) for w in self.terms), default=0)

    def __eq__(self, other):
        if isinstance(other, (int, CycScalar)):
            other = self.pres.scalar(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.pres is other.pres and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.pres), frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({self.pres.name}: {self})"

    def __str__(self):
        return render_terms(self.pres, self.terms)


# -- rendering -------------------------------------------------------------


def render_word(pres: Presentation, word) -> str:
    if not word:
        return "1"
    parts = []
    for letter, run in itertools.groupby(word):
        n = len(list(run))
        g = pres.generators[letter_gen(letter)].name
        e = n * letter_sign(letter)
        parts.append(g if e == 1 else f"{g}^{e}")
    return "*".join(parts)


def term_sort_key(word):
    return (sum(1 for _ in word), tuple(word))


def coefficient_pieces(c) -> tuple[bool, str]:
    """(is_negative, magnitude_string) with the sign read off the rendering."""
    from .scalars import format_scalar

    s = format_scalar(c)
    if s.startswith("-"):
        return True, format_scalar(-c)
    return False, s


def render_terms(pres: Presentation, terms) -> str:
    if not terms:
        return "0"
    chunks = []
    for word in sorted(terms, key=term_sort_key):
        neg, s = coefficient_pieces(terms[word])
        mono = render_word(pres, word)
        if mono == "1":
            body = s if ("+" not in s and " - " not in s) else f"({s})"
        elif s == "1":
            body = mono
        elif "+" in s or " - " in s:
            body = f"({s})*{mono}"
        else:
            body = f"{s}*{mono}"
        if not chunks:
            chunks.append(body if not neg else f"-{body}")
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)
