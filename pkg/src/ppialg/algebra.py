"""Finite linear combinations of canonical words with exact coefficients.

An Element is a formal sum  u*e + sum_w c_w * w  over canonical words w,
where e is the formal identity of the generated algebra.  The unit
coefficient is kept separate: e is not itself a word, and it expands to
v*v + vv* - v*v vv* only where an identity is actually needed (see
unit_expansion).  Products reduce every word pair, so cancellations such
as p * pt = 0 happen exactly at the symbolic level.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce as _fold

from .scalars import ZERO, ONE, GaussianRational
from .words import NormalWord, word_adjoint, word_mul

_SCALARS = (GaussianRational, int, Fraction)


class Element:
    """An exact linear combination of canonical words plus a formal unit part.

    Instances are immutable by convention: operations always build new values.
    """

    __slots__ = ("terms", "unit")

    def __init__(self, terms=None, unit=ZERO):
        clean: dict[NormalWord, GaussianRational] = {}
        for w, c in (terms or {}).items():
            c = GaussianRational.coerce(c)
            if c:
                clean[w] = c
        self.terms = clean
        self.unit = GaussianRational.coerce(unit)

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def from_word(cls, w: NormalWord, coeff=ONE) -> "Element":
        return cls({w: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms and not self.unit

    @property
    def max_letters(self) -> int:
        return max((w.letters for w in self.terms), default=0)

    def scale(self, c) -> "Element":
        c = GaussianRational.coerce(c)
        if not c:
            return Element()
        return Element({w: v * c for w, v in self.terms.items()}, self.unit * c)

    def adjoint(self) -> "Element":
        return Element(
            {word_adjoint(w): c.conjugate() for w, c in self.terms.items()},
            self.unit.conjugate(),
        )

    def __add__(self, other: "Element") -> "Element":
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, ZERO) + c
        return Element(acc, self.unit + other.unit)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        acc: dict[NormalWord, GaussianRational] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = word_mul(w1, w2)
                acc[w] = acc.get(w, ZERO) + c1 * c2
        if self.unit:
            for w2, c2 in other.terms.items():
                acc[w2] = acc.get(w2, ZERO) + self.unit * c2
        if other.unit:
            for w1, c1 in self.terms.items():
                acc[w1] = acc.get(w1, ZERO) + c1 * other.unit
        return Element(acc, self.unit * other.unit)

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.unit == other.unit and self.terms == other.terms

    __hash__ = None

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        if self.unit:
            parts.append(_term_str(self.unit, "e"))
        for w in sorted(self.terms, key=NormalWord.sort_key):
            parts.append(_term_str(self.terms[w], str(w)))
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"Element({self})"


def _term_str(c: GaussianRational, w: str) -> str:
    if c == ONE:
        return w
    if c == -ONE:
        return f"-{w}"
    if not c.im:
        return f"{c.re} {w}"
    return f"({c}) {w}"


def add(x: Element, y: Element) -> Element:
    return x + y


def scale(c, x: Element) -> Element:
    return x.scale(c)


def mul(x: Element, y: Element) -> Element:
    return x * y


def adjoint(x: Element) -> Element:
    return x.adjoint()


def v_power(k: int) -> Element:
    """The word v^k as an element (k >= 1)."""
    if k < 1:
        raise ValueError("power must be >= 1")
    return Element.from_word(NormalWord.pp(k, 0))


def vstar_power(k: int) -> Element:
    if k < 1:
        raise ValueError("power must be >= 1")
    return Element.from_word(NormalWord.pp(0, k))


def e_elem() -> Element:
    """The formal identity of the generated algebra."""
    return Element(unit=ONE)


@lru_cache(maxsize=None)
def unit_expansion() -> Element:
    """The identity written in the generators: v*v + vv* - v*v vv*."""
    vv_star = Element.from_word(NormalWord.pp(1, 1))
    vstar_v = Element.from_word(NormalWord.sp(1, 1))
    return vstar_v + vv_star - vstar_v * vv_star


@lru_cache(maxsize=None)
def p_elem() -> Element:
    """Defect projection p = e - v*v = vv* - vv* v*v."""
    vv_star = Element.from_word(NormalWord.pp(1, 1))
    vstar_v = Element.from_word(NormalWord.sp(1, 1))
    return vv_star - vv_star * vstar_v


@lru_cache(maxsize=None)
def ptilde_elem() -> Element:
    """Defect projection pt = e - vv* = v*v - v*v vv*."""
    vv_star = Element.from_word(NormalWord.pp(1, 1))
    vstar_v = Element.from_word(NormalWord.sp(1, 1))
    return vstar_v - vstar_v * vv_star


@lru_cache(maxsize=None)
def pi(n: int) -> Element:
    """The projection p v^n pt v*^n p (n >= 1)."""
    if n < 1:
        raise ValueError("pi(n) needs n >= 1")
    return p_elem() * v_power(n) * ptilde_elem() * vstar_power(n) * p_elem()


@lru_cache(maxsize=None)
def pitilde(n: int) -> Element:
    """The projection pt v*^n p v^n pt (n >= 1)."""
    if n < 1:
        raise ValueError("pitilde(n) needs n >= 1")
    return ptilde_elem() * vstar_power(n) * p_elem() * v_power(n) * ptilde_elem()


@lru_cache(maxsize=None)
def matrix_unit(n: int, i: int, j: int) -> Element:
    """The matrix unit v*^i pi(n) v^j of the (n+1)-dimensional block."""
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"matrix unit index out of range: n={n}, i={i}, j={j}")
    x = pi(n)
    if i:
        x = vstar_power(i) * x
    if j:
        x = x * v_power(j)
    return x


@lru_cache(maxsize=None)
def z(n: int) -> Element:
    """The block identity z_n, the sum of the diagonal matrix units of level n."""
    if n < 1:
        raise ValueError("z(n) needs n >= 1")
    return _fold(add, (matrix_unit(n, i, i) for i in range(n + 1)))


@lru_cache(maxsize=None)
def f(i: int, j: int) -> Element:
    """v*^i p v^j, a matrix unit of the compact-type ideal on the shift pair."""
    if i < 0 or j < 0:
        raise ValueError("f(i, j) needs i, j >= 0")
    x = p_elem()
    if i:
        x = vstar_power(i) * x
    if j:
        x = x * v_power(j)
    return x


@lru_cache(maxsize=None)
def ftilde(i: int, j: int) -> Element:
    """v^i pt v*^j, the mirrored matrix-unit family."""
    if i < 0 or j < 0:
        raise ValueError("ftilde(i, j) needs i, j >= 0")
    x = ptilde_elem()
    if i:
        x = v_power(i) * x
    if j:
        x = x * vstar_power(j)
    return x


def is_partial_isometry(x: Element, config=None) -> bool:
    """True iff x x* x agrees with x on the representation oracle."""
    from .reps import oracle_equal

    return oracle_equal(x * x.adjoint() * x, x, config)


def commutes(x: Element, y: Element, config=None) -> bool:
    """True iff xy and yx agree on the representation oracle."""
    from .reps import oracle_equal

    return oracle_equal(x * y, y * x, config)
