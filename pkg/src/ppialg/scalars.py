"""Exact Gaussian-rational scalars, the coefficient field of the symbolic layer."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """A complex number re + im*i with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        # agrees with int/Fraction hashing on real values
        return hash(self.re) if not self.im else hash((self.re, self.im))

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_frac(x))

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero scalar")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if not self:
            return "0"
        if not self.im:
            return str(self.re)
        mag = "" if abs(self.im) == 1 else str(abs(self.im))
        imag = f"{mag}i"
        if not self.re:
            return imag if self.im > 0 else f"-{imag}"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{imag}"

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Inverse of str(): accepts "0", "3", "-1/2", "i", "2i", "1+2i", "1/2-i"."""
        s = text.replace(" ", "").replace("−", "-")
        if not s:
            raise ValueError("empty scalar")
        # split off an imaginary tail at the last top-level +/-
        cut = 0
        for idx in range(1, len(s)):
            if s[idx] in "+-" and s[idx - 1] not in "+-/":
                cut = idx
        head, tail = (s[:cut], s[cut:]) if cut else ("", s)
        def part(p):
            if p in ("", "+"):
                return Fraction(1)
            if p == "-":
                return Fraction(-1)
            return Fraction(p)
        if tail.endswith("i"):
            return GaussianRational(part(head) if head else Fraction(0), part(tail[:-1]))
        if head:
            raise ValueError(f"bad scalar literal: {text!r}")
        return GaussianRational(part(tail), Fraction(0))


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
MINUS_ONE = GaussianRational(Fraction(-1))
IMAG = GaussianRational(Fraction(0), Fraction(1))
