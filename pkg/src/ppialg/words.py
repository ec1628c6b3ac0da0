"""Words in a partial-isometry symbol v and their canonical forms.

A word is a finite product of the letters v and v*, stored as alternating
runs (sign, exponent).  In any C*-algebra whose generator v has all powers
partially isometric, a triple of adjacent runs v^a v*^b v^c (or its mirror)
collapses to at most two runs whenever max(a, c) >= b:

    v*^a v^b v*^c  =  v*^(a-b+c)   if min(a, c) >= b
                   =  v^(b-a) v*^c if a <= b <= c
                   =  v*^a v^(b-c) if a >= b >= c

(and the sign-flipped table for v^a v*^b v^c).  Repeated rewriting therefore
drives every word into one of four canonical shapes:

    PP  v^a v*^b           SP  v*^b v^a          (a, b >= 0, a + b >= 1)
    PSP v^a v*^b v^c       SPS v*^a v^b v*^c     (0 < min(a,c) <= max(a,c) < b)

Pure powers are spelled as PP (v^a is PP(a, 0), v*^b is PP(0, b)).  The two
three-run shapes are pairwise redundant: inserting the partial-isometry
identity v^b = v^b v*^b v^b and collapsing the two side triples gives

    v*^a v^b v*^c = (v*^a v^b v*^b)(v^b v*^c) = v^(b-a) v*^b v^(b-c),

so every SPS word equals a PSP twin and vice versa.  The engine emits the
twin with fewer letters (the PSP one on ties, which makes the self-adjoint
family y = x + z syntactically self-adjoint).  This choice never lengthens
a word, is closed under the adjoint, and leaves one spelling per element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

PLAIN = 1
STAR = -1


class WordSyntaxError(ValueError):
    """Raised on malformed word input; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _coalesce(runs):
    out: list[tuple[int, int]] = []
    for s, e in runs:
        if out and out[-1][0] == s:
            out[-1] = (s, out[-1][1] + e)
        else:
            out.append((s, e))
    return out


def _render(runs) -> str:
    parts = []
    for s, e in runs:
        base = "v" if s == PLAIN else "v*"
        parts.append(base if e == 1 else f"{base}^{e}")
    return " ".join(parts)


@dataclass(frozen=True)
class ExpWord:
    """A raw word as alternating runs of v and v* with positive exponents."""

    runs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.runs:
            raise ValueError("empty word")
        for i, (s, e) in enumerate(self.runs):
            if s not in (PLAIN, STAR):
                raise ValueError(f"bad sign in run {i}")
            if e < 1:
                raise ValueError(f"non-positive exponent in run {i}")
            if i and self.runs[i - 1][0] == s:
                raise ValueError(f"adjacent runs {i - 1}, {i} have equal signs")

    @property
    def letters(self) -> int:
        return sum(e for _, e in self.runs)

    def adjoint(self) -> "ExpWord":
        return ExpWord(tuple((-s, e) for s, e in reversed(self.runs)))

    def __str__(self) -> str:
        return _render(self.runs)


@dataclass(frozen=True)
class NormalWord:
    """A word in one of the four canonical shapes (PP, SP, PSP, SPS)."""

    runs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        runs = self.runs
        if not 1 <= len(runs) <= 3:
            raise ValueError(f"not a canonical word: {_render(runs)}")
        for i, (s, e) in enumerate(runs):
            if s not in (PLAIN, STAR) or e < 1:
                raise ValueError(f"bad run {i} in {runs}")
            if i and runs[i - 1][0] == s:
                raise ValueError(f"adjacent runs {i - 1}, {i} have equal signs")
        if len(runs) == 3:
            a, b, c = runs[0][1], runs[1][1], runs[2][1]
            if max(a, c) >= b:
                raise ValueError(f"reducible triple: {_render(runs)}")

    @classmethod
    def pp(cls, a: int, b: int) -> "NormalWord":
        if a < 0 or b < 0 or a + b < 1:
            raise ValueError("PP needs a, b >= 0 and a + b >= 1")
        runs = []
        if a:
            runs.append((PLAIN, a))
        if b:
            runs.append((STAR, b))
        return cls(tuple(runs))

    @classmethod
    def sp(cls, b: int, a: int) -> "NormalWord":
        if b < 0 or a < 0 or a + b < 1:
            raise ValueError("SP needs a, b >= 0 and a + b >= 1")
        if not (a and b):
            # pure powers are canonically PP
            return cls.pp(a, b)
        return cls(((STAR, b), (PLAIN, a)))

    @classmethod
    def psp(cls, a: int, b: int, c: int) -> "NormalWord":
        return cls(((PLAIN, a), (STAR, b), (PLAIN, c)))

    @classmethod
    def sps(cls, a: int, b: int, c: int) -> "NormalWord":
        return cls(((STAR, a), (PLAIN, b), (STAR, c)))

    @property
    def shape(self) -> str:
        if len(self.runs) == 3:
            return "PSP" if self.runs[0][0] == PLAIN else "SPS"
        if len(self.runs) == 2:
            return "PP" if self.runs[0][0] == PLAIN else "SP"
        return "PP"

    @property
    def exponents(self) -> tuple[int, ...]:
        if len(self.runs) == 1:
            s, e = self.runs[0]
            return (e, 0) if s == PLAIN else (0, e)
        return tuple(e for _, e in self.runs)

    @property
    def letters(self) -> int:
        return sum(e for _, e in self.runs)

    def adjoint(self) -> "NormalWord":
        return word_adjoint(self)

    def sort_key(self):
        return (self.letters, len(self.runs), tuple((-s, e) for s, e in self.runs))

    def __str__(self) -> str:
        return _render(self.runs)


_FACTOR_RE = re.compile(r"v(\*)?(?:\^(\d+))?")


def parse_word(text: str) -> ExpWord:
    """Parse a word: factors `v` or `v*`, optional `^k` (k >= 1), whitespace as product."""
    pos, n = 0, len(text)
    factors: list[tuple[int, int]] = []
    need_sep = False
    while pos < n:
        if text[pos].isspace():
            need_sep = False
            pos += 1
            continue
        if need_sep:
            raise WordSyntaxError("factors must be separated by whitespace", pos)
        m = _FACTOR_RE.match(text, pos)
        if not m:
            raise WordSyntaxError("expected factor 'v' or 'v*'", pos)
        exp = int(m.group(2)) if m.group(2) else 1
        if exp < 1:
            raise WordSyntaxError("exponent must be >= 1", pos)
        factors.append((STAR if m.group(1) else PLAIN, exp))
        pos = m.end()
        need_sep = True
    if not factors:
        raise WordSyntaxError("empty word", 0)
    return ExpWord(tuple(_coalesce(factors)))


def embed(w: NormalWord) -> ExpWord:
    """View a canonical word as a raw word again."""
    return ExpWord(w.runs)


def _rewrite_triple(s1: int, a: int, b: int, c: int):
    """Collapse the triple (s1,a)(-s1,b)(s1,c), or return None if it is irreducible."""
    if min(a, c) >= b:
        return ((s1, a - b + c),)
    if s1 == PLAIN:
        if a >= b >= c:
            repl = ((PLAIN, a), (STAR, b - c))
        elif a <= b <= c:
            repl = ((STAR, b - a), (PLAIN, c))
        else:
            return None
    else:
        if a <= b <= c:
            repl = ((PLAIN, b - a), (STAR, c))
        elif a >= b >= c:
            repl = ((STAR, a), (PLAIN, b - c))
        else:
            return None
    return tuple((s, e) for s, e in repl if e)


def _canonical_runs(runs):
    # v*^a v^b v*^c = v^(b-a) v*^b v^(b-c): keep the shorter twin, PSP on ties
    if len(runs) == 3:
        a, b, c = runs[0][1], runs[1][1], runs[2][1]
        if runs[0][0] == STAR and a + c >= b:
            return ((PLAIN, b - a), (STAR, b), (PLAIN, b - c))
        if runs[0][0] == PLAIN and a + c > b:
            return ((STAR, b - a), (PLAIN, b), (STAR, b - c))
    return tuple(runs)


def reduce_word(w) -> NormalWord:
    """Rewrite a word into its canonical form.

    Scans for the leftmost collapsible triple of runs, rewrites it, and
    repeats; every rewrite strictly decreases the letter count, so the loop
    terminates with at most three runs satisfying the canonical constraints.
    """
    runs = _coalesce(w.runs)
    changed = True
    while changed:
        changed = False
        for i in range(len(runs) - 2):
            repl = _rewrite_triple(runs[i][0], runs[i][1], runs[i + 1][1], runs[i + 2][1])
            if repl is not None:
                runs = _coalesce(tuple(runs[:i]) + repl + tuple(runs[i + 3:]))
                changed = True
                break
    return NormalWord(_canonical_runs(runs))


def word_mul(x: NormalWord, y: NormalWord) -> NormalWord:
    """Concatenate two canonical words and reduce the result."""
    return reduce_word(ExpWord(tuple(_coalesce(x.runs + y.runs))))


def word_adjoint(x: NormalWord) -> NormalWord:
    """Reverse the runs and swap v with v*; canonical shapes are closed under this."""
    return NormalWord(_canonical_runs(tuple((-s, e) for s, e in reversed(x.runs))))


def enumerate_normal_words(max_letters: int):
    """Yield one canonical word per element with at most max_letters letters."""
    for a in range(max_letters + 1):
        for b in range(max_letters + 1 - a):
            if a + b >= 1:
                yield NormalWord.pp(a, b)
            if a >= 1 and b >= 1:
                yield NormalWord.sp(b, a)
    for b in range(2, max_letters - 1):
        for a in range(1, b):
            for c in range(1, b):
                if a + b + c <= max_letters:
                    if a + c <= b:
                        yield NormalWord.psp(a, b, c)
                    if a + c < b:
                        yield NormalWord.sps(a, b, c)
