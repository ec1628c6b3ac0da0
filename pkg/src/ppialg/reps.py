"""Exact evaluation of words and elements in the concrete models.

Two models are provided:

* JordanRep(n): the generator goes to the n-by-n matrix with ones on the
  first subdiagonal (the n-th finite section of the forward shift).
* ShiftPairRep(window): the generator goes to the pair (forward shift,
  backward shift) acting on basis vectors of l2(Z+).  Evaluation is lazy on
  basis vectors, so every tracked matrix entry is exact; the window only
  bounds which columns are materialised.

All arithmetic here is exact: integer index bookkeeping for words and
Gaussian-rational entries for elements.  The unit part of an element maps
to the full identity matrix, which agrees with the identity of the
generated algebra in every JordanRep(n) with n >= 2 and on the pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Element, mul, p_elem, ptilde_elem, v_power, matrix_unit
from .scalars import ZERO, ONE, GaussianRational
from .words import PLAIN, ExpWord, NormalWord


class WindowTooSmallError(ValueError):
    """The shift-pair window cannot hold the requested word exactly."""


class Matrix:
    """A sparse exact matrix with Gaussian-rational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        clean = {}
        for key, val in (data or {}).items():
            val = GaussianRational.coerce(val)
            if val:
                clean[key] = val
        self.data = clean

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Matrix":
        return cls(n, n, {(i, j): ONE})

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.data.get((i, j), ZERO)

    def _same_shape(self, other: "Matrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        acc = dict(self.data)
        for key, val in other.data.items():
            acc[key] = acc.get(key, ZERO) + val
        return Matrix(self.rows, self.cols, acc)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = GaussianRational.coerce(c)
        return Matrix(self.rows, self.cols, {k: v * c for k, v in self.data.items()})

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, list[tuple[int, GaussianRational]]] = {}
        for (k, j), w in other.data.items():
            by_row.setdefault(k, []).append((j, w))
        acc: dict[tuple[int, int], GaussianRational] = {}
        for (i, k), v in self.data.items():
            for j, w in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), ZERO) + v * w
        return Matrix(self.rows, other.cols, acc)

    def adjoint(self) -> "Matrix":
        return Matrix(self.cols, self.rows, {(j, i): v.conjugate() for (i, j), v in self.data.items()})

    @property
    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.data == other.data

    __hash__ = None

    def corner(self, size: int) -> "Matrix":
        """The upper-left size-by-size compression."""
        size = min(size, self.rows, self.cols)
        return Matrix(size, size, {(i, j): v for (i, j), v in self.data.items()
                                   if i < size and j < size})

    def to_lists(self) -> list[list[str]]:
        return [[str(self.entry(i, j)) for j in range(self.cols)] for i in range(self.rows)]

    def to_complex_lists(self) -> list[list[complex]]:
        return [[complex(self.entry(i, j)) for j in range(self.cols)] for i in range(self.rows)]

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, {len(self.data)} entries)"


@dataclass
class PairMatrix:
    """One matrix per leg of the shift pair, combined entrywise."""

    fwd: Matrix
    bwd: Matrix

    def __add__(self, other: "PairMatrix") -> "PairMatrix":
        return PairMatrix(self.fwd + other.fwd, self.bwd + other.bwd)

    def __sub__(self, other: "PairMatrix") -> "PairMatrix":
        return PairMatrix(self.fwd - other.fwd, self.bwd - other.bwd)

    def scale(self, c) -> "PairMatrix":
        return PairMatrix(self.fwd.scale(c), self.bwd.scale(c))

    def __matmul__(self, other: "PairMatrix") -> "PairMatrix":
        return PairMatrix(self.fwd @ other.fwd, self.bwd @ other.bwd)

    def adjoint(self) -> "PairMatrix":
        return PairMatrix(self.fwd.adjoint(), self.bwd.adjoint())

    @property
    def is_zero(self) -> bool:
        return self.fwd.is_zero and self.bwd.is_zero


@dataclass(frozen=True)
class JordanRep:
    """The finite Jordan-block model of dimension n."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("JordanRep needs n >= 1")


@dataclass(frozen=True)
class ShiftPairRep:
    """The lazy (forward shift, backward shift) model on a basis window."""

    window: int

    def __post_init__(self):
        if self.window < 2:
            raise ValueError("ShiftPairRep needs a window of at least 2")


@lru_cache(maxsize=1 << 17)
def _jordan_targets(n: int, runs) -> tuple[int, ...]:
    # image index of each basis column under the word, -1 when annihilated
    out = []
    for j in range(n):
        k = j
        for s, e in reversed(runs):
            k = k + e if s == PLAIN else k - e
            if not 0 <= k < n:
                k = -1
                break
        out.append(k)
    return tuple(out)


@lru_cache(maxsize=1 << 17)
def _shift_targets(ncols: int, runs, forward: bool) -> tuple[int, ...]:
    # unbounded above: only the floor at index 0 annihilates
    out = []
    for j in range(ncols):
        k = j
        for s, e in reversed(runs):
            up = (s == PLAIN) == forward
            k = k + e if up else k - e
            if k < 0:
                k = -1
                break
        out.append(k)
    return tuple(out)


def _check_window(window: int, letters: int):
    if letters * 2 > window:
        raise WindowTooSmallError(
            f"word of length {letters} needs a window of at least {2 * letters}, got {window}"
        )


def eval_word(rep, w) -> Matrix | PairMatrix:
    """Exact image of a word (0/1 matrix; one matrix per leg on the pair)."""
    if not isinstance(w, (ExpWord, NormalWord)):
        raise TypeError("expected a word")
    if isinstance(rep, JordanRep):
        n = rep.n
        targets = _jordan_targets(n, w.runs)
        return Matrix(n, n, {(t, j): ONE for j, t in enumerate(targets) if t >= 0})
    if isinstance(rep, ShiftPairRep):
        win = rep.window
        _check_window(win, w.letters)
        legs = []
        for forward in (True, False):
            targets = _shift_targets(win, w.runs, forward)
            legs.append(Matrix(win, win, {(t, j): ONE for j, t in enumerate(targets) if 0 <= t < win}))
        return PairMatrix(*legs)
    raise TypeError(f"unknown representation: {rep!r}")


def eval_element(rep, x: Element) -> Matrix | PairMatrix:
    """Linear extension of eval_word; the unit part maps to the identity."""
    if isinstance(rep, JordanRep):
        n = rep.n
        acc: dict[tuple[int, int], GaussianRational] = {}
        for w, c in x.terms.items():
            for j, t in enumerate(_jordan_targets(n, w.runs)):
                if t >= 0:
                    acc[(t, j)] = acc.get((t, j), ZERO) + c
        if x.unit:
            for i in range(n):
                acc[(i, i)] = acc.get((i, i), ZERO) + x.unit
        return Matrix(n, n, acc)
    if isinstance(rep, ShiftPairRep):
        win = rep.window
        _check_window(win, x.max_letters)
        legs = []
        for forward in (True, False):
            acc = {}
            for w, c in x.terms.items():
                for j, t in enumerate(_shift_targets(win, w.runs, forward)):
                    if 0 <= t < win:
                        acc[(t, j)] = acc.get((t, j), ZERO) + c
            if x.unit:
                for i in range(win):
                    acc[(i, i)] = acc.get((i, i), ZERO) + x.unit
            legs.append(Matrix(win, win, acc))
        return PairMatrix(*legs)
    raise TypeError(f"unknown representation: {rep!r}")


def pair_vanishes(x: Element, window: int) -> bool:
    """Exact zero test of an element on the shift pair, tracking full columns."""
    # exact column functionals: rows are not truncated, so this sees entries
    # that a windowed matrix would miss
    for forward in (True, False):
        cols: list[dict[int, GaussianRational]] = [{} for _ in range(window)]
        for w, c in x.terms.items():
            for j, t in enumerate(_shift_targets(window, w.runs, forward)):
                if t >= 0:
                    cols[j][t] = cols[j].get(t, ZERO) + c
        if x.unit:
            for j in range(window):
                cols[j][j] = cols[j].get(j, ZERO) + x.unit
        for col in cols:
            if any(col.values()):
                return False
    return True


@dataclass(frozen=True)
class OracleConfig:
    """Bounds for the equality oracle; None means sized from the operands."""

    n_min: int = 2
    n_max: int | None = None
    window: int | None = None


def _oracle_bounds(x: Element, config: OracleConfig | None) -> tuple[int, int, int]:
    cfg = config or OracleConfig()
    letters = max(x.max_letters, 1)
    n_max = cfg.n_max if cfg.n_max is not None else letters + 4
    window = cfg.window if cfg.window is not None else 2 * letters + 4
    return cfg.n_min, n_max, window


def oracle_witness(x: Element, config: OracleConfig | None = None) -> str | None:
    """A representation label where x is nonzero, or None if none was found."""
    if x.is_zero:
        return None
    n_min, n_max, window = _oracle_bounds(x, config)
    for n in range(n_min, n_max + 1):
        if not eval_element(JordanRep(n), x).is_zero:
            return f"jordan:{n}"
    if not pair_vanishes(x, window):
        return f"pair:{window}"
    return None


def oracle_zero(x: Element, config: OracleConfig | None = None) -> bool:
    return oracle_witness(x, config) is None


def oracle_equal(x: Element, y: Element, config: OracleConfig | None = None) -> bool:
    """Exact agreement in JordanRep(n) for n_min <= n <= n_max and on the pair."""
    return oracle_zero(x - y, config)


def detect_nv(rep, n_max: int) -> set[int]:
    """All n <= n_max for which p v^n pt is nonzero in the representation."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    found = set()
    for n in range(1, n_max + 1):
        x = mul(mul(p_elem(), v_power(n)), ptilde_elem())
        if isinstance(rep, ShiftPairRep):
            _check_window(rep.window, x.max_letters)
            nonzero = not pair_vanishes(x, rep.window)
        else:
            nonzero = not eval_element(rep, x).is_zero
        if nonzero:
            found.add(n)
    return found


def xi_map(n: int) -> dict[int, int]:
    """The index reversal i -> n - i realising the block isomorphism.

    Confirms that the matrix unit with indices (i, j) of level n evaluates in
    JordanRep(n+1) to the elementary matrix with the single one at
    (n - i, n - j).
    """
    if n < 1:
        raise ValueError("xi_map needs n >= 1")
    rep = JordanRep(n + 1)
    for i in range(n + 1):
        for j in range(n + 1):
            got = eval_element(rep, matrix_unit(n, i, j))
            if got != Matrix.unit(n + 1, n - i, n - j):
                raise RuntimeError(f"block correspondence broken at n={n}, i={i}, j={j}")
    return {i: n - i for i in range(n + 1)}
