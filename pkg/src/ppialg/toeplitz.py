"""Finite sections of Toeplitz matrices and their limit decomposition.

A bounded sequence (A_n) built from polynomial expressions in the truncated
shift splits uniquely as

    A_n = T_n(a) + P_n K P_n + R_n L R_n + G_n

with a a continuous symbol on the unit circle, K and L compact corrections,
and ||G_n|| -> 0.  This module recovers (a, K, L) numerically: the upper-left
corners of A_n and of the flipped sequence R_n A_n R_n are tracked until they
stabilise entrywise, the symbol is read off a middle row of the stabilised
corner (far from both compact corrections), and the residuals G_n are
measured rather than assumed to vanish.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np


class StabilizationError(RuntimeError):
    """Corner entries failed to settle over the tested range."""

    def __init__(self, message: str, entries):
        super().__init__(message)
        self.entries = entries


class DecompositionError(RuntimeError):
    """Reassembly residual exceeded the tolerance."""

    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


_BUILTIN_SAMPLERS: dict[str, Callable[[complex], complex]] = {
    "one": lambda t: 1.0,
    "t": lambda t: t,
    "t-inverse": lambda t: 1.0 / t,
    "cos": lambda t: (t + 1.0 / t) / 2.0,
    "sin": lambda t: (t - 1.0 / t) / 2.0j,
    "exp-cos": lambda t: np.exp((t + 1.0 / t) / 2.0),
}


class SymbolSeries:
    """Fourier coefficients of a symbol on the unit circle.

    Exact symbols hold a finite coefficient map k -> a_k; sampled symbols
    hold a function on the circle and an FFT size, and their coefficients
    are computed once and thresholded.
    """

    __slots__ = ("kind", "coeffs", "fft_size", "threshold")

    def __init__(self, coeffs: dict[int, complex], kind: str = "exact",
                 fft_size: int | None = None, threshold: float = 1e-12):
        self.kind = kind
        self.fft_size = fft_size
        self.threshold = threshold
        self.coeffs = {int(k): complex(v) for k, v in coeffs.items() if abs(v) > threshold}

    @classmethod
    def from_coeffs(cls, coeffs: dict[int, complex]) -> "SymbolSeries":
        return cls(coeffs, kind="exact")

    @classmethod
    def zero(cls) -> "SymbolSeries":
        return cls({}, kind="exact")

    @classmethod
    def from_sampler(cls, sampler: Callable[[complex], complex], fft_size: int = 1024,
                     threshold: float = 1e-12) -> "SymbolSeries":
        if fft_size < 4 or fft_size & (fft_size - 1):
            raise ValueError("fft_size must be a power of two, at least 4")
        angles = 2.0 * np.pi * np.arange(fft_size) / fft_size
        samples = np.array([sampler(complex(np.cos(a), np.sin(a))) for a in angles])
        table = np.fft.fft(samples) / fft_size
        half = fft_size // 2
        coeffs = {k: table[k % fft_size] for k in range(-half + 1, half)}
        return cls(coeffs, kind="sampled", fft_size=fft_size, threshold=threshold)

    @classmethod
    def builtin(cls, name: str, fft_size: int = 1024) -> "SymbolSeries":
        if name not in _BUILTIN_SAMPLERS:
            raise ValueError(f"unknown sampler {name!r}; known: {sorted(_BUILTIN_SAMPLERS)}")
        return cls.from_sampler(_BUILTIN_SAMPLERS[name], fft_size)

    def coefficient(self, k: int) -> complex:
        return self.coeffs.get(int(k), 0.0)

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def reflect(self) -> "SymbolSeries":
        """The symbol t -> a(1/t): coefficient reversal k -> -k."""
        return SymbolSeries({-k: v for k, v in self.coeffs.items()}, kind=self.kind,
                            fft_size=self.fft_size, threshold=self.threshold)

    def evaluate(self, t: complex) -> complex:
        return sum(v * t ** k for k, v in self.coeffs.items())

    def __mul__(self, other: "SymbolSeries") -> "SymbolSeries":
        acc: dict[int, complex] = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                acc[k1 + k2] = acc.get(k1 + k2, 0.0) + v1 * v2
        return SymbolSeries(acc, kind="exact")

    def to_json_dict(self) -> dict:
        return {str(k): [self.coeffs[k].real, self.coeffs[k].imag] for k in self.support()}

    @classmethod
    def from_json_dict(cls, payload: dict, default_fft: int = 1024) -> "SymbolSeries":
        if "sampler" in payload:
            return cls.builtin(payload["sampler"], int(payload.get("fft", default_fft)))
        coeffs = {int(k): complex(re, im) for k, (re, im) in payload.items()}
        return cls.from_coeffs(coeffs)

    def __repr__(self) -> str:
        return f"SymbolSeries({self.to_json_dict()})"


def toeplitz_section(a: SymbolSeries, n: int) -> np.ndarray:
    """The n-by-n matrix with entry (i, j) = a_{i-j}."""
    if n < 1:
        raise ValueError("section size must be >= 1")
    table = np.array([a.coefficient(k) for k in range(-(n - 1), n)], dtype=complex)
    idx = np.subtract.outer(np.arange(n), np.arange(n))
    return table[idx + (n - 1)]


def flip(n: int) -> np.ndarray:
    """The anti-diagonal reversal matrix R_n; R_n squared is the identity."""
    return np.eye(n, dtype=complex)[::-1]


def flip_conjugate(a_n: np.ndarray) -> np.ndarray:
    """R_n A_n R_n computed directly as a double reversal."""
    return np.asarray(a_n, dtype=complex)[::-1, ::-1].copy()


class FsSequence:
    """A rule n -> A_n (complex n-by-n), the raw material of the sections algebra."""

    def __init__(self, build: Callable[[int], np.ndarray], label: str = ""):
        self._build = build
        self.label = label
        self._cache: dict[int, np.ndarray] = {}

    def matrix(self, n: int) -> np.ndarray:
        if n not in self._cache:
            m = np.asarray(self._build(n), dtype=complex)
            if m.shape != (n, n):
                raise ValueError(f"builder returned shape {m.shape} for n={n}")
            self._cache[n] = m
        return self._cache[n]

    @classmethod
    def from_element(cls, x) -> "FsSequence":
        from .reps import JordanRep, eval_element

        return cls(lambda n: np.array(eval_element(JordanRep(n), x).to_complex_lists()),
                   label=str(x))

    @classmethod
    def from_symbol(cls, a: SymbolSeries) -> "FsSequence":
        return cls(lambda n: toeplitz_section(a, n), label="toeplitz")

    def flipped(self) -> "FsSequence":
        return FsSequence(lambda n: flip_conjugate(self.matrix(n)), label=f"R({self.label})R")

    def __add__(self, other: "FsSequence") -> "FsSequence":
        return FsSequence(lambda n: self.matrix(n) + other.matrix(n))

    def __mul__(self, other: "FsSequence") -> "FsSequence":
        return FsSequence(lambda n: self.matrix(n) @ other.matrix(n))

    def norms(self, ns) -> list[float]:
        return [float(np.linalg.norm(self.matrix(n), 2)) for n in ns]


@dataclass
class FsConfig:
    """Knobs for corner stabilisation and decomposition extraction."""

    probe: int = 12
    n_min: int = 2
    n_max: int = 24
    tol: float = 1e-10
    consecutive: int = 3
    coeff_threshold: float = 1e-12


@dataclass
class Decomposition:
    """An extracted split A_n ~ T_n(a) + P_n K P_n + R_n L R_n."""

    symbol: SymbolSeries
    K: np.ndarray
    L: np.ndarray
    residuals: list[tuple[int, float]] = field(default_factory=list)
    probe: int = 0
    stabilized_at: int = 0

    def reassemble(self, n: int) -> np.ndarray:
        """T_n(a) + the embedded compact corrections, without the residual."""
        k_dim = self.K.shape[0]
        l_dim = self.L.shape[0]
        if n < max(k_dim, l_dim, 1):
            raise ValueError(f"n={n} is smaller than the compact corrections")
        out = toeplitz_section(self.symbol, n)
        out[:k_dim, :k_dim] += self.K
        if l_dim:
            lower = np.zeros((n, n), dtype=complex)
            lower[:l_dim, :l_dim] = self.L
            out += flip_conjugate(lower)
        return out

    def to_json_dict(self) -> dict:
        return {
            "symbol": self.symbol.to_json_dict(),
            "K": _matrix_json(self.K),
            "L": _matrix_json(self.L),
            "residuals": [{"n": n, "frobenius": r} for n, r in self.residuals],
            "probe": self.probe,
            "stabilized_at": self.stabilized_at,
        }


def _matrix_json(m: np.ndarray) -> list:
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m, dtype=complex)]


def _stable_corner(corners: list[tuple[int, np.ndarray]], tol: float, consecutive: int):
    need = max(consecutive, 2)
    for start in range(len(corners) - need + 1):
        block = corners[start:start + need]
        if all(np.max(np.abs(block[k + 1][1] - block[k][1])) <= tol for k in range(need - 1)):
            return block[-1][1], block[-1][0]
    last_n, last = corners[-1]
    prev = corners[-2][1]
    delta = np.abs(last - prev)
    worst = np.argwhere(delta > tol)
    entries = [{"i": int(i), "j": int(j), "delta": float(delta[i, j])} for i, j in worst[:10]]
    raise StabilizationError(
        f"corner entries did not stabilise by n={last_n}; the sequence may lie outside "
        "the sections algebra or the n range is too small",
        entries,
    )


def strong_limits(seq: FsSequence, probe: int, n_range=None, tol: float = 1e-10,
                  consecutive: int = 3) -> tuple[np.ndarray, np.ndarray]:
    """Entrywise limits of the probe-sized corners of A_n and R_n A_n R_n."""
    w, wt, _ = _strong_limits_info(seq, probe, n_range, tol, consecutive)
    return w, wt


def _strong_limits_info(seq, probe, n_range, tol, consecutive):
    if n_range is None:
        n_range = range(probe, probe + 3 * consecutive + 2)
    ns = [n for n in n_range if n >= probe]
    if len(ns) < max(consecutive, 2):
        raise ValueError("n range leaves too few sections at least as large as the probe")
    corners = [(n, seq.matrix(n)[:probe, :probe]) for n in ns]
    flipped = [(n, flip_conjugate(seq.matrix(n))[:probe, :probe]) for n in ns]
    w, n0 = _stable_corner(corners, tol, consecutive)
    wt, n1 = _stable_corner(flipped, tol, consecutive)
    return w, wt, max(n0, n1)


def _trim(m: np.ndarray, tol: float) -> np.ndarray:
    mat = np.asarray(m, dtype=complex)
    size = mat.shape[0]
    while size > 0 and (np.max(np.abs(mat[size - 1, :size])) <= tol
                        and np.max(np.abs(mat[:size, size - 1])) <= tol):
        size -= 1
    return mat[:size, :size].copy()


def extract_decomposition(seq: FsSequence, config: FsConfig | None = None) -> Decomposition:
    """Recover (symbol, K, L) from a sections sequence and measure the residuals.

    The symbol coefficient a_k is read from the stabilised corner W at entry
    (m//2, m//2 - k): the middle row sits beyond the decay of the K corner,
    and the flipped corner contributes nothing there in the limit.  K and L
    are the corner defects against the Toeplitz sections of the recovered
    symbol and its reflection.  Raises DecompositionError when some tested
    section misses the reassembly by more than the tolerance.
    """
    cfg = config or FsConfig()
    m = cfg.probe
    ns = range(max(cfg.n_min, m), cfg.n_max + 1)
    w, wt, n0 = _strong_limits_info(seq, m, ns, cfg.tol, cfg.consecutive)

    row = m // 2
    coeffs = {}
    for col in range(m):
        k = row - col
        val = w[row, col]
        if abs(val) > cfg.coeff_threshold:
            coeffs[k] = complex(val)
    symbol = SymbolSeries.from_coeffs(coeffs)

    k_corr = _trim(w - toeplitz_section(symbol, m), cfg.coeff_threshold)
    l_corr = _trim(wt - toeplitz_section(symbol.reflect(), m), cfg.coeff_threshold)
    deco = Decomposition(symbol=symbol, K=k_corr, L=l_corr, probe=m, stabilized_at=n0)

    lowest = max(cfg.n_min, k_corr.shape[0], l_corr.shape[0], 1)
    bad = []
    for n in range(lowest, cfg.n_max + 1):
        g_n = seq.matrix(n) - deco.reassemble(n)
        r = float(np.linalg.norm(g_n))
        deco.residuals.append((n, r))
        if not (math.isfinite(r) and r <= cfg.tol):
            idx = np.unravel_index(np.argmax(np.abs(g_n)), g_n.shape)
            bad.append({"n": n, "frobenius": r,
                        "worst_entry": {"i": int(idx[0]), "j": int(idx[1]),
                                        "value": [float(g_n[idx].real), float(g_n[idx].imag)]}})
    if bad:
        raise DecompositionError(
            f"residual exceeds tolerance {cfg.tol} at {len(bad)} section(s)",
            {"decomposition": deco.to_json_dict(), "offending": bad},
        )
    return deco


def quotient_symbol(seq: FsSequence, config: FsConfig | None = None) -> SymbolSeries:
    """The symbol component alone: the image in the top quotient of the algebra."""
    return extract_decomposition(seq, config).symbol
