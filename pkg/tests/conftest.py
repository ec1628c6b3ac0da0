"""Shared helpers: an independent dense-numpy evaluator used as a cross-check."""

import numpy as np

from ppialg.words import PLAIN


def np_shift(n: int) -> np.ndarray:
    """The n-by-n matrix with ones on the first subdiagonal."""
    return np.eye(n, k=-1)


def np_word(n: int, runs) -> np.ndarray:
    out = np.eye(n)
    fwd = np_shift(n)
    for sign, exp in runs:
        factor = fwd if sign == PLAIN else fwd.T
        out = out @ np.linalg.matrix_power(factor, exp)
    return out


def np_element(n: int, element) -> np.ndarray:
    out = np.zeros((n, n), dtype=complex)
    for word, coeff in element.terms.items():
        out += complex(coeff) * np_word(n, word.runs)
    if element.unit:
        out += complex(element.unit) * np.eye(n)
    return out


def exact_as_complex(matrix) -> np.ndarray:
    return np.array(matrix.to_complex_lists())
