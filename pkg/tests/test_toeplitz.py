"""Toeplitz sections, flips, strong limits, and decomposition extraction."""

import random

import numpy as np
import pytest

from ppialg.algebra import v_power, vstar_power
from ppialg.toeplitz import (
    DecompositionError,
    FsConfig,
    FsSequence,
    StabilizationError,
    SymbolSeries,
    extract_decomposition,
    flip,
    flip_conjugate,
    quotient_symbol,
    strong_limits,
    toeplitz_section,
)


def test_section_of_rotation_symbol_is_shift():
    a = SymbolSeries.from_coeffs({1: 1})
    np.testing.assert_array_equal(toeplitz_section(a, 4).real, np.eye(4, k=-1))


def test_section_of_constant_is_identity():
    a = SymbolSeries.from_coeffs({0: 1})
    np.testing.assert_array_equal(toeplitz_section(a, 3), np.eye(3))


def test_section_tridiagonal():
    a = SymbolSeries.from_coeffs({1: 1, -1: 1})
    t = toeplitz_section(a, 3).real
    np.testing.assert_array_equal(t, np.eye(3, k=-1) + np.eye(3, k=1))


def test_flip_involution_and_conjugation():
    np.testing.assert_array_equal(flip(2).real, [[0, 1], [1, 0]])
    for n in range(1, 7):
        r = flip(n)
        np.testing.assert_array_equal(r @ r, np.eye(n))
        a = SymbolSeries.from_coeffs({1: 1})
        np.testing.assert_array_equal(
            r @ toeplitz_section(a, n) @ r, toeplitz_section(a.reflect(), n))
        np.testing.assert_array_equal(
            flip_conjugate(toeplitz_section(a, n)), toeplitz_section(a.reflect(), n))


def test_reflect_is_coefficient_reversal():
    a = SymbolSeries.from_coeffs({-1: 2j, 2: 3})
    assert a.reflect().coefficient(1) == 2j
    assert a.reflect().coefficient(-2) == 3


def test_strong_limits_of_range_projection_sequence():
    seq = FsSequence.from_element(v_power(1) * vstar_power(1))
    w, wt = strong_limits(seq, 4)
    np.testing.assert_array_equal(w, np.diag([0.0, 1, 1, 1]))
    np.testing.assert_array_equal(wt, np.eye(4))


def test_strong_limits_of_initial_projection_sequence():
    seq = FsSequence.from_element(vstar_power(1) * v_power(1))
    w, wt = strong_limits(seq, 4)
    np.testing.assert_array_equal(w, np.eye(4))
    np.testing.assert_array_equal(wt, np.diag([0.0, 1, 1, 1]))


def test_strong_limits_of_pure_toeplitz_sequence():
    a = SymbolSeries.from_coeffs({1: 1, 0: 2})
    seq = FsSequence.from_symbol(a)
    w, _ = strong_limits(seq, 5)
    np.testing.assert_array_equal(w, toeplitz_section(a, 5))


def test_canonical_decompositions():
    cases = [
        (v_power(1) * vstar_power(1), {0: 1.0}, [[-1.0]], None),
        (vstar_power(1) * v_power(1), {0: 1.0}, None, [[-1.0]]),
        (v_power(1), {1: 1.0}, None, None),
    ]
    for element, coeffs, k_want, l_want in cases:
        deco = extract_decomposition(FsSequence.from_element(element),
                                     FsConfig(probe=10, n_min=2, n_max=24))
        assert {k: v.real for k, v in deco.symbol.coeffs.items()} == coeffs
        for got, want in ((deco.K, k_want), (deco.L, l_want)):
            if want is None:
                assert got.size == 0
            else:
                np.testing.assert_array_equal(got.real, want)
        assert all(r == 0.0 for _, r in deco.residuals)
        assert deco.residuals[0][0] == 2


def test_decomposition_of_two_sided_polynomial():
    deco = extract_decomposition(FsSequence.from_element(v_power(1) + vstar_power(1)))
    assert deco.symbol.support() == [-1, 1]
    assert deco.K.size == 0 and deco.L.size == 0
    assert all(r == 0.0 for _, r in deco.residuals)


def test_zero_sequence_has_zero_symbol():
    assert quotient_symbol(FsSequence.from_element(v_power(1) - v_power(1))).support() == []


def test_reassemble_round_trip():
    seq = FsSequence.from_element(v_power(2) * vstar_power(2))
    deco = extract_decomposition(seq, FsConfig(probe=10, n_max=20))
    for n in (5, 12, 20):
        np.testing.assert_allclose(deco.reassemble(n), seq.matrix(n), atol=1e-12)


def test_sampled_symbol_matches_exact():
    s = SymbolSeries.builtin("cos", 256)
    assert s.kind == "sampled"
    assert sorted(s.coeffs) == [-1, 1]
    assert abs(s.coefficient(1) - 0.5) < 1e-12
    t = SymbolSeries.builtin("t", 64)
    assert t.support() == [1]


def test_sampled_symbol_rejects_bad_fft_size():
    with pytest.raises(ValueError):
        SymbolSeries.from_sampler(lambda t: t, fft_size=100)
    with pytest.raises(ValueError):
        SymbolSeries.builtin("nope")


def test_symbol_json_round_trip():
    a = SymbolSeries.from_coeffs({-1: 2j, 2: 3})
    again = SymbolSeries.from_json_dict(a.to_json_dict())
    assert again.coeffs == a.coeffs
    sampled = SymbolSeries.from_json_dict({"sampler": "cos", "fft": 128})
    assert sorted(sampled.coeffs) == [-1, 1]


def _random_trig_poly(rng, degree=3):
    coeffs = {}
    for k in range(-degree, degree + 1):
        if rng.random() < 0.6:
            coeffs[k] = complex(rng.randint(-3, 3), rng.randint(-3, 3))
    if not coeffs:
        coeffs = {0: 1.0}
    return SymbolSeries.from_coeffs(coeffs)


def test_reflection_coherence_on_random_polynomials():
    rng = random.Random(0)
    cfg = FsConfig(probe=14, n_max=30)
    for _ in range(20):
        a = _random_trig_poly(rng)
        got = quotient_symbol(FsSequence.from_symbol(a).flipped(), cfg)
        want = a.reflect()
        for k in set(got.support()) | set(want.support()):
            assert abs(got.coefficient(k) - want.coefficient(k)) < 1e-10


def test_symbol_map_is_multiplicative():
    rng = random.Random(1)
    cfg = FsConfig(probe=18, n_max=36)
    for _ in range(10):
        a = _random_trig_poly(rng, degree=2)
        b = _random_trig_poly(rng, degree=2)
        got = quotient_symbol(FsSequence.from_symbol(a) * FsSequence.from_symbol(b), cfg)
        want = a * b
        for k in set(got.support()) | set(want.support()):
            assert abs(got.coefficient(k) - want.coefficient(k)) < 1e-10


def test_stabilization_failure_reports_entries():
    seq = FsSequence(lambda n: ((-1) ** n) * np.eye(n))
    with pytest.raises(StabilizationError) as err:
        extract_decomposition(seq, FsConfig(probe=4, n_max=16))
    assert err.value.entries


def test_residual_failure_raises_with_report():
    def bump(n):
        m = np.zeros((n, n))
        m[n // 2, n // 2] = 1.0
        return m

    with pytest.raises(DecompositionError) as err:
        extract_decomposition(FsSequence(bump), FsConfig(probe=6, n_max=24))
    assert err.value.report["offending"]


def test_norm_profile():
    seq = FsSequence.from_element(v_power(1))
    assert all(abs(x - 1.0) < 1e-12 for x in seq.norms(range(2, 8)))


def test_single_words_decompose_exactly():
    # residuals vanish identically once the section outgrows the word
    from ppialg.algebra import Element
    from ppialg.words import parse_word, reduce_word

    texts = ["v^2", "v*^3", "v v*", "v^2 v*^2", "v v*^3 v",
             "v^3 v*^2", "v* v^2", "v^2 v*^4 v^2"]
    for text in texts:
        word = reduce_word(parse_word(text))
        cfg = FsConfig(probe=2 * word.letters + 8, n_min=2,
                       n_max=max(24, 2 * word.letters + 14))
        deco = extract_decomposition(
            FsSequence.from_element(Element.from_word(word)), cfg)
        for n, r in deco.residuals:
            if n >= word.letters + 1:
                assert r == 0.0, (text, n, r)
