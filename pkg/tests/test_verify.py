"""Suite machinery: classification sweep, rank helper, witnesses, determinism."""

import random
from fractions import Fraction

from ppialg.scalars import GaussianRational
from ppialg.verify import (
    SUITES,
    SuiteOptions,
    _oracle_equal_witness,
    _span_dimension,
    random_diagonal_word,
    random_exp_word,
    run_suite,
)
from ppialg.algebra import v_power, vstar_power
from ppialg.words import reduce_word


def test_classification_suite_passes():
    report = run_suite("classification", SuiteOptions())
    assert report.ok
    names = {c.claim for c in report.checks}
    assert names == {"defect-compression-vanishes", "dual-defect-compression-vanishes"}


def test_projection_suites_are_deterministic():
    a = run_suite("rank-one", SuiteOptions(samples=40))
    b = run_suite("rank-one", SuiteOptions(samples=40))
    assert [c.to_json_dict() for c in a.checks] == [c.to_json_dict() for c in b.checks]


def test_sequential_and_threaded_runs_agree():
    a = run_suite("central", SuiteOptions(workers=1))
    b = run_suite("central", SuiteOptions(workers=4))
    assert [c.to_json_dict() for c in a.checks] == [c.to_json_dict() for c in b.checks]


def test_witness_on_false_identity():
    witness = _oracle_equal_witness(v_power(1) * vstar_power(1),
                                    vstar_power(1) * v_power(1))
    assert witness is not None
    assert witness["representation"] == "jordan:2"
    assert "matrix" in witness


def test_span_dimension():
    one = GaussianRational(Fraction(1))
    zero = GaussianRational(Fraction(0))
    vecs = [[one, zero], [zero, one], [one, one]]
    assert _span_dimension(vecs) == 2
    assert _span_dimension([[zero, zero]]) == 0


def test_random_word_generators_are_valid():
    rng = random.Random(9)
    for _ in range(200):
        w = random_exp_word(rng, 12)
        assert 1 <= w.letters <= 12
        d = random_diagonal_word(rng, 10)
        nf = reduce_word(d)
        assert nf.shape == "PP"
        a, b = nf.exponents
        assert a == b >= 1


def test_all_suites_registered():
    assert sorted(SUITES) == [
        "absorption",
        "central",
        "classification",
        "ideal-orthogonality",
        "matrix-units",
        "pair-matrix-units",
        "ppi-axioms",
        "projections",
        "rank-one",
        "reduction-soundness",
    ]
