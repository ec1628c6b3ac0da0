"""Words in a power partial isometry: canonical forms, exact models, sections."""

from .scalars import GaussianRational
from .words import (
    ExpWord,
    NormalWord,
    WordSyntaxError,
    embed,
    enumerate_normal_words,
    parse_word,
    reduce_word,
    word_adjoint,
    word_mul,
)
from .algebra import (
    Element,
    add,
    adjoint,
    commutes,
    e_elem,
    f,
    ftilde,
    is_partial_isometry,
    matrix_unit,
    mul,
    p_elem,
    pi,
    pitilde,
    ptilde_elem,
    scale,
    unit_expansion,
    v_power,
    vstar_power,
    z,
)
from .reps import (
    JordanRep,
    Matrix,
    OracleConfig,
    PairMatrix,
    ShiftPairRep,
    WindowTooSmallError,
    detect_nv,
    eval_element,
    eval_word,
    oracle_equal,
    oracle_witness,
    oracle_zero,
    pair_vanishes,
    xi_map,
)
from .exprs import ExprSyntaxError, parse_element
from .toeplitz import (
    Decomposition,
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
from .verify import SuiteOptions, VerifyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "DecompositionError",
    "Element",
    "ExpWord",
    "ExprSyntaxError",
    "FsConfig",
    "FsSequence",
    "GaussianRational",
    "JordanRep",
    "Matrix",
    "NormalWord",
    "OracleConfig",
    "PairMatrix",
    "ShiftPairRep",
    "StabilizationError",
    "SuiteOptions",
    "SymbolSeries",
    "VerifyReport",
    "WindowTooSmallError",
    "WordSyntaxError",
    "add",
    "adjoint",
    "commutes",
    "detect_nv",
    "e_elem",
    "embed",
    "enumerate_normal_words",
    "eval_element",
    "eval_word",
    "extract_decomposition",
    "f",
    "flip",
    "flip_conjugate",
    "ftilde",
    "is_partial_isometry",
    "matrix_unit",
    "mul",
    "oracle_equal",
    "oracle_witness",
    "oracle_zero",
    "p_elem",
    "pair_vanishes",
    "parse_element",
    "parse_word",
    "pi",
    "pitilde",
    "ptilde_elem",
    "quotient_symbol",
    "reduce_word",
    "run_suite",
    "scale",
    "strong_limits",
    "toeplitz_section",
    "unit_expansion",
    "v_power",
    "vstar_power",
    "word_adjoint",
    "word_mul",
    "xi_map",
    "z",
]
