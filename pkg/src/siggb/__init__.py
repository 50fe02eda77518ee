"""Signature-based Groebner bases over prime fields, with a classical
Buchberger oracle for differential testing."""

from .errors import (
    CapExceededError,
    ConfigError,
    DimensionError,
    DivisibilityError,
    EmptyPolynomialError,
    ProblemParseError,
    SiggbError,
    SizeGuardError,
    SoundnessError,
)
from .ground import GREVLEX, GRLEX, LEX, PrimeField, TermOrder, mono_cmp
from .poly import PolyRing, Polynomial, normal_form, render_poly, spoly
from .sig import (
    POT,
    SCHREYER,
    LabeledPoly,
    ModuleOrder,
    SyzygyRecord,
    principal_syzygies,
    render_sig,
)
from .pairs import CriticalPair, PairClass, PairQueue, classify, make_pair
from .criteria import po_less, gen_rewritable, pair_rewritable
from .engine import (
    Basis,
    EngineConfig,
    RunStats,
    extract_gb,
    interreduce,
    sig_reduce,
    signature_groebner,
)
from .oracle import (
    buchberger,
    gb_equal,
    has_standard_representation,
    reduce_gb,
    spotcheck_standard_reps,
)
from .bench import BenchmarkSystem, cyclic, katsura, make_system, run_suite
from .cli import ProblemFile, main, parse_problem, render_problem

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BenchmarkSystem",
    "CapExceededError",
    "ConfigError",
    "CriticalPair",
    "DimensionError",
    "DivisibilityError",
    "EmptyPolynomialError",
    "EngineConfig",
    "GREVLEX",
    "GRLEX",
    "LEX",
    "LabeledPoly",
    "ModuleOrder",
    "PairClass",
    "PairQueue",
    "PolyRing",
    "Polynomial",
    "POT",
    "PrimeField",
    "ProblemFile",
    "ProblemParseError",
    "RunStats",
    "SCHREYER",
    "SiggbError",
    "SizeGuardError",
    "SoundnessError",
    "SyzygyRecord",
    "TermOrder",
    "buchberger",
    "classify",
    "cyclic",
    "extract_gb",
    "gb_equal",
    "gen_rewritable",
    "has_standard_representation",
    "interreduce",
    "katsura",
    "main",
    "make_pair",
    "make_system",
    "mono_cmp",
    "normal_form",
    "pair_rewritable",
    "parse_problem",
    "po_less",
    "principal_syzygies",
    "reduce_gb",
    "render_poly",
    "render_problem",
    "render_sig",
    "run_suite",
    "sig_reduce",
    "signature_groebner",
    "spoly",
    "spotcheck_standard_reps",
]
