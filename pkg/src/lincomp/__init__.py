"""Linear complexity toolkit for periodic sequences over small finite fields.

Exact GF(p^m) arithmetic with operation counting, a gcd-based linear
complexity oracle, Berlekamp-Massey synthesis, the generalized Games-Chan
contraction for p^h periods, and a root-of-unity period reduction that
splits a period-u*n sequence into u period-n sequences (u | p^m - 1,
gcd(n, p^m - 1) = 1) with additive complexity.
"""

from .field import (
    FieldElement,
    FieldError,
    FieldSpec,
    MixedFieldsError,
    NonPrimeError,
    NotADivisorError,
    NotCoprimeError,
    ReducibleModulusError,
    DegreeMismatchError,
    ZeroElementError,
    ZeroInverseError,
    fe_arith,
    make_field,
    nth_root_coprime,
    primitive_element,
    uth_roots_of_unity,
)
from .opcount import OpCounter, tally
from .poly import (
    BothZeroError,
    DivideByZeroPolyError,
    Poly,
    ZeroScaleError,
    one_minus_x_pow,
    poly_arith,
    poly_gcd_normalized,
    poly_pow,
    scale_argument,
)
from .sequence import (
    BadConnectionPolyError,
    LinCompResult,
    PeriodicSequence,
    generating_poly,
    oracle_lincomp,
    verify_recurrence,
)
from .algorithms import (
    BadLengthError,
    EmptyPrefixError,
    GgcState,
    NotPrimePowerPeriodError,
    WrongCharacteristicError,
    berlekamp_massey,
    ggc_complexity,
    ggc_fold,
    ggc_lincomp,
    ggc_steps,
)
from .reduction import (
    ArityMismatchError,
    ComponentReport,
    Inapplicable,
    PeriodMismatchError,
    ReductionPlan,
    SolveReport,
    compose,
    decompose,
    plan_reduction,
    reduce_antisymmetric,
    solve_auto,
    solve_auto_report,
    solve_reduction_report,
)
from .bench import BadConfigError, BenchConfig, bench_config_from_dict, random_sequence, run_bench

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "FieldError",
    "FieldSpec",
    "MixedFieldsError",
    "NonPrimeError",
    "NotADivisorError",
    "NotCoprimeError",
    "ReducibleModulusError",
    "DegreeMismatchError",
    "ZeroElementError",
    "ZeroInverseError",
    "fe_arith",
    "make_field",
    "nth_root_coprime",
    "primitive_element",
    "uth_roots_of_unity",
    "OpCounter",
    "tally",
    "BothZeroError",
    "DivideByZeroPolyError",
    "Poly",
    "ZeroScaleError",
    "one_minus_x_pow",
    "poly_arith",
    "poly_gcd_normalized",
    "poly_pow",
    "scale_argument",
    "BadConnectionPolyError",
    "LinCompResult",
    "PeriodicSequence",
    "generating_poly",
    "oracle_lincomp",
    "verify_recurrence",
    "BadLengthError",
    "EmptyPrefixError",
    "GgcState",
    "NotPrimePowerPeriodError",
    "WrongCharacteristicError",
    "berlekamp_massey",
    "ggc_complexity",
    "ggc_fold",
    "ggc_lincomp",
    "ggc_steps",
    "ArityMismatchError",
    "ComponentReport",
    "Inapplicable",
    "PeriodMismatchError",
    "ReductionPlan",
    "SolveReport",
    "compose",
    "decompose",
    "plan_reduction",
    "reduce_antisymmetric",
    "solve_auto",
    "solve_auto_report",
    "solve_reduction_report",
    "BadConfigError",
    "BenchConfig",
    "bench_config_from_dict",
    "random_sequence",
    "run_bench",
]
