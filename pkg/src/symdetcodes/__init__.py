"""Exact weight spectra of rank-bounded symmetric-matrix evaluation codes.

Evaluation codes on the F_q-points of bounded-rank loci of symmetric m x m
matrices, for odd primes q: censuses, quadratic-form value counts, weight
formulas with brute-force cross-checks, minimum distances, and a CLI
verification harness. All arithmetic is exact.
"""
from .codes import (
    CodeId,
    CodeParams,
    DimensionMismatchError,
    WeightRecord,
    code_params,
    codeword_weight_bf,
    functional_matrix,
    spectrum,
    symmetrize,
    trace_pairing,
)
from .gf import EvenCharacteristicError, Fe, NonPrimeError, PrimeField
from .harness import (
    Check,
    RunConfig,
    VerifyReport,
    regression_corpus,
    reproduce_tables,
    verify,
)
from .quadform import (
    QuadFormClass,
    TypeSplit,
    ZeroAlphaError,
    classify,
    gamma_count,
    lambda_count,
    type_split,
)
from .spectrum import (
    BoundReport,
    ConjectureReport,
    FiberReport,
    MinDistanceReport,
    WeightReport,
    bound_check,
    conjecture_check,
    fiber_census,
    min_distance,
    restricted_weight_formula,
    weight_diff_identity,
    weight_report,
    weight_theorem,
    weight_w1,
)
from .symmat import (
    BudgetExceededError,
    DiagForm,
    RankCensus,
    SymMatrix,
    census,
    census_enumerated,
    congruence_diagonalize,
    rank_count,
    type_count,
)

# the submodule import above rebinds the package attribute 'spectrum' to the
# module; restore the operation so `from symdetcodes import spectrum` is the op
from .codes import spectrum as spectrum  # noqa: E402, F811

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BudgetExceededError",
    "Check",
    "CodeId",
    "CodeParams",
    "ConjectureReport",
    "DiagForm",
    "DimensionMismatchError",
    "EvenCharacteristicError",
    "Fe",
    "FiberReport",
    "MinDistanceReport",
    "NonPrimeError",
    "PrimeField",
    "QuadFormClass",
    "RankCensus",
    "RunConfig",
    "SymMatrix",
    "TypeSplit",
    "VerifyReport",
    "WeightRecord",
    "WeightReport",
    "ZeroAlphaError",
    "bound_check",
    "census",
    "census_enumerated",
    "classify",
    "code_params",
    "codeword_weight_bf",
    "congruence_diagonalize",
    "conjecture_check",
    "fiber_census",
    "functional_matrix",
    "gamma_count",
    "lambda_count",
    "min_distance",
    "rank_count",
    "regression_corpus",
    "reproduce_tables",
    "restricted_weight_formula",
    "spectrum",
    "symmetrize",
    "trace_pairing",
    "type_count",
    "type_split",
    "verify",
    "weight_diff_identity",
    "weight_report",
    "weight_theorem",
    "weight_w1",
    "__version__",
]
