"""Analysis of linear codes over finite fields: covering radius, complete
regularity, intersection arrays, uniform packing, and design structure."""

from .code import LinearCode, WeightDistribution, krawtchouk, macwilliams_transform
from .coset import (
    CosetTable,
    CRResult,
    DistanceProfile,
    IntersectionArray,
    build_coset_table,
    is_completely_regular,
)
from .design import DesignParams, design_lambda, lambda_i, verify_cr_designs
from .errors import (
    CodeFileError,
    EnumerationLimitError,
    NotCompletelyRegularError,
    ZeroDenominatorError,
)
from .feas import feas_value, pless_solve_3w, scan_family, table1_verify
from .field import GF, prime_power
from .catalog import build, direct_sum, direct_sum_ia, verify_catalog
from .search import SearchSpec, exists_code, iter_codes
from .upws import (
    PackingCoefficients,
    beta_cr_closed_form,
    external_distance,
    solve_upws,
    sphere_packing_check,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "prime_power",
    "LinearCode",
    "WeightDistribution",
    "krawtchouk",
    "macwilliams_transform",
    "CosetTable",
    "CRResult",
    "DistanceProfile",
    "IntersectionArray",
    "build_coset_table",
    "is_completely_regular",
    "PackingCoefficients",
    "solve_upws",
    "sphere_packing_check",
    "external_distance",
    "beta_cr_closed_form",
    "DesignParams",
    "design_lambda",
    "lambda_i",
    "verify_cr_designs",
    "feas_value",
    "scan_family",
    "pless_solve_3w",
    "table1_verify",
    "build",
    "direct_sum",
    "direct_sum_ia",
    "verify_catalog",
    "SearchSpec",
    "exists_code",
    "iter_codes",
    "CodeFileError",
    "EnumerationLimitError",
    "NotCompletelyRegularError",
    "ZeroDenominatorError",
    "__version__",
]
