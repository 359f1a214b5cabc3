"""Necessary-condition sieve for circle-action fixed-point weight data.

Given the complex dimension and the integer tangent weights at each
isolated fixed point of a would-be almost complex circle action, this
package decides every implemented necessary condition exactly (no
floating point anywhere): localization vanishing and Chern-number
integrality, weight pairing across points, equal weight sums, the
all-plus-minus-one point-count rule, the fixed-point parity rule, and the
recursive cyclic-subgroup restriction analysis.  A bounded exhaustive
enumerator lists all data surviving a configurable filter suite.
"""

from .core import (
    CanonicalForm,
    FixedPointData,
    InvalidDataError,
    Partition,
    Point,
    canonicalize,
    elem_sym,
    partitions,
    validate,
    validation_errors,
)
from .datasets import BUILTINS, builtin, cp2, remark, s6, sphere2, t1_contradiction
from .documents import (
    TOOL_VERSION as __version__,
    data_to_document,
    parse_data_document,
    report_to_document,
)
from .localization import (
    ChernTable,
    ChiYProfile,
    check_integrality,
    check_kosniowski,
    check_parity,
    check_vanishing,
    chi_y_profile,
    compute_chern_table,
    localization_sum,
)
from .restriction import (
    ComponentGrouping,
    ResidueSignature,
    check_all_restrictions,
    check_restriction,
    residue_signature,
    restrict_group,
)
from .search import (
    SearchResult,
    SearchSpec,
    SearchTruncatedError,
    run_search,
    two_point_dimension_survey,
)
from .structural import PairingWitness, check_equal_sums, check_pairing, check_pm1
from .suite import ALL_FILTERS, PAPER_FILTERS, CheckReport, Suite, SuiteReport

__all__ = [
    "ALL_FILTERS",
    "BUILTINS",
    "CanonicalForm",
    "CheckReport",
    "ChernTable",
    "ChiYProfile",
    "ComponentGrouping",
    "FixedPointData",
    "InvalidDataError",
    "PAPER_FILTERS",
    "PairingWitness",
    "Partition",
    "Point",
    "ResidueSignature",
    "SearchResult",
    "SearchSpec",
    "SearchTruncatedError",
    "Suite",
    "SuiteReport",
    "builtin",
    "canonicalize",
    "check_all_restrictions",
    "check_equal_sums",
    "check_integrality",
    "check_kosniowski",
    "check_pairing",
    "check_parity",
    "check_pm1",
    "check_restriction",
    "check_vanishing",
    "chi_y_profile",
    "compute_chern_table",
    "cp2",
    "data_to_document",
    "elem_sym",
    "localization_sum",
    "parse_data_document",
    "partitions",
    "remark",
    "report_to_document",
    "residue_signature",
    "restrict_group",
    "run_search",
    "s6",
    "sphere2",
    "t1_contradiction",
    "two_point_dimension_survey",
    "validate",
    "validation_errors",
    "__version__",
]
