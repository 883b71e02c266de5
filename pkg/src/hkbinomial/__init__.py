"""Exact Hilbert-Kunz functions and multiplicities of binomial hypersurfaces.

The length l(S / (x_1^q, ..., x_m^q, f)) for a two-term polynomial f over
F_p is computed by three independent engines (iterative closed form,
per-monomial membership counting, relation-graph oracle) that are
cross-checked against each other, all in exact integer arithmetic.
"""

from .algebra import (
    Binomial,
    PrimePower,
    Term,
    deglex_compare,
    normalize,
    parse_binomial,
    parse_monomial,
    render,
)
from .classify import Classification, classify, classification_summary
from .closedform import (
    hk_closed_form,
    hk_closed_form_tables,
    phi_closed_simple,
    phi_recursive,
    phi_tables,
    g_chain,
)
from .engines import Config, HKReport, cross_check, hk, load_corpus
from .errors import (
    ConstantTermError,
    ContractError,
    DegenerateBinomialError,
    DimensionError,
    DomainError,
    FormulaDomainError,
    HKError,
    NotApplicableError,
    ParseError,
    ResourceError,
    ZeroCoefficientError,
)
from .keycheck import (
    MembershipResult,
    hk_direct_count,
    is_convergent,
    is_member,
    key_ideal_generators,
    member_scan,
)
from .mmax import MmaxParams, mmax_closed, mmax_params
from .multiplicity import (
    MultiplicityReport,
    estimate_multiplicity,
    hk_1dim,
    hk_multiplicity_1dim,
)
from .oracle import dense_rank_length, hk_oracle, hk_oracle_report

__version__ = "0.1.0"

__all__ = [
    "Binomial",
    "Classification",
    "Config",
    "HKReport",
    "MembershipResult",
    "MmaxParams",
    "MultiplicityReport",
    "PrimePower",
    "Term",
    "classify",
    "classification_summary",
    "cross_check",
    "deglex_compare",
    "dense_rank_length",
    "estimate_multiplicity",
    "g_chain",
    "hk",
    "hk_1dim",
    "hk_closed_form",
    "hk_closed_form_tables",
    "hk_direct_count",
    "hk_multiplicity_1dim",
    "hk_oracle",
    "hk_oracle_report",
    "is_convergent",
    "is_member",
    "key_ideal_generators",
    "load_corpus",
    "member_scan",
    "mmax_closed",
    "mmax_params",
    "normalize",
    "parse_binomial",
    "parse_monomial",
    "phi_closed_simple",
    "phi_recursive",
    "phi_tables",
    "render",
    # errors
    "HKError",
    "ParseError",
    "DimensionError",
    "DegenerateBinomialError",
    "ZeroCoefficientError",
    "ConstantTermError",
    "DomainError",
    "ContractError",
    "NotApplicableError",
    "FormulaDomainError",
    "ResourceError",
]
