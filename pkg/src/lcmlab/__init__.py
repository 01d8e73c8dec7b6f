"""lcmlab: exact least-common-multiple arithmetic for integer polynomial
sequences, with float-free bound reports and exhaustive exception sweeps.
"""

from .bounds import (
    BoundKind,
    BoundReport,
    Comparison,
    ThreeTermCase,
    ThreeTermLcm,
    hanson_check,
    half_range_ln_check,
    key1_check,
    key2_lcm,
    lemma22_holds,
    lemma_key_check,
    main_theorem_check,
    nair_check,
)
from .lcm_engine import (
    PsiValue,
    RangeLcmRequest,
    chebyshev_psi,
    gcd,
    half_range,
    lcm2,
    lcm_range,
)
from .polynomial import (
    IdentityReport,
    Poly,
    identity_lhs_value,
    linear_product,
    verify_identity,
)
from .verifier import (
    DEFAULT_SUITE_LIMITS,
    SUITES,
    CampaignReport,
    ExceptionRecord,
    FamilyFilter,
    SuiteResult,
    SweepConfig,
    campaign_to_csv,
    campaign_to_dict,
    campaign_to_json,
    enumerate_family,
    predicted_exception_keys,
    run_campaign,
    run_lemma_suites,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BoundKind",
    "BoundReport",
    "CampaignReport",
    "Comparison",
    "DEFAULT_SUITE_LIMITS",
    "ExceptionRecord",
    "FamilyFilter",
    "IdentityReport",
    "Poly",
    "PsiValue",
    "RangeLcmRequest",
    "SUITES",
    "SuiteResult",
    "SweepConfig",
    "ThreeTermCase",
    "ThreeTermLcm",
    "campaign_to_csv",
    "campaign_to_dict",
    "campaign_to_json",
    "chebyshev_psi",
    "enumerate_family",
    "gcd",
    "half_range",
    "half_range_ln_check",
    "hanson_check",
    "identity_lhs_value",
    "key1_check",
    "key2_lcm",
    "lcm2",
    "lcm_range",
    "lemma22_holds",
    "lemma_key_check",
    "linear_product",
    "main_theorem_check",
    "nair_check",
    "predicted_exception_keys",
    "run_campaign",
    "run_lemma_suites",
    "run_suite",
    "verify_identity",
]
