"""Numerical toolkit for BMOA norms and weighted composition operators on the unit disc."""

from bmoa._core import (  # noqa: F401
    AnalyticFunction,
    BoundaryGrid,
    BoundarySet,
    CheckReport,
    ClassifyResult,
    ClassifyThresholds,
    Compactness,
    DiscPoint,
    EstimateReport,
    SelfMapError,
    SupResult,
    SupSearchConfig,
    SymbolFamily,
    SymbolPair,
    SymbolSpec,
    TailQuantityResult,
    TailSup,
    TestFunctionF,
    TestFunctionG,
    TransformMethod,
    VerifyConfig,
    alpha,
    apply_wco,
    beta,
    bmoa_norm,
    bmoa_seminorm,
    bmoa_seminorm_grid,
    boundary_grid,
    boundary_set_integral,
    check_ids,
    classify_compactness,
    coefficients_from_grid,
    dilate,
    essnorm_estimate_boundary,
    essnorm_estimate_powers,
    estimate_constant,
    eval,
    grid_product,
    hardy_norm,
    in_Q,
    log_weight,
    norm_estimate_classic,
    norm_estimate_powers,
    poisson_kernel,
    power_seminorm_seq,
    reports_jsonl,
    reports_summary_csv,
    run_check,
    s_factor,
    sigma,
    tail_quantity,
    tail_sup,
    test_f,
    test_g,
    transform_norm,
    transform_norm_grid,
    vmoa_profile,
)

__version__ = "0.1.0"
