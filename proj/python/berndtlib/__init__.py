from ._berndt import (
    barnes_value,
    closed_form_json,
    closed_form_pretty,
    closed_form_value,
    closed_series_json,
    coefficients,
    gamma_quarter,
    hyper_sum,
    integrate_mixed,
    ramanujan_sine,
    run_suite,
)

__all__ = [
    "barnes_value",
    "closed_form_json",
    "closed_form_pretty",
    "closed_form_value",
    "closed_series_json",
    "coefficients",
    "gamma_quarter",
    "hyper_sum",
    "integrate_mixed",
    "ramanujan_sine",
    "run_suite",
]
