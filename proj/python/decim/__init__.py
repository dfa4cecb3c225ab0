"""Preperiod/period analysis of {1,2}-step self-decimated generators."""

from ._decim import (
    admissible_moduli,
    brute_force_moments,
    classify,
    closed_moments,
    count_configs,
    exact_moments,
    is_primitive,
    lambda_mu,
    monte_carlo_moments,
    normalization_ok,
    prefix_set,
    rueppel_mu,
    simulate_orbit,
)

__all__ = [
    "admissible_moduli",
    "brute_force_moments",
    "classify",
    "closed_moments",
    "count_configs",
    "exact_moments",
    "is_primitive",
    "lambda_mu",
    "monte_carlo_moments",
    "normalization_ok",
    "prefix_set",
    "rueppel_mu",
    "simulate_orbit",
]
