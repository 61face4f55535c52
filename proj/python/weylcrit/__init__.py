"""Exact type-D Weyl group combinatorics, critical sets of degree-2n
L-functions, and rank-one intertwining scalars, all in exact arithmetic
over Q * pi^(half-integer powers)."""

from ._core import (
    PiValue,
    balanced_elements,
    blattner,
    comb_lemma,
    critical_set,
    dims,
    dot_action,
    ds_param,
    factor_w_P,
    gamma_at,
    gk_ratio,
    is_critical,
    kostant_euler_check,
    kostant_lengths,
    local_L,
    phi_and_c,
    ratio_L_inf,
    weyl_dim_M,
)

__all__ = [
    "PiValue",
    "balanced_elements",
    "blattner",
    "comb_lemma",
    "critical_set",
    "dims",
    "dot_action",
    "ds_param",
    "factor_w_P",
    "gamma_at",
    "gk_ratio",
    "is_critical",
    "kostant_euler_check",
    "kostant_lengths",
    "local_L",
    "phi_and_c",
    "ratio_L_inf",
    "weyl_dim_M",
]

__version__ = "0.1.0"
