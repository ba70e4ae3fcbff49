# This code is part of q422.
#
# (C) Copyright 2026 q422 contributors.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

"""Exact simulator and analysis toolkit for the [[4,2,2]] error-detection code."""

from ._core import (
    analytic_no_intrinsic,
    brute_force_oracle,
    build_prep,
    build_stabilizer,
    codeword,
    commutes,
    decode_logical,
    enumerate_single_faults,
    fit_noise_params,
    ft_certified,
    pauli_multiply,
    physical_baseline,
    postselect,
    run_miscal_sweep,
    simulate_plan,
    statistical_importance,
    sweep_error_curves,
)

__all__ = [
    "analytic_no_intrinsic",
    "brute_force_oracle",
    "build_prep",
    "build_stabilizer",
    "codeword",
    "commutes",
    "decode_logical",
    "enumerate_single_faults",
    "fit_noise_params",
    "ft_certified",
    "pauli_multiply",
    "physical_baseline",
    "postselect",
    "run_miscal_sweep",
    "simulate_plan",
    "statistical_importance",
    "sweep_error_curves",
]

__version__ = "0.1.0"
