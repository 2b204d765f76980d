# Copyright 2026 The ncprobe Authors
# SPDX-License-Identifier: Apache-2.0
"""Noncommutative phase-space opto-mechanical probe."""

from ._ncprobe import (
    ConfigError,
    Deformation,
    DimensionError,
    DomainError,
    Error,
    LoopNotClosedError,
    OracleInfeasibleError,
    OverflowError,
    SensitivityUnreachableError,
    TruncationError,
    commutator_residuals,
    detectable_theta_omega,
    feasibility,
    load_config,
    loop_phases,
    mean_field_deformed,
    mean_field_photon_sum,
    mean_field_qm,
    minimal_length_in_planck_units,
    phase_signal,
    phase_uncertainty,
    predicted_loop_phase,
    run_cli,
    sweep_csv,
    theta_phase,
    theta_tilde_area_from_natural,
)

__version__ = "0.1.0"
