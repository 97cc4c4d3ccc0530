"""Simulator for Hardy's two-qubit nonlocality test on gate-based hardware.

Angles are radians unless a name says ``_deg``.
"""

from ._core import (  # noqa: F401
    OPTIMUM_DEG,
    SWEEP_CSV_HEADER,
    HardyParams,
    NoiseModel,
    ShotConfig,
    SweepRow,
    analytic_q,
    baseline_eps4,
    chi_of,
    classify_state,
    cli,
    delta_interval,
    diagonal_sweep,
    gates,
    hardy_vector,
    joint_probability,
    metric_fluctuation,
    metric_min_q,
    metric_shift,
    optimal_angles,
    prepare_state,
    q_max,
    q_surface,
    reduced_circuit_compare,
    run_experiment,
    run_validation,
    sample_shots,
    simulate_noisy,
    statistical_error,
    sweep_csv,
)

__version__ = "0.1.0"
