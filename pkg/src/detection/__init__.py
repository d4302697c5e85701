"""
Вероятности детектирования по правилу Борна, воспроизводимое сэмплирование совпадений,
оценка корреляции, проверка no-signaling и таблица сравнения суперпозиций.
"""

from .audit import AuditRow, NoSignalingReport, audit_distributions, no_signaling_audit, phase_grid, reduced_state_audit
from .distributions import (
    JointDistribution,
    MarginalDistribution,
    degree_of_correlation,
    joint_probabilities,
    marginals,
    p_diff,
    p_diff_split,
    p_same,
    p_same_split,
    single_photon_probs,
)
from .sampling import (
    GENERATOR_NAME,
    CorrelationEstimate,
    SamplingError,
    TrialCounts,
    estimate_correlation,
    make_generator,
    sample_trials,
)
from .sweeps import SinglePhotonRow, SweepRow, correlation_sweep, single_photon_sweep
from .table import TABLE_PHASES, Table1Row, table1

__all__ = [
    "GENERATOR_NAME",
    "TABLE_PHASES",
    "AuditRow",
    "CorrelationEstimate",
    "JointDistribution",
    "MarginalDistribution",
    "NoSignalingReport",
    "SamplingError",
    "SinglePhotonRow",
    "SweepRow",
    "Table1Row",
    "TrialCounts",
    "audit_distributions",
    "correlation_sweep",
    "degree_of_correlation",
    "estimate_correlation",
    "joint_probabilities",
    "make_generator",
    "marginals",
    "no_signaling_audit",
    "p_diff",
    "p_diff_split",
    "p_same",
    "p_same_split",
    "phase_grid",
    "reduced_state_audit",
    "sample_trials",
    "single_photon_probs",
    "single_photon_sweep",
    "table1",
]
