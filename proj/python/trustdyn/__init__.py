"""Reduced replicator dynamics of the N-player trust game."""

from ._core import (
    BasinOptions,
    BasinResult,
    CaseId,
    EquilibriumLabel,
    EquilibriumReport,
    ExpectedPayoffs,
    GameParams,
    GroupComposition,
    IntegratorConfig,
    Matrix2,
    McEstimate,
    McExpectedPayoffs,
    PopulationState,
    RegimeMapResult,
    RegimeVerdict,
    Stability,
    Strategy,
    SweepAxis,
    ThresholdSet,
    Trajectory,
    TrajectorySample,
    VectorField2,
    alpha_star,
    basin_fraction,
    basin_sweep,
    classify_regime,
    equilibrium_reports,
    expected_payoffs,
    find_interior_fixed_points,
    group_payoff,
    integrate,
    jacobian,
    mc_expected_payoffs,
    payoff_difference_f,
    payoff_difference_g,
    regime_map,
    replicator_rhs,
    replicator_rhs_from_payoffs,
    state_in_rectangle,
    thresholds,
    validate_params,
)

__all__ = [
    "BasinOptions",
    "BasinResult",
    "CaseId",
    "EquilibriumLabel",
    "EquilibriumReport",
    "ExpectedPayoffs",
    "GameParams",
    "GroupComposition",
    "IntegratorConfig",
    "Matrix2",
    "McEstimate",
    "McExpectedPayoffs",
    "PopulationState",
    "RegimeMapResult",
    "RegimeVerdict",
    "Stability",
    "Strategy",
    "SweepAxis",
    "ThresholdSet",
    "Trajectory",
    "TrajectorySample",
    "VectorField2",
    "alpha_star",
    "basin_fraction",
    "basin_sweep",
    "classify_regime",
    "equilibrium_reports",
    "expected_payoffs",
    "find_interior_fixed_points",
    "group_payoff",
    "integrate",
    "jacobian",
    "mc_expected_payoffs",
    "payoff_difference_f",
    "payoff_difference_g",
    "regime_map",
    "replicator_rhs",
    "replicator_rhs_from_payoffs",
    "state_in_rectangle",
    "thresholds",
    "validate_params",
]

__version__ = "1.0.0"
