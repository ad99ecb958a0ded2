"""Correlation dynamics of two qubits coupled to independent noisy environments."""

from ._core import (
    RECORD_CSV_HEADER,
    ConfigError,
    NumericDomainError,
    analytic_reduced,
    cli_main,
    concurrence,
    detect_events,
    discrepancy_report,
    evolve,
    full_result,
    initial_state,
    mutual_information,
    reduced,
    sweep,
    von_neumann_entropy,
)

__all__ = [
    "RECORD_CSV_HEADER",
    "ConfigError",
    "NumericDomainError",
    "analytic_reduced",
    "cli_main",
    "concurrence",
    "detect_events",
    "discrepancy_report",
    "evolve",
    "full_result",
    "initial_state",
    "mutual_information",
    "reduced",
    "sweep",
    "von_neumann_entropy",
]
