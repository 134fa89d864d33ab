"""Decoherence of a two-qubit system coupled to a transverse-field XY chain
with Dzyaloshinsky-Moriya interaction: decoherence factors, orthogonality
signals, event detection and an exact pair-dynamics cross-check."""

from spinorth._core import (
    ChainParams,
    DegenerateCoherenceError,
    InvariantError,
    __version__,
    bogoliubov_angle,
    decoherence_factor,
    decoherence_matrix,
    dispersion,
    divergence_report,
    dressed_fields,
    eigensystem_analytic,
    eigensystem_numeric,
    eta,
    evolve_state,
    initial_state,
    list_presets,
    oracle_decoherence_factor,
    orthogonality_events,
    orthogonality_signal,
    pair_ground_state,
    pair_hamiltonian,
)

__all__ = [
    "ChainParams",
    "DegenerateCoherenceError",
    "InvariantError",
    "__version__",
    "bogoliubov_angle",
    "decoherence_factor",
    "decoherence_matrix",
    "dispersion",
    "divergence_report",
    "dressed_fields",
    "eigensystem_analytic",
    "eigensystem_numeric",
    "eta",
    "evolve_state",
    "initial_state",
    "list_presets",
    "oracle_decoherence_factor",
    "orthogonality_events",
    "orthogonality_signal",
    "pair_ground_state",
    "pair_hamiltonian",
]
