"""pairbox: Cooper-pair-box models and the condensate-overlap contrast.

Core pieces:

- :mod:`pairbox.tridiag` -- real symmetric tridiagonal eigensolver.
- :mod:`pairbox.two_mode` -- exact two-electrode Hamiltonian in the
  fixed-total-number sector.
- :mod:`pairbox.effective` -- requantized charge-basis model with qubit
  extraction.
- :mod:`pairbox.condensate` -- product-state overlaps, exact and
  asymptotic.
- :mod:`pairbox.bridge` -- parameter mapping and the contrast pipeline.
- :mod:`pairbox.service` -- FastAPI app; :mod:`pairbox.cli` -- CLI.
"""

__version__ = "0.1.0"

from .bridge import (
    BridgeMap,
    BridgeValidity,
    ContrastReport,
    GapRow,
    compare_spectra,
    contrast_pipeline,
    map_parameters,
)
from .condensate import (
    CondensateConfig,
    ConeScanResult,
    OverlapAsymptotic,
    OverlapExact,
    SingleParticleAmps,
    cone_scan,
    fock_embedding,
    overlap_asymptotic,
    overlap_exact,
    shifted_pair_amps,
    single_particle_overlap,
)
from .effective import (
    EffectiveParams,
    QubitPair,
    auto_truncation,
    build_effective,
    charge_dispersion_sweep,
    charge_values,
    qubit_states,
    resolve_n_max,
)
from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    InputError,
    InvalidAmps,
    InvalidConfig,
    InvalidMatrix,
    InvalidParams,
    NumericsError,
    PairboxError,
    SizeLimit,
    TruncationFailure,
)
from .tridiag import Spectrum, TridiagMatrix, eigen_all, eigen_lowest, lowest_eigenvalues
from .two_mode import (
    FockVector,
    TwoModeObservables,
    TwoModeParams,
    build_two_mode,
    two_mode_observables,
    two_mode_spectrum,
)

__all__ = [
    "__version__",
    "BridgeMap",
    "BridgeValidity",
    "CondensateConfig",
    "ConeScanResult",
    "ContrastReport",
    "ConvergenceFailure",
    "DimensionMismatch",
    "EffectiveParams",
    "FockVector",
    "GapRow",
    "InputError",
    "InvalidAmps",
    "InvalidConfig",
    "InvalidMatrix",
    "InvalidParams",
    "NumericsError",
    "OverlapAsymptotic",
    "OverlapExact",
    "PairboxError",
    "QubitPair",
    "SingleParticleAmps",
    "SizeLimit",
    "Spectrum",
    "TridiagMatrix",
    "TruncationFailure",
    "TwoModeObservables",
    "TwoModeParams",
    "auto_truncation",
    "build_effective",
    "build_two_mode",
    "charge_dispersion_sweep",
    "charge_values",
    "compare_spectra",
    "cone_scan",
    "contrast_pipeline",
    "eigen_all",
    "eigen_lowest",
    "fock_embedding",
    "lowest_eigenvalues",
    "map_parameters",
    "overlap_asymptotic",
    "overlap_exact",
    "qubit_states",
    "resolve_n_max",
    "shifted_pair_amps",
    "single_particle_overlap",
    "two_mode_observables",
    "two_mode_spectrum",
]
