"""tomoforge: read-out design and density-matrix reconstruction for 2-qubit NMR tomography.

The package splits into five layers:

* linalg  - symmetric eigendecomposition, rank and spectral norm kernels
* model   - rotations, the 16-parameter density parameterization, design rows
* lsq     - normal equations, conditioning analysis, truncated reconstruction
* search  - exhaustive read-out set enumeration and ranking
* io/cli  - text formats and the command-line surface
"""

from .errors import NumericalError, ValidationError
from .linalg import SymEigen, matrix_rank, spectral_norm, sym_eigen
from .lsq import (
    DEFAULT_THRESHOLD,
    ErrorMatrixReport,
    NormalSystem,
    ReconstructionResult,
    chi2,
    error_matrix_analysis,
    normal_system,
    psd_project,
    reconstruct,
    relative_error,
)
from .model import (
    DIAGONAL_SLOTS,
    N_PARAMS,
    N_READOUTS,
    PEAKS,
    ROTATION_LABELS,
    TRACE_LABEL,
    DesignSystem,
    Reading,
    apply_rotation,
    assemble_design,
    is_trace_normalized,
    matrix_to_params,
    maximally_mixed_params,
    observable_positions,
    params_to_matrix,
    readout_label,
    readout_rows,
    readout_spin,
    rotation_matrix,
    simulate_readings,
)
from .io import (
    format_density,
    format_readings,
    parse_density,
    parse_readings,
    read_density,
    read_readings,
    write_density,
    write_readings,
)
from .search import (
    SetReport,
    enumerate_minimal_sets,
    minimum_readout_count,
    rank_sets_by_conditioning,
    set_report,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_THRESHOLD",
    "DIAGONAL_SLOTS",
    "DesignSystem",
    "ErrorMatrixReport",
    "N_PARAMS",
    "N_READOUTS",
    "NormalSystem",
    "NumericalError",
    "PEAKS",
    "ROTATION_LABELS",
    "Reading",
    "ReconstructionResult",
    "SetReport",
    "SymEigen",
    "TRACE_LABEL",
    "ValidationError",
    "apply_rotation",
    "assemble_design",
    "chi2",
    "enumerate_minimal_sets",
    "error_matrix_analysis",
    "format_density",
    "format_readings",
    "is_trace_normalized",
    "matrix_rank",
    "matrix_to_params",
    "maximally_mixed_params",
    "minimum_readout_count",
    "normal_system",
    "observable_positions",
    "params_to_matrix",
    "parse_density",
    "parse_readings",
    "psd_project",
    "rank_sets_by_conditioning",
    "read_density",
    "read_readings",
    "readout_label",
    "readout_rows",
    "readout_spin",
    "reconstruct",
    "relative_error",
    "rotation_matrix",
    "set_report",
    "simulate_readings",
    "spectral_norm",
    "sym_eigen",
    "write_density",
    "write_readings",
]
