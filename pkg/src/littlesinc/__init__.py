"""Little sinc functions: collocation on finite intervals with a trace-optimized box size."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CapabilityError,
    ConvergenceError,
    DomainError,
    FlatTraceError,
    LSFError,
    SingularMatrixError,
)
from .lsf import (  # noqa: E402
    DiffMatrix,
    Grid,
    Interpolant,
    conformal_sinc_interpolate,
    eval_interpolant,
    interpolate,
    lsf_basis,
    lsf_d1_matrix,
    lsf_d2_matrix,
    lsf_eval,
    make_grid,
    sinc_diff_coeff,
    sinc_eval,
)
from .potentials import PhysicalParams, Potential, taylor_substitute  # noqa: E402
from .schrodinger import (  # noqa: E402
    EigenResult,
    PMSResult,
    hamiltonian_matrix,
    pms_optimize,
    pms_spectrum,
    spectrum,
    trace_of_H,
    wavefunction,
)
