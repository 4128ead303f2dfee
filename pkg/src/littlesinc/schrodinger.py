"""LSF Hamiltonian, trace-minimizing choice of the box size, and spectra.

The grid used here is always the canonical one, ``(-L, L)`` centred on zero;
the potential's ``shift`` moves it to physical coordinates ``r = y + shift``.
Wavefunctions are evaluated in those physical coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, FlatTraceError
from .linalg import SymMatrix, minimize_scalar, sym_eigen
from .lsf import Grid, lsf_basis, lsf_d2_matrix
from .potentials import PhysicalParams, Potential

DEFAULT_L_BOUNDS = (0.1, 50.0)
PMS_TOL = 1e-8


def hamiltonian_matrix(V: Potential, grid: Grid, params: PhysicalParams) -> SymMatrix:
    """``H = -(hbar^2/2m) c2 + diag(V(node + shift))`` on the ``N - 1`` LSF."""
    kinetic = -params.kinetic_factor * lsf_d2_matrix(grid).entries
    v = V.on_grid(grid.canonical_nodes, params)
    return SymMatrix(kinetic + np.diag(v))


def _kinetic_diagonal(N: int, L: float) -> np.ndarray:
    j = np.arange(-N // 2 + 1, N // 2)
    return math.pi**2 / (24.0 * L * L) * (1 + 2 * N * N - 3.0 / np.cos(j * math.pi / N) ** 2)


def trace_of_H(V: Potential, N: int, L: float, params: PhysicalParams, modified: bool = False) -> float:
    """Trace of the Hamiltonian without assembling it.

    With ``modified`` the potential sum is down-weighted by ``(N - 2)/(2N)``,
    the empirical variant that tends to favour the ground state.
    """
    grid = Grid(N, L)
    v = V.on_grid(grid.canonical_nodes, params)
    kin = params.kinetic_factor * np.sum(_kinetic_diagonal(N, L))
    pot = np.sum(v)
    if modified:
        # only the bare potential is reweighted, not the centrifugal part
        bare = np.asarray(V(grid.canonical_nodes + V.shift), dtype=float) * np.ones(N - 1)
        pot -= (N - 2) / (2.0 * N) * np.sum(bare)
    return float(kin + pot)


@dataclass(frozen=True)
class PMSResult:
    N: int
    L_opt: float
    trace_at_opt: float
    constraint_active: bool
    stationarity: float
    scan: list = field(default_factory=list, repr=False)

    @property
    def h_opt(self) -> float:
        return 2.0 * self.L_opt / self.N


def pms_optimize(
    V: Potential,
    N: int,
    params: PhysicalParams,
    L_bounds: tuple[float, float] = DEFAULT_L_BOUNDS,
    cap: float | None = None,
    use_modified: bool = False,
) -> PMSResult:
    """Choose the half-length ``L`` that minimizes the Hamiltonian trace.

    Parameters
    ----------
    V : Potential
        Potential entering the trace; for potentials with a continuum pass a
        confining substitute (see :func:`~littlesinc.potentials.taylor_substitute`).
    N : int
        Grid parameter (``N - 1`` basis functions).
    params : PhysicalParams
    L_bounds : (float, float)
        Search window for ``L``.
    cap : float, optional
        Upper limit on ``L``; for radial problems this is the shift, which
        keeps every node at ``r > 0``.
    use_modified : bool
        Minimize the modified trace instead.

    Returns
    -------
    PMSResult

    Raises
    ------
    FlatTraceError
        If the minimum sits on the edge of the window and no cap explains it.
    """
    lo, hi = map(float, L_bounds)
    if not 0 < lo < hi:
        raise DomainError(f"invalid L window [{lo}, {hi}]")
    if cap is not None:
        if cap <= lo:
            raise DomainError(f"cap {cap} lies below the L window [{lo}, {hi}]")
        hi = min(hi, float(cap))

    def T(L):
        return trace_of_H(V, N, L, params, modified=use_modified)

    scan: list = []
    L_opt, t_opt = minimize_scalar(T, lo, hi, tol=PMS_TOL, history=scan)

    edge = 4 * PMS_TOL * max(1.0, hi)
    at_cap = cap is not None and hi == float(cap) and hi - L_opt <= edge
    if not at_cap and (hi - L_opt <= edge or L_opt - lo <= edge):
        raise FlatTraceError(
            f"trace has no interior minimum for L in [{lo}, {hi}] (best L = {L_opt:.6g}); "
            "supply a confining substitute potential or a cap"
        )

    step = 1e-5 * L_opt
    a, b = max(L_opt - step, lo), min(L_opt + step, hi)
    stationarity = abs(T(b) - T(a)) / (b - a)
    return PMSResult(N, L_opt, t_opt, bool(at_cap), stationarity, scan)


@dataclass(frozen=True)
class EigenResult:
    grid: Grid
    energies: np.ndarray
    coefficient_vectors: np.ndarray  # columns, unit norm
    params: PhysicalParams
    shift: float = 0.0

    def __len__(self):
        return len(self.energies)


def _fix_signs(vecs: np.ndarray) -> np.ndarray:
    idx = np.argmax(np.abs(vecs), axis=0)
    signs = np.sign(vecs[idx, np.arange(vecs.shape[1])])
    signs[signs == 0] = 1.0
    return vecs * signs


def spectrum(V: Potential, N: int, params: PhysicalParams, L: float) -> EigenResult:
    """Diagonalize the Hamiltonian on ``Grid(N, L)``.

    Each eigenvector is normalized with its largest-magnitude coefficient
    positive.
    """
    grid = Grid(N, L)
    dec = sym_eigen(hamiltonian_matrix(V, grid, params))
    return EigenResult(grid, dec.values, _fix_signs(dec.vectors), params, float(V.shift))


def pms_spectrum(
    V: Potential,
    N: int,
    params: PhysicalParams,
    pms_potential: Potential | None = None,
    L_bounds: tuple[float, float] = DEFAULT_L_BOUNDS,
    cap: float | None = None,
    use_modified: bool = False,
) -> tuple[PMSResult, EigenResult]:
    """Optimize ``L`` (optionally on a substitute potential) then diagonalize ``V``."""
    pms = pms_optimize(pms_potential or V, N, params, L_bounds, cap, use_modified)
    return pms, spectrum(V, N, params, pms.L_opt)


def wavefunction(result: EigenResult, n: int, x):
    """``psi_n(x) = h^{-1/2} sum_k u_k s_k(x - shift)``, zero outside the box."""
    if not 0 <= n < len(result.energies):
        raise DomainError(f"state index {n} out of range [0, {len(result.energies) - 1}]")
    g = result.grid
    xs = np.asarray(x, dtype=float)
    y = np.atleast_1d(xs) - result.shift
    inside = np.abs(y) < g.L
    psi = np.zeros_like(y)
    if np.any(inside):
        psi[inside] = lsf_basis(g, y[inside]) @ result.coefficient_vectors[:, n] / math.sqrt(g.h)
    return float(psi[0]) if xs.ndim == 0 else psi.reshape(xs.shape)


def eta_error(result_small: EigenResult, result_big: EigenResult, n: int, xs) -> np.ndarray:
    """Pointwise ``|psi_small - psi_big|`` after aligning the overall sign."""
    xs = np.asarray(xs, dtype=float)
    a = wavefunction(result_small, n, xs)
    b = wavefunction(result_big, n, xs)
    if np.dot(a.ravel(), b.ravel()) < 0:
        a = -a
    return np.abs(a - b)


def global_error_sigma(small: EigenResult, reference: EigenResult) -> float:
    """Summed absolute error over every level of ``small``."""
    k = len(small.energies)
    return float(np.sum(np.abs(small.energies - reference.energies[:k])))
