"""Sinc and little-sinc (LSF) cardinal bases on uniform grids.

The little sinc functions live on ``(-L, L)`` and are built from the first
``N`` particle-in-a-box modes; there are ``N - 1`` of them, one per interior
node ``k * h`` with ``h = 2L/N``.  Physical intervals ``(a, b)`` are handled by
an affine change of variable carried on :class:`Grid`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError

# below this |sin| (resp. |cos|) the closed-form ratios switch to their limits
_SINGULAR_GUARD = 1e-8


def _check_h(h):
    if not (math.isfinite(h) and h > 0):
        raise DomainError(f"spacing h must be positive and finite, got {h!r}")


def sinc_eval(k: int, h: float, x):
    """Whittaker cardinal function ``S_k(h, x)`` centred on ``k*h``."""
    _check_h(h)
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("x must be finite")
    z = (x - k * h) / h
    # np.sinc(z) = sin(pi z)/(pi z) with the z = 0 limit handled exactly
    out = np.sinc(z)
    return float(out) if out.ndim == 0 else out


def sinc_diff_coeff(order: int, l: int, k: int, h: float) -> float:
    """Derivative of order ``order`` of ``S_k(h, x)`` evaluated at node ``x_l = l*h``.

    Parameters
    ----------
    order : int
        Derivative order, ``>= 1``.
    l, k : int
        Evaluation node and basis index.
    h : float
        Grid spacing.
    """
    if not isinstance(order, (int, np.integer)) or order < 1:
        raise DomainError(f"derivative order must be a positive integer, got {order!r}")
    _check_h(h)
    d = l - k
    if order == 1:
        return 0.0 if d == 0 else (-1.0) ** d / (h * d)
    if order == 2:
        if d == 0:
            return -math.pi**2 / (3.0 * h * h)
        return -2.0 * (-1.0) ** d / (h * h * d * d)

    r, odd = divmod(order, 2)
    if d == 0:
        return 0.0 if odd else (math.pi / h) ** order * (-1.0) ** r / (order + 1)
    # Leibniz on sin(pi z) * (pi z)^-1; only odd derivatives of the sine survive at
    # integer z.  The summation index i is distinct from the basis index k.
    fact = math.factorial(order)
    if odd:
        terms = ((-1.0) ** i * fact / math.factorial(2 * i + 1) * (math.pi * d) ** (2 * i)
                 for i in range(r + 1))
    else:
        terms = ((-1.0) ** (i + 1) * fact / math.factorial(2 * i + 1) * (math.pi * d) ** (2 * i)
                 for i in range(r))
    return (-1.0) ** d / (h * d) ** order * math.fsum(terms)


@dataclass(frozen=True)
class Grid:
    """Uniform LSF collocation mesh.

    The canonical frame is ``(-L, L)`` with nodes ``k*h``; a physical point
    ``x`` maps to the canonical ``(x - center) * scale``.
    """

    N: int
    L: float
    center: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        if isinstance(self.N, bool) or not isinstance(self.N, (int, np.integer)):
            raise DomainError(f"N must be an integer, got {self.N!r}")
        if self.N < 4 or self.N % 2:
            raise DomainError(f"N must be even and >= 4, got {self.N}")
        if not (math.isfinite(self.L) and self.L > 0):
            raise DomainError(f"half-length L must be positive, got {self.L!r}")
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise DomainError(f"scale must be positive, got {self.scale!r}")
        if not math.isfinite(self.center):
            raise DomainError("center must be finite")
        object.__setattr__(self, "N", int(self.N))

    @property
    def h(self) -> float:
        return 2.0 * self.L / self.N

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.N // 2 + 1, self.N // 2)

    @property
    def canonical_nodes(self) -> np.ndarray:
        return self.indices * self.h

    @property
    def nodes(self) -> np.ndarray:
        return self.center + self.canonical_nodes / self.scale

    @property
    def interval(self) -> tuple[float, float]:
        half = self.L / self.scale
        return self.center - half, self.center + half

    @property
    def spacing(self) -> float:
        """Node spacing in the physical frame."""
        return self.h / self.scale

    def to_canonical(self, x):
        return (np.asarray(x, dtype=float) - self.center) * self.scale


def make_grid(N: int, a: float, b: float, canonical_L: float | None = None) -> Grid:
    """Grid on the physical interval ``(a, b)``.

    By default the canonical half-length is ``(b - a)/2`` so no rescaling
    happens; pass ``canonical_L`` to work in a different canonical frame.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"need finite a < b, got ({a!r}, {b!r})")
    half = 0.5 * (b - a)
    L = half if canonical_L is None else float(canonical_L)
    return Grid(N=N, L=L, center=0.5 * (a + b), scale=L / half)


def _sin_ratio(u, m):
    # sin(m u) / sin(u), removable singularities at u = j*pi
    den = np.sin(u)
    near = np.abs(den) < _SINGULAR_GUARD
    with np.errstate(divide="ignore", invalid="ignore"):
        limit = m * np.cos(m * u) / np.cos(u)
    return np.where(near, limit, np.sin(m * u) / np.where(near, 1.0, den))


def _cos_ratio(v, m):
    # cos(m v) / cos(v), removable singularities at v = pi/2 + j*pi (m odd)
    den = np.cos(v)
    near = np.abs(den) < _SINGULAR_GUARD
    with np.errstate(divide="ignore", invalid="ignore"):
        limit = m * np.sin(m * v) / np.sin(v)
    return np.where(near, limit, np.cos(m * v) / np.where(near, 1.0, den))


def _lsf_canonical(k, N, L, y):
    m = 2 * N + 1
    h = 2.0 * L / N
    u = math.pi * (y - k * h) / (4.0 * L)
    v = math.pi * (y + k * h) / (4.0 * L)
    return (_sin_ratio(u, m) - _cos_ratio(v, m)) / (2.0 * N)


def lsf_eval(k: int, grid: Grid, x):
    """Little sinc function ``s_k`` of ``grid`` at physical point(s) ``x``."""
    half = grid.N // 2
    if not -half < k < half:
        raise DomainError(f"LSF index {k} outside [{-half + 1}, {half - 1}]")
    y = grid.to_canonical(x)
    out = _lsf_canonical(k, grid.N, grid.L, y)
    return float(out) if out.ndim == 0 else out


def lsf_basis(grid: Grid, x) -> np.ndarray:
    """Matrix ``B[i, k] = s_k(x_i)`` for all basis functions at points ``x``."""
    y = np.atleast_1d(grid.to_canonical(x))
    ks = grid.indices
    return _lsf_canonical(ks[None, :], grid.N, grid.L, y[:, None])


@dataclass(frozen=True)
class DiffMatrix:
    """Derivative values ``entries[k, j] = s_k^{(order)}(x_j)``.

    Because rows index the basis function, the matrix acting on a vector of
    node values is the transpose, exposed as :attr:`operator`.
    """

    order: int
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def operator(self) -> np.ndarray:
        return self.entries.T


def _frozen(a):
    a.setflags(write=False)
    return a


def lsf_d1_matrix(grid: Grid) -> DiffMatrix:
    N, L = grid.N, grid.L
    ks = grid.indices
    K, J = np.meshgrid(ks, ks, indexing="ij")
    sign = np.where((K - J) % 2 == 0, 1.0, -1.0)
    off = K != J
    # off-diagonal cot argument is never zero; fill the diagonal with a dummy
    diff = np.where(off, J - K, 1)
    c = sign * math.pi / (4.0 * L) * (
        1.0 / np.tan(diff * math.pi / (2 * N)) + np.tan((J + K) * math.pi / (2 * N))
    )
    c = np.where(off, c, math.pi / (4.0 * L) * np.tan(J * math.pi / N))
    return DiffMatrix(1, _frozen(c * grid.scale))


def lsf_d2_matrix(grid: Grid) -> DiffMatrix:
    N, L = grid.N, grid.L
    ks = grid.indices
    K, J = np.meshgrid(ks, ks, indexing="ij")
    sign = np.where((K - J) % 2 == 0, 1.0, -1.0)
    off = K != J
    diff = np.where(off, J - K, 1)
    num = np.cos(J * math.pi / N) * np.cos(K * math.pi / N)
    den = np.cos((J + K) * math.pi / (2 * N)) ** 2 * np.sin(diff * math.pi / (2 * N)) ** 2
    c = -sign * math.pi**2 / (8.0 * L * L) * num / den
    diag = -math.pi**2 / (24.0 * L * L) * (1 + 2 * N * N - 3.0 / np.cos(ks * math.pi / N) ** 2)
    c = np.where(off, c, np.diag(diag))
    # every factor above is symmetric in (k, j) but mirror anyway
    c = np.triu(c) + np.triu(c, 1).T
    return DiffMatrix(2, _frozen(c * grid.scale**2))


class InterpolantKind(enum.Enum):
    LSF = "lsf"
    MAPPED_SINC = "mapped_sinc"


@dataclass(frozen=True)
class Interpolant:
    samples: np.ndarray
    kind: InterpolantKind = InterpolantKind.LSF
    grid: Grid | None = None
    # mapped-sinc only
    mapped_nodes: np.ndarray | None = None
    h: float | None = None
    interval: tuple[float, float] | None = field(default=None)

    def __call__(self, x):
        return eval_interpolant(self, x)


def interpolate(grid: Grid, samples) -> Interpolant:
    s = np.array(samples, dtype=float)
    if s.shape != (grid.N - 1,):
        raise DomainError(f"expected {grid.N - 1} samples, got shape {s.shape}")
    return Interpolant(samples=_frozen(s), grid=grid)


def interpolate_function(grid: Grid, f: Callable) -> Interpolant:
    return interpolate(grid, [f(x) for x in grid.nodes])


def _phi(x, a, b):
    return np.log((x - a) / (b - x))


def eval_interpolant(interp: Interpolant, x):
    """Evaluate the cardinal expansion at ``x`` (scalar or array)."""
    xs = np.asarray(x, dtype=float)
    flat = np.atleast_1d(xs)
    if interp.kind is InterpolantKind.LSF:
        out = lsf_basis(interp.grid, flat) @ interp.samples
    else:
        a, b = interp.interval
        if np.any(flat <= a) or np.any(flat >= b):
            raise DomainError(f"mapped sinc interpolant is defined only inside ({a}, {b})")
        h = interp.h
        ks = np.arange(len(interp.samples)) - (len(interp.samples) - 1) // 2
        z = _phi(flat, a, b)[:, None] / h - ks[None, :]
        out = np.sinc(z) @ interp.samples
    return float(out[0]) if xs.ndim == 0 else out.reshape(xs.shape)


def conformal_sinc_interpolate(f: Callable, a: float, b: float, h: float, N: int) -> Interpolant:
    """Sinc interpolant on ``(a, b)`` through the map ``phi(x) = log((x-a)/(b-x))``.

    Uses the ``2N + 1`` mapped nodes ``(a + b e^{kh}) / (1 + e^{kh})`` for
    ``k = -N..N``.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"need finite a < b, got ({a!r}, {b!r})")
    _check_h(h)
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    ks = np.arange(-N, N + 1)
    e = np.exp(ks * h)
    nodes = (a + b * e) / (1.0 + e)
    # e^{kh} overflows for huge k*h; the node then sits at b
    nodes = np.where(np.isfinite(e), nodes, b)
    samples = np.array([f(x) for x in nodes], dtype=float)
    return Interpolant(
        samples=_frozen(samples),
        kind=InterpolantKind.MAPPED_SINC,
        mapped_nodes=_frozen(nodes),
        h=float(h),
        interval=(float(a), float(b)),
    )
