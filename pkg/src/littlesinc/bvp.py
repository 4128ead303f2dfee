"""Linear two-point boundary-value problems by LSF collocation.

Only homogeneous Dirichlet data ``u(a) = u(b) = 0`` is supported: every LSF
vanishes at the ends of its interval, so the boundary conditions hold by
construction and no boundary rows are needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .linalg import solve_linear
from .lsf import Grid, Interpolant, interpolate, lsf_d1_matrix, lsf_d2_matrix, make_grid

GAUSS_POINTS = 200


def _const(c):
    return lambda x: c * np.ones_like(np.asarray(x, dtype=float))


@dataclass(frozen=True)
class BVPProblem:
    """``p2(x) u'' + p1(x) u' + p0(x) u = g(x)`` on ``(a, b)``, ``u(a) = u(b) = 0``."""

    p2: Callable
    p1: Callable
    p0: Callable
    g: Callable
    a: float
    b: float

    def __post_init__(self):
        if not self.a < self.b:
            raise DomainError(f"need a < b, got ({self.a}, {self.b})")


@dataclass(frozen=True)
class BVPSolution:
    grid: Grid
    u: np.ndarray
    residual: float

    @property
    def as_interpolant(self) -> Interpolant:
        return interpolate(self.grid, self.u)

    def __call__(self, x):
        return self.as_interpolant(x)


def _eval(fn, x):
    return np.asarray(fn(x), dtype=float) * np.ones_like(x)


def solve_linear_bvp(prob: BVPProblem, N: int) -> BVPSolution:
    grid = make_grid(N, prob.a, prob.b)
    x = grid.nodes
    p2 = _eval(prob.p2, x)
    if np.any(p2 == 0):
        raise DomainError(f"leading coefficient vanishes at node x = {x[p2 == 0][0]:.6g}")
    p1, p0, rhs = _eval(prob.p1, x), _eval(prob.p0, x), _eval(prob.g, x)

    A = (
        p2[:, None] * lsf_d2_matrix(grid).operator
        + p1[:, None] * lsf_d1_matrix(grid).operator
        + np.diag(p0)
    )
    u = solve_linear(A, rhs)
    res = np.max(np.abs(A @ u - rhs)) / max(np.max(np.abs(A)) * np.max(np.abs(u)) + np.max(np.abs(rhs)), 1e-300)
    u.setflags(write=False)
    return BVPSolution(grid, u, float(res))


def _log10_abs(value: float) -> float:
    return -math.inf if value == 0 else math.log10(abs(value))


def global_error(sol: BVPSolution, u_exact: Callable) -> float:
    """log10 | int u_exact^2 - h sum u_k^2 | over the interval."""
    a, b = sol.grid.interval
    t, w = np.polynomial.legendre.leggauss(GAUSS_POINTS)
    xq = 0.5 * (b - a) * t + 0.5 * (a + b)
    integral = 0.5 * (b - a) * np.sum(w * _eval(u_exact, xq) ** 2)
    return _log10_abs(integral - sol.grid.spacing * np.sum(sol.u**2))


def local_error(sol: BVPSolution, u_exact: Callable, x0: float) -> float:
    a, b = sol.grid.interval
    if not a < x0 < b:
        raise DomainError(f"x0 = {x0} outside ({a}, {b})")
    return _log10_abs(float(u_exact(x0)) - float(sol(x0)))


def lybeck_problem() -> tuple[BVPProblem, Callable]:
    """``-u'' + u' + u = (4/25)^2 (x^4 - 2x^3 - 29x^2 + 62x + 38)`` on ``(-1, 4)``.

    Returns the problem and its exact solution ``(4/25)^2 (x+1)^2 (x-4)^2``.
    """
    c = (4.0 / 25.0) ** 2

    def g(x):
        return c * (x**4 - 2 * x**3 - 29 * x**2 + 62 * x + 38)

    def exact(x):
        return c * (x + 1) ** 2 * (x - 4) ** 2

    return BVPProblem(_const(-1.0), _const(1.0), _const(1.0), g, -1.0, 4.0), exact
