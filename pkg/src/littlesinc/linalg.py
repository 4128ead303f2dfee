"""Small dense numerical kernel.

Symmetric eigendecomposition by cyclic Jacobi rotations, Gaussian elimination
with partial pivoting, and a scan-then-golden-section scalar minimizer.  All
routines operate on plain numpy arrays and never mutate their inputs.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError, SingularMatrixError

MAX_SWEEPS = 100
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class SymMatrix:
    """Dense real symmetric matrix, exactly symmetric by construction."""

    entries: np.ndarray

    def __init__(self, entries):
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DomainError(f"symmetric matrix must be square, got shape {a.shape}")
        finite = a.size and np.all(np.isfinite(a))
        asym = np.max(np.abs(a - a.T)) if finite else 0.0
        scale = np.max(np.abs(a)) if finite else 0.0
        if asym > 1e-12 * max(scale, np.finfo(float).tiny):
            warnings.warn(
                f"symmetrizing matrix with relative asymmetry {asym / scale:.3g}",
                RuntimeWarning,
                stacklevel=2,
            )
        a = 0.5 * (a + a.T)
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class EigenDecomposition:
    values: np.ndarray
    vectors: np.ndarray  # columns


def _off_norm(A: np.ndarray) -> float:
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def _round_robin(m: int) -> list[tuple[np.ndarray, np.ndarray]]:
    # Tournament schedule: every index pair meets exactly once per sweep, and the
    # pairs inside one round are disjoint so their rotations commute.
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        p = np.array([players[i] for i in range(m // 2)])
        q = np.array([players[m - 1 - i] for i in range(m // 2)])
        lo, hi = np.minimum(p, q), np.maximum(p, q)
        rounds.append((lo, hi))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def sym_eigen(a: SymMatrix | np.ndarray) -> EigenDecomposition:
    """Full eigendecomposition of a real symmetric matrix.

    Parameters
    ----------
    a : SymMatrix or array_like
        Symmetric matrix.  Plain arrays are wrapped in :class:`SymMatrix`.

    Returns
    -------
    EigenDecomposition
        Eigenvalues in ascending order and the matching orthonormal
        eigenvectors stored as columns.

    Raises
    ------
    DomainError
        If any entry is not finite.
    ConvergenceError
        If the off-diagonal norm is not reduced to roundoff level within
        ``MAX_SWEEPS`` sweeps.
    """
    if not isinstance(a, SymMatrix):
        a = SymMatrix(a)
    A = np.array(a.entries, dtype=float)
    if not np.all(np.isfinite(A)):
        raise DomainError("matrix has non-finite entries")
    n = A.shape[0]
    V = np.eye(n)
    if n <= 1:
        return EigenDecomposition(np.diag(A).copy(), V)

    m = n + (n % 2)
    schedule = []
    for p, q in _round_robin(m):
        keep = q < n  # drop pairs with the padding index
        schedule.append((p[keep], q[keep]))

    # entries below eps*||A|| cannot move any eigenvalue by more than roundoff
    tiny = _EPS * np.linalg.norm(A)
    for _ in range(MAX_SWEEPS):
        rotated = False
        for p, q in schedule:
            apq = A[p, q]
            app = A[p, p]
            aqq = A[q, q]
            thresh = np.maximum(_EPS * np.sqrt(np.abs(app * aqq)), tiny)
            act = np.abs(apq) > thresh
            if not np.any(act):
                continue
            rotated = True
            p, q, apq, app, aqq = p[act], q[act], apq[act], app[act], aqq[act]
            theta = (aqq - app) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            rp = A[p, :].copy()
            rq = A[q, :]
            A[p, :] = c[:, None] * rp - s[:, None] * rq
            A[q, :] = s[:, None] * rp + c[:, None] * rq
            cp = A[:, p].copy()
            cq = A[:, q]
            A[:, p] = cp * c - cq * s
            A[:, q] = cp * s + cq * c
            A[p, q] = 0.0
            A[q, p] = 0.0

            vp = V[:, p].copy()
            vq = V[:, q]
            V[:, p] = vp * c - vq * s
            V[:, q] = vp * s + vq * c
        if not rotated:
            break
    else:
        off = _off_norm(A)
        raise ConvergenceError(
            f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps "
            f"(off-diagonal norm {off:.3e})"
        )

    values = np.diag(A).copy()
    order = np.argsort(values, kind="stable")
    return EigenDecomposition(values[order], V[:, order])


def solve_linear(a, b) -> np.ndarray:
    """Solve ``a @ x = b`` by Gaussian elimination with partial pivoting."""
    A = np.array(a, dtype=float)
    x = np.array(b, dtype=float)
    n = A.shape[0]
    if A.ndim != 2 or A.shape[1] != n or x.shape[:1] != (n,):
        raise DomainError(f"incompatible shapes {A.shape} and {x.shape}")
    if not (np.all(np.isfinite(A)) and np.all(np.isfinite(x))):
        raise DomainError("linear system has non-finite entries")

    scale = np.max(np.abs(A)) if n else 0.0
    for col in range(n):
        piv = col + int(np.argmax(np.abs(A[col:, col])))
        if abs(A[piv, col]) <= n * _EPS * scale or scale == 0.0:
            raise SingularMatrixError(
                f"matrix is singular to working precision at pivot {col}", pivot_index=col
            )
        if piv != col:
            A[[col, piv]] = A[[piv, col]]
            x[[col, piv]] = x[[piv, col]]
        f = A[col + 1 :, col] / A[col, col]
        A[col + 1 :, col:] -= np.outer(f, A[col, col:])
        x[col + 1 :] -= np.multiply.outer(f, x[col])
    for row in range(n - 1, -1, -1):
        x[row] = (x[row] - A[row, row + 1 :] @ x[row + 1 :]) / A[row, row]
    return x


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def minimize_scalar(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-8,
    n_scan: int = 64,
    history: list | None = None,
) -> tuple[float, float]:
    """Minimize ``f`` on ``[lo, hi]``.

    A uniform coarse scan of ``n_scan`` points picks the lowest sample; golden
    section then refines inside the two neighbouring scan cells.  Scan pairs
    ``(x, f(x))`` are appended to ``history`` when given.  ``f`` is never
    evaluated outside ``[lo, hi]``.
    """
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    if tol <= 0:
        raise DomainError("tol must be positive")

    def probe(x):
        y = float(f(x))
        if not math.isfinite(y):
            err = DomainError(f"objective is not finite at x = {x!r}")
            err.point = x
            raise err
        return y

    xs = np.linspace(lo, hi, n_scan)
    ys = [probe(float(x)) for x in xs]
    if history is not None:
        history.extend(zip(map(float, xs), ys))
    i = int(np.argmin(ys))
    a = float(xs[max(i - 1, 0)])
    b = float(xs[min(i + 1, n_scan - 1)])

    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = probe(c), probe(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = probe(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = probe(d)
    x_best, f_best = (c, fc) if fc < fd else (d, fd)
    # the scan itself may have hit a bracket end exactly (boundary minimum)
    if ys[i] < f_best:
        x_best, f_best = float(xs[i]), ys[i]
    return x_best, f_best
