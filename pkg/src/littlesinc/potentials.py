"""Scalar potentials, Taylor substitutes and the built-in benchmark models."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np

from .errors import CapabilityError, DomainError


@dataclass(frozen=True)
class PhysicalParams:
    hbar: float = 1.0
    mass: float = 0.5

    def __post_init__(self):
        if not (self.hbar > 0 and self.mass > 0):
            raise DomainError(f"hbar and mass must be positive, got {self.hbar}, {self.mass}")

    @property
    def kinetic_factor(self) -> float:
        """hbar^2 / (2m)."""
        return self.hbar**2 / (2.0 * self.mass)


@dataclass(frozen=True)
class Potential:
    """A potential ``V(r)`` sampled at ``r = y + shift`` for grid coordinate ``y``.

    ``derivative(n, r)`` returns the n-th derivative in closed form and is
    only needed by :func:`taylor_substitute`.  ``angular_momentum > 0`` adds
    the centrifugal barrier at the same shifted coordinate.
    """

    func: Callable
    shift: float = 0.0
    angular_momentum: int = 0
    derivative: Callable | None = None
    label: str = ""

    def __post_init__(self):
        if self.angular_momentum < 0 or int(self.angular_momentum) != self.angular_momentum:
            raise DomainError(f"angular momentum must be a nonnegative integer, got {self.angular_momentum}")

    def __call__(self, r):
        return self.func(np.asarray(r, dtype=float))

    def with_shift(self, shift: float) -> Potential:
        return replace(self, shift=float(shift))

    def with_angular_momentum(self, ell: int) -> Potential:
        return replace(self, angular_momentum=int(ell))

    def on_grid(self, y, params: PhysicalParams) -> np.ndarray:
        """Potential plus centrifugal term at grid coordinates ``y``."""
        r = np.asarray(y, dtype=float) + self.shift
        v = np.array(self(r), dtype=float) * np.ones_like(r)
        if self.angular_momentum:
            if np.any(r <= 0):
                bad = r[r <= 0][0]
                raise DomainError(f"centrifugal term needs r > 0, got node at r = {bad:.6g}")
            ell = self.angular_momentum
            v = v + params.hbar**2 * ell * (ell + 1) / (2.0 * params.mass * r * r)
        bad = ~np.isfinite(v)
        if np.any(bad):
            raise DomainError(f"potential {self.label or ''} is not finite at node r = {r[bad][0]:.6g}")
        return v


def polynomial(coeffs: Sequence[float], label: str = "") -> Potential:
    """``sum_n coeffs[n] * r**n``."""
    c = np.array(coeffs, dtype=float)

    def func(r):
        return np.polynomial.polynomial.polyval(r, c)

    def derivative(n, r):
        return np.polynomial.polynomial.polyval(r, np.polynomial.polynomial.polyder(c, n)) if n < len(c) else 0.0 * np.asarray(r)

    return Potential(func, derivative=derivative, label=label or f"poly{list(coeffs)}")


def exponentials(terms: Sequence[tuple[float, float, float]], label: str = "") -> Potential:
    """``sum amp * exp(rate * (r - center))`` over ``(amp, rate, center)`` terms."""
    terms = [tuple(map(float, t)) for t in terms]

    def func(r):
        return sum(a * np.exp(k * (r - c)) for a, k, c in terms)

    def derivative(n, r):
        return sum(a * k**n * np.exp(k * (r - c)) for a, k, c in terms)

    return Potential(func, derivative=derivative, label=label or "exp")


def add(*parts: Potential, label: str = "") -> Potential:
    """Pointwise sum; derivatives are summed when every part provides them."""

    def func(r):
        return sum(p(r) for p in parts)

    derivative = None
    if all(p.derivative is not None for p in parts):

        def derivative(n, r):
            return sum(p.derivative(n, r) for p in parts)

    return Potential(func, derivative=derivative, label=label or "+".join(p.label for p in parts))


def parse_inline(spec: str) -> Potential:
    """Build a potential from ``"poly:c0,c1,...;exp:amp,rate,center;..."``."""
    parts = []
    for chunk in filter(None, (c.strip() for c in spec.split(";"))):
        kind, _, body = chunk.partition(":")
        try:
            nums = [float(v) for v in body.split(",") if v.strip()]
        except ValueError as exc:
            raise DomainError(f"malformed number in potential term {chunk!r}") from exc
        if kind == "poly" and nums:
            parts.append(polynomial(nums))
        elif kind == "exp" and len(nums) == 3:
            parts.append(exponentials([tuple(nums)]))
        else:
            raise DomainError(f"cannot parse potential term {chunk!r}")
    if not parts:
        raise DomainError("empty potential specification")
    return parts[0] if len(parts) == 1 else add(*parts, label=spec)


def taylor_substitute(V: Potential, center: float, order: int) -> Potential:
    """Truncated Taylor series of ``V`` about ``center``, used as a confining stand-in."""
    if V.derivative is None:
        raise CapabilityError(f"potential {V.label!r} has no closed-form derivatives")
    if order < 0:
        raise DomainError("Taylor order must be nonnegative")
    coeffs = [float(V.derivative(n, center)) / math.factorial(n) for n in range(order + 1)]
    c = np.array(coeffs)

    def func(r):
        return np.polynomial.polynomial.polyval(np.asarray(r) - center, c)

    def derivative(n, r):
        if n > order:
            return 0.0 * np.asarray(r)
        return np.polynomial.polynomial.polyval(
            np.asarray(r) - center, np.polynomial.polynomial.polyder(c, n)
        )

    return Potential(
        func,
        shift=V.shift,
        angular_momentum=V.angular_momentum,
        derivative=derivative,
        label=f"taylor[{V.label}, r0={center}, order={order}]",
    )


def morse_radial(D: float, r_e: float, a: float) -> Potential:
    """``D [exp(-2a(r - r_e)) - 2 exp(-a(r - r_e))]``; minimum ``-D`` at ``r_e``."""
    if D <= 0 or a <= 0:
        raise DomainError("Morse depth and range parameter must be positive")
    p = exponentials([(D, -2.0 * a, r_e), (-2.0 * D, -a, r_e)])
    return replace(p, label=f"morse_radial(D={D}, r_e={r_e}, a={a})")


def morse_1d(D: float, alpha: float) -> Potential:
    """``D [exp(-2 alpha x) - 2 exp(-alpha x) + 1]``."""
    if D <= 0 or alpha <= 0:
        raise DomainError("Morse depth and range parameter must be positive")
    p = add(exponentials([(D, -2.0 * alpha, 0.0), (-2.0 * D, -alpha, 0.0)]), polynomial([D]))
    return replace(p, label=f"morse_1d(D={D}, alpha={alpha})")


def morse_1d_exact_energies(D: float, alpha: float, m: float, hbar: float = 1.0, n_max: int | None = None) -> list[float]:
    """Bound-state energies of the 1D Morse well, ascending.

    The list stops at ``n_max`` or at the last level for which the closed form
    is still increasing, whichever comes first.
    """
    omega = alpha * math.sqrt(2.0 * D / m)
    hw = hbar * omega
    out = []
    n = 0
    while n_max is None or n <= n_max:
        e = hw * (n + 0.5 - hw / (4.0 * D) * (n + 0.5) ** 2)
        if out and e <= out[-1]:
            break
        out.append(e)
        n += 1
    return out


# Benchmark models.  Masses are in the units of each model (hbar = 1).

MORSE_RADIAL = dict(D=0.10262, r_e=2.0, a=0.72, mass=918.0, shift=3.0, taylor_center=10.0, taylor_order=20)
MORSE_1D = dict(D=0.0224, alpha=0.9374, mass=119406.0, shift=0.0)


def harmonic() -> Potential:
    return polynomial([0.0, 0.0, 1.0], label="x^2")


def anharmonic() -> Potential:
    return polynomial([0.0, 0.0, 1.0, 0.0, 1.0], label="x^2+x^4")


def quartic() -> Potential:
    return polynomial([0.0, 0.0, 0.0, 0.0, 0.25], label="x^4/4")
