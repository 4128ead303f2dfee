"""Columnar data behind the benchmark tables and error curves.

Every function returns ``(records, columns)`` ready for :func:`littlesinc.io.emit`.
"""

from __future__ import annotations

import math

import numpy as np

from . import bvp as _bvp
from .lsf import conformal_sinc_interpolate, interpolate_function, make_grid
from .potentials import (
    MORSE_1D,
    MORSE_RADIAL,
    PhysicalParams,
    anharmonic,
    morse_1d,
    morse_1d_exact_energies,
    morse_radial,
    quartic,
    taylor_substitute,
)
from .schrodinger import eta_error, global_error_sigma, pms_optimize, pms_spectrum, spectrum

HALF_MASS = PhysicalParams(hbar=1.0, mass=0.5)


def _log10_abs(x: float) -> float:
    return -math.inf if x == 0 else math.log10(abs(x))


def steng_cubic(x):
    return 2 * x**2 + x - 3 * x**3


def interior_points(a: float, b: float, n: int = 1001) -> np.ndarray:
    return np.linspace(a, b, n + 2)[1:-1]


def radial_morse_problem(ell: int = 0, shift: float | None = None):
    """Radial Morse potential, its Taylor substitute, parameters and the L cap."""
    p = MORSE_RADIAL
    shift = p["shift"] if shift is None else shift
    V = morse_radial(p["D"], p["r_e"], p["a"]).with_shift(shift).with_angular_momentum(ell)
    S = taylor_substitute(V, p["taylor_center"], p["taylor_order"])
    return V, S, PhysicalParams(1.0, p["mass"]), shift


def radial_morse_exact_s_wave(n_max: int) -> list[float]:
    # the full-line formula; the wall at r = 0 sits under a barrier of ~1 hartree
    p = MORSE_RADIAL
    return [e - p["D"] for e in morse_1d_exact_energies(p["D"], p["a"], p["mass"], 1.0, n_max)]


def table1(max_N: int = 40, ref_N: int = 80):
    """Morse errors for l = 0, 1, 2 and n = 0, 5.

    s-wave errors use the closed-form levels; l > 0 errors use an ``ref_N``
    calculation as reference.
    """
    Ns = [N for N in (20, 40) if N <= max_N]
    rows = []
    for ell in (0, 1, 2):
        V, S, params, cap = radial_morse_problem(ell)
        if ell == 0:
            ref = radial_morse_exact_s_wave(5)
        else:
            ref = pms_spectrum(V, ref_N, params, pms_potential=S, cap=cap)[1].energies
        runs = {N: pms_spectrum(V, N, params, pms_potential=S, cap=cap) for N in Ns}
        for n in (0, 5):
            for N in Ns:
                pms, res = runs[N]
                rows.append(dict(l=ell, n=n, N=N, epsilon=float(res.energies[n] - ref[n]), h_pms=pms.h_opt))
    return rows, ["l", "n", "N", "epsilon", "h_pms"]


def fig3(N: int = 22, sinc_N: int = 10, hs=(0.25, 0.5, 1.0)):
    x = interior_points(0.0, 1.0)
    exact = steng_cubic(x)
    lsf = interpolate_function(make_grid(N, 0.0, 1.0), steng_cubic)(x)
    cols = {"x": x, "delta_lsf": [_log10_abs(e) for e in lsf - exact]}
    for h in hs:
        approx = conformal_sinc_interpolate(steng_cubic, 0.0, 1.0, h, sinc_N)(x)
        cols[f"delta_sinc_h{h:g}"] = [_log10_abs(e) for e in approx - exact]
    names = list(cols)
    rows = [dict(zip(names, vals)) for vals in zip(*cols.values())]
    return rows, names


def fig4(max_N: int = 40):
    prob, exact = _bvp.lybeck_problem()
    rows = []
    for N in range(4, max_N + 1, 2):
        sol = _bvp.solve_linear_bvp(prob, N)
        rows.append(dict(N=N, xi_global=_bvp.global_error(sol, exact), xi_local=_bvp.local_error(sol, exact, 1.5)))
    return rows, ["N", "xi_global", "xi_local"]


def fig6(Ns=(10, 20, 30), Ls=None, ref_N: int = 60):
    V = anharmonic()
    Ls = np.linspace(1.0, 8.0, 71) if Ls is None else Ls
    e_ref = pms_spectrum(V, ref_N, HALF_MASS)[1].energies[0]
    rows = []
    for N in Ns:
        for L in Ls:
            e0 = spectrum(V, N, HALF_MASS, float(L)).energies[0]
            rows.append(dict(N=N, kind="scan", L=float(L), abs_error=abs(e0 - e_ref)))
        for kind, modified in (("pms", False), ("modified_pms", True)):
            L = pms_optimize(V, N, HALF_MASS, use_modified=modified).L_opt
            e0 = spectrum(V, N, HALF_MASS, L).energies[0]
            rows.append(dict(N=N, kind=kind, L=L, abs_error=abs(e0 - e_ref)))
    return rows, ["N", "kind", "L", "abs_error"]


def quartic_sigma_curve(N: int = 20, ref_N: int = 60, Ls=None):
    """sigma(L) against the ``ref_N`` levels, plus sigma at the trace optimum."""
    V = quartic()
    Ls = np.linspace(2.0, 12.0, 80) if Ls is None else Ls
    ref = pms_spectrum(V, ref_N, HALF_MASS)[1]
    curve = [(float(L), global_error_sigma(spectrum(V, N, HALF_MASS, float(L)), ref)) for L in Ls]
    L_pms = pms_optimize(V, N, HALF_MASS).L_opt
    return curve, (L_pms, global_error_sigma(spectrum(V, N, HALF_MASS, L_pms), ref))


def fig7(N: int = 20, ref_N: int = 60):
    curve, (L_pms, s_pms) = quartic_sigma_curve(N, ref_N)
    rows = [dict(kind="scan", L=L, sigma=s) for L, s in curve]
    rows.append(dict(kind="pms", L=L_pms, sigma=s_pms))
    return rows, ["kind", "L", "sigma"]


def fig8(Ns=(20, 40), ref_N: int = 80, r=None):
    V, S, params, cap = radial_morse_problem(0)
    r = np.linspace(0.0, 8.0, 401) if r is None else np.asarray(r)
    big = pms_spectrum(V, ref_N, params, pms_potential=S, cap=cap)[1]
    cols = {"r": r}
    for N in Ns:
        small = pms_spectrum(V, N, params, pms_potential=S, cap=cap)[1]
        cols[f"eta_{N}"] = eta_error(small, big, 0, r)
    names = list(cols)
    rows = [dict(zip(names, map(float, vals))) for vals in zip(*cols.values())]
    return rows, names


def morse_1d_problem(shift: float | None = None):
    p = MORSE_1D
    shift = p["shift"] if shift is None else shift
    return morse_1d(p["D"], p["alpha"]).with_shift(shift), PhysicalParams(1.0, p["mass"])


def wei(Ns=(20, 40), levels: int = 4, L_bounds=(0.1, 10.0)):
    V, params = morse_1d_problem()
    p = MORSE_1D
    exact = morse_1d_exact_energies(p["D"], p["alpha"], p["mass"], 1.0, levels - 1)
    rows = []
    for N in Ns:
        pms, res = pms_spectrum(V, N, params, L_bounds=L_bounds)
        for n in range(levels):
            rows.append(dict(n=n, N=N, epsilon=float(res.energies[n] - exact[n]), h_pms=pms.h_opt))
    return rows, ["n", "N", "epsilon", "h_pms"]


FIGURES = {
    "table1": table1,
    "fig3": fig3,
    "fig4": fig4,
    "fig6": fig6,
    "fig7": fig7,
    "fig8": fig8,
    "wei": wei,
}
