"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line
in the terminal summary together with the measured quantity."""

import os
import subprocess
import sys
import time

import numpy as np
import pytest

from littlesinc.bvp import local_error, lybeck_problem, solve_linear_bvp
from littlesinc.lsf import Grid, lsf_basis, lsf_d1_matrix, lsf_d2_matrix, lsf_eval, sinc_diff_coeff, sinc_eval
from littlesinc.potentials import MORSE_1D, PhysicalParams, harmonic, morse_1d_exact_energies
from littlesinc.reproduce import (
    morse_1d_problem,
    quartic_sigma_curve,
    radial_morse_exact_s_wave,
    radial_morse_problem,
)
from littlesinc.schrodinger import pms_optimize, pms_spectrum

from oracles import richardson_derivative

pytestmark = pytest.mark.acceptance

HALF = PhysicalParams(1.0, 0.5)


@pytest.fixture
def report(record_property):
    def rec(criterion, measured):
        record_property("criterion", criterion)
        record_property("measured", measured)

    return rec


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def test_1_cardinality_orthogonality(report):
    t, w = np.polynomial.legendre.leggauss(200)
    card, orth = 0.0, 0.0
    with Timer() as tm:
        for N in (4, 8, 20, 40):
            g = Grid(N, 1.0)
            card = max(card, np.max(np.abs(lsf_basis(g, g.canonical_nodes) - np.eye(N - 1))))
            B = lsf_basis(g, t)
            orth = max(orth, np.max(np.abs((B * w[:, None]).T @ B - g.h * np.eye(N - 1))))
    report("1 cardinality/orthogonality", f"card {card:.2e} (<=1e-12), orth {orth:.2e} (<=1e-10), {tm.elapsed:.2f}s")
    assert card <= 1e-12 and orth <= 1e-10 and tm.elapsed < 10


def test_2_differentiation_oracle(report):
    worst_lsf, worst_sinc = 0.0, 0.0
    with Timer() as tm:
        for N in (8, 20):
            g = Grid(N, 1.0)
            for order, build in ((1, lsf_d1_matrix), (2, lsf_d2_matrix)):
                mat = build(g).entries
                scale = np.max(np.abs(mat))
                for i, k in enumerate(g.indices):
                    f = lambda x, k=int(k): lsf_eval(k, g, x)  # noqa: E731
                    for j, xj in enumerate(g.canonical_nodes):
                        ref = richardson_derivative(f, xj, order=order, step=g.h / 4)
                        worst_lsf = max(worst_lsf, abs(mat[i, j] - ref) / scale)
        for order in range(1, 8):
            for d in range(-4, 5):
                ref = richardson_derivative(lambda x: sinc_eval(0, 1.0, x), float(d), order=order, step=0.5)
                got = sinc_diff_coeff(order, d, 0, 1.0)
                worst_sinc = max(worst_sinc, abs(got - ref) / max(1.0, abs(ref)))
    report(
        "2 differentiation matrices",
        f"LSF rel {worst_lsf:.2e} (<=1e-8), sinc r<=3 {worst_sinc:.2e} (<=1e-6), {tm.elapsed:.2f}s",
    )
    assert worst_lsf <= 1e-8 and worst_sinc <= 1e-6 and tm.elapsed < 30


def test_3_harmonic_N10(report):
    with Timer() as tm:
        _, res = pms_spectrum(harmonic(), 10, HALF)
    err = res.energies[:3] - np.array([1.0, 3.0, 5.0])
    published = np.array([4.86e-6, 1.2e-4, 1.6e-3])
    ratio = np.abs(err) / published
    report("3 harmonic N=10", f"errors {', '.join(f'{e:.3e}' for e in err)}, ratio to published {np.round(ratio, 3)}, {tm.elapsed:.3f}s")
    assert np.all((ratio >= 0.5) & (ratio <= 2.0)) and tm.elapsed < 1


def test_4_pms_scale_N50(report):
    with Timer() as tm:
        res = pms_optimize(harmonic(), 50, HALF)
    report("4 PMS harmonic N=50", f"h_PMS {res.h_opt:.5f} in [0.352, 0.362], L {res.L_opt:.4f}, {tm.elapsed:.3f}s")
    assert 0.352 <= res.h_opt <= 0.362 and tm.elapsed < 1


def test_5a_lybeck_value(report):
    prob, exact = lybeck_problem()
    err = abs(solve_linear_bvp(prob, 30)(1.5) - 1.0)
    report("5a Lybeck |u(3/2) - 1| at N=30", f"{err:.3e} (<=1e-10)")
    assert err <= 1e-10


def test_5b_lybeck_decreasing(report):
    prob, exact = lybeck_problem()
    with Timer() as tm:
        xi = [local_error(solve_linear_bvp(prob, N), exact, 1.5) for N in (6, 10, 14, 20)]
    report("5b Lybeck Xi_L decreasing", f"{', '.join(f'{x:.3f}' for x in xi)}, {tm.elapsed:.2f}s")
    assert all(b < a for a, b in zip(xi, xi[1:])) and tm.elapsed < 10


def test_6_radial_morse(report):
    exact = radial_morse_exact_s_wave(5)
    hs, sub = [], 0.0
    with Timer() as tm:
        for ell in (0, 1, 2):
            V, S, params, cap = radial_morse_problem(ell)
            p20, r20 = pms_spectrum(V, 20, params, pms_potential=S, cap=cap)
            hs.append(p20.h_opt)
            if ell == 0:
                eps0 = r20.energies[0] - exact[0]
            r40 = pms_spectrum(V, 40, params, pms_potential=S, cap=cap)[1]
            r80 = pms_spectrum(V, 80, params, pms_potential=S, cap=cap)[1]
            sub = max(sub, max(abs(r40.energies[n] - r80.energies[n]) for n in (0, 5)))
    report(
        "6 radial Morse",
        f"h_PMS {np.round(hs, 5)} in [0.218, 0.228], eps0 {eps0:.3e} (<=5e-9), "
        f"N=40 vs N=80 {sub:.2e} (<=1e-12), {tm.elapsed:.2f}s",
    )
    assert all(0.218 <= h <= 0.228 for h in hs)
    assert abs(eps0) <= 5e-9 and sub <= 1e-12 and tm.elapsed < 10


def test_7_morse_1d(report):
    p = MORSE_1D
    exact = morse_1d_exact_energies(p["D"], p["alpha"], p["mass"], 1.0, 1)
    with Timer() as tm:
        V, params = morse_1d_problem()
        e20 = pms_spectrum(V, 20, params, L_bounds=(0.1, 10.0))[1].energies
        e40 = pms_spectrum(V, 40, params, L_bounds=(0.1, 10.0))[1].energies
    err20 = abs(e20[1] - exact[1])
    err40 = max(abs(e40[n] - exact[n]) for n in (0, 1))
    report("7 1D Morse", f"N=20 n=1 {err20:.2e} (<=1e-11), N=40 {err40:.2e} (<=1e-12), {tm.elapsed:.2f}s")
    assert err20 <= 1e-11 and err40 <= 1e-12 and tm.elapsed < 5


def test_8_quartic_sigma(report):
    with Timer() as tm:
        curve, (L_pms, s_pms) = quartic_sigma_curve(20, 60, np.linspace(2.0, 12.0, 80))
    s_min = min(s for _, s in curve)
    report("8 quartic sigma", f"sigma(L_PMS={L_pms:.4f}) {s_pms:.4f} vs scan min {s_min:.4f}, ratio {s_pms / s_min:.3f} (<=1.5), {tm.elapsed:.2f}s")
    assert s_pms <= 1.5 * s_min and tm.elapsed < 30


PROPERTY_TESTS = [
    "tests/test_schrodinger.py::test_h_exactly_symmetric",
    "tests/test_schrodinger.py::test_trace_identity",
    "tests/test_schrodinger.py::test_wavefunction_normalized",
    "tests/test_schrodinger.py::test_sign_determinism",
    "tests/test_io.py::test_csv_round_trip",
    "tests/test_io.py::test_json_round_trip",
]


def test_9_property_suite_headless(report):
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    env = dict(os.environ, PYTHONDONTWRITEBYTECODE="1")
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", *PROPERTY_TESTS],
        cwd=root, capture_output=True, text=True, env=env, timeout=600,
    )
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    report("9 property suite headless", f"exit {proc.returncode}: {tail}")
    assert proc.returncode == 0
