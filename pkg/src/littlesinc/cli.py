"""Command-line front end.

Exit status is 0 on success, 1 on numerical/domain failures and 2 on usage
errors.  Every failure writes a one-line code (e.g. ``DOMAIN_ERROR``) to
stderr before the human-readable message.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from . import bvp as _bvp
from . import reproduce as _rep
from .errors import DomainError, LSFError
from .io import emit, write_output
from .lsf import interpolate_function, make_grid
from .potentials import (
    MORSE_1D,
    MORSE_RADIAL,
    PhysicalParams,
    anharmonic,
    harmonic,
    morse_1d_exact_energies,
    parse_inline,
    quartic,
)
from .schrodinger import DEFAULT_L_BOUNDS, pms_optimize, spectrum

PROBLEMS = ("steng-cubic", "lybeck", "harmonic", "anharmonic", "quartic", "morse-radial", "morse-1d")
EIGEN_PROBLEMS = ("harmonic", "anharmonic", "quartic", "morse-radial", "morse-1d")


@dataclass(frozen=True)
class RunConfig:
    command: str
    problem: str | None = None
    potential: str | None = None
    N: int | None = None
    L: float | None = None
    pms: bool = False
    modified: bool = False
    shift: float | None = None
    ell: int = 0
    mass: float | None = None
    hbar: float = 1.0
    L_min: float = DEFAULT_L_BOUNDS[0]
    L_max: float = DEFAULT_L_BOUNDS[1]
    levels: int | None = None
    scan: bool = False
    target: str | None = None
    max_N: int | None = None
    output: str | None = None
    format: str = "csv"

    def flags(self) -> dict:
        # the destination is not part of the result, so it stays out of the payload
        skip = ("command", "output")
        return {k: v for k, v in sorted(asdict(self).items()) if v is not None and k not in skip}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(f"USAGE_ERROR\n{self.prog}: {message}\n")
        sys.exit(2)


def _even_int(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 4 or n % 2:
        raise argparse.ArgumentTypeError(f"N must be even and >= 4, got {n}")
    return n


def _finite(text):
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return x


def _output_flags(p):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", "-o", help="output path (default: stdout)")


def _eigen_flags(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--problem", choices=EIGEN_PROBLEMS)
    src.add_argument("--potential", help='inline potential, e.g. "poly:0,0,1;exp:0.1,-1.44,2"')
    p.add_argument("--N", type=_even_int, required=True)
    p.add_argument("--shift", type=_finite, help="coordinate shift r-bar")
    p.add_argument("--ell", type=int, default=0, help="angular momentum (adds centrifugal term)")
    p.add_argument("--mass", type=_finite)
    p.add_argument("--hbar", type=_finite, default=1.0)
    p.add_argument("--L-min", dest="L_min", type=_finite, default=DEFAULT_L_BOUNDS[0])
    p.add_argument("--L-max", dest="L_max", type=_finite, default=DEFAULT_L_BOUNDS[1])
    p.add_argument("--modified", action="store_true", help="minimize the modified trace")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="littlesinc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("interp", help="interpolation error curve")
    p.add_argument("--problem", choices=("steng-cubic",), default="steng-cubic")
    p.add_argument("--N", type=_even_int, default=22)
    _output_flags(p)

    p = sub.add_parser("bvp", help="solve a boundary-value problem")
    p.add_argument("--problem", choices=("lybeck",), default="lybeck")
    p.add_argument("--N", type=_even_int, default=20)
    _output_flags(p)

    p = sub.add_parser("spectrum", help="eigenvalues of a Schroedinger problem")
    _eigen_flags(p)
    size = p.add_mutually_exclusive_group(required=True)
    size.add_argument("--L", type=_finite, help="fixed half-length")
    size.add_argument("--pms", action="store_true", help="choose L by trace minimization")
    p.add_argument("--levels", type=int, help="number of levels to report")
    _output_flags(p)

    p = sub.add_parser("pms", help="trace-minimizing half-length")
    _eigen_flags(p)
    p.add_argument("--scan", action="store_true", help="emit the coarse trace scan")
    _output_flags(p)

    p = sub.add_parser("reproduce", help="benchmark tables and figure data")
    p.add_argument("target", choices=sorted(_rep.FIGURES))
    p.add_argument("--max-N", dest="max_N", type=_even_int)
    _output_flags(p)
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    fields = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in fields})


def _eigen_setup(cfg: RunConfig):
    """Potential, PMS potential, parameters, L window, cap and exact levels (or None)."""
    lo, hi = cfg.L_min, cfg.L_max
    cap = None
    exact = None
    if cfg.potential is not None:
        V = parse_inline(cfg.potential)
        pms_V = V
        mass = 0.5
    elif cfg.problem in ("harmonic", "anharmonic", "quartic"):
        V = {"harmonic": harmonic, "anharmonic": anharmonic, "quartic": quartic}[cfg.problem]()
        pms_V = V
        mass = 0.5
    elif cfg.problem == "morse-radial":
        shift = MORSE_RADIAL["shift"] if cfg.shift is None else cfg.shift
        V, pms_V, params, _ = _rep.radial_morse_problem(cfg.ell, shift)
        mass = params.mass
        cap = shift
    elif cfg.problem == "morse-1d":
        V, params = _rep.morse_1d_problem()
        pms_V = V
        mass = params.mass
        if hi == DEFAULT_L_BOUNDS[1]:
            hi = 10.0
    else:
        raise DomainError(f"unknown problem {cfg.problem!r}")

    if cfg.shift is not None:
        V, pms_V = V.with_shift(cfg.shift), pms_V.with_shift(cfg.shift)
    if cfg.ell:
        V, pms_V = V.with_angular_momentum(cfg.ell), pms_V.with_angular_momentum(cfg.ell)
    params = PhysicalParams(cfg.hbar, cfg.mass if cfg.mass is not None else mass)

    default_mass = cfg.mass is None and cfg.hbar == 1.0
    if cfg.problem == "harmonic":
        omega = math.sqrt(2.0 / params.mass)
        exact = lambda n: params.hbar * omega * (n + 0.5)  # noqa: E731
    elif cfg.problem == "morse-1d" and default_mass and cfg.shift is None:
        levels = morse_1d_exact_energies(MORSE_1D["D"], MORSE_1D["alpha"], MORSE_1D["mass"])
        exact = lambda n: levels[n] if n < len(levels) else None  # noqa: E731
    elif cfg.problem == "morse-radial" and default_mass and cfg.ell == 0:
        levels = _rep.radial_morse_exact_s_wave(None)
        exact = lambda n: levels[n] if n < len(levels) else None  # noqa: E731
    return V, pms_V, params, (lo, hi), cap, exact


def _run_spectrum(cfg: RunConfig):
    V, pms_V, params, bounds, cap, exact = _eigen_setup(cfg)
    if cfg.pms:
        L = pms_optimize(pms_V, cfg.N, params, bounds, cap, cfg.modified).L_opt
    else:
        L = cfg.L
    res = spectrum(V, cfg.N, params, L)
    count = len(res.energies) if cfg.levels is None else min(cfg.levels, len(res.energies))
    rows = []
    for n in range(count):
        row = dict(n=n, N=cfg.N, L=L, h=res.grid.h, energy=float(res.energies[n]))
        if exact is not None:
            e = exact(n)
            row["exact"] = math.nan if e is None else e
            row["error"] = math.nan if e is None else float(res.energies[n]) - e
        rows.append(row)
    cols = ["n", "N", "L", "h", "energy"] + (["exact", "error"] if exact is not None else [])
    return rows, cols


def _run_pms(cfg: RunConfig):
    V, pms_V, params, bounds, cap, _ = _eigen_setup(cfg)
    res = pms_optimize(pms_V, cfg.N, params, bounds, cap, cfg.modified)
    if cfg.scan:
        return [dict(L=L, trace=t) for L, t in res.scan], ["L", "trace"]
    row = dict(
        N=res.N,
        L_opt=res.L_opt,
        h_opt=res.h_opt,
        trace=res.trace_at_opt,
        constraint_active=res.constraint_active,
        stationarity=res.stationarity,
    )
    return [row], list(row)


def _run_interp(cfg: RunConfig):
    x = _rep.interior_points(0.0, 1.0)
    f = _rep.steng_cubic
    approx = interpolate_function(make_grid(cfg.N, 0.0, 1.0), f)(x)
    exact = f(x)
    rows = [dict(x=float(a), exact=float(b), lsf=float(c), abs_error=float(abs(c - b)))
            for a, b, c in zip(x, exact, approx)]
    return rows, ["x", "exact", "lsf", "abs_error"]


def _run_bvp(cfg: RunConfig):
    prob, exact = _bvp.lybeck_problem()
    sol = _bvp.solve_linear_bvp(prob, cfg.N)
    x = sol.grid.nodes
    ue = exact(x)
    rows = [dict(x=float(a), u=float(b), exact=float(c), error=float(b - c)) for a, b, c in zip(x, sol.u, ue)]
    return rows, ["x", "u", "exact", "error"]


def _run_reproduce(cfg: RunConfig):
    fn = _rep.FIGURES[cfg.target]
    if cfg.max_N is not None:
        if cfg.target not in ("table1", "fig4"):
            raise DomainError(f"--max-N does not apply to {cfg.target}")
        return fn(max_N=cfg.max_N)
    return fn()


RUNNERS = {
    "interp": _run_interp,
    "bvp": _run_bvp,
    "spectrum": _run_spectrum,
    "pms": _run_pms,
    "reproduce": _run_reproduce,
}


def run(cfg: RunConfig) -> bytes:
    rows, cols = RUNNERS[cfg.command](cfg)
    meta = {"command": cfg.command, "flags": cfg.flags(), "version": __version__}
    return emit(rows, cfg.format, columns=cols, meta=meta)


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = _config(ns)
    try:
        with np.errstate(over="ignore"):
            payload = run(cfg)
        write_output(payload, cfg.output)
    except LSFError as exc:
        sys.stderr.write(f"{exc.code}\n{exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"IO_ERROR\n{exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
