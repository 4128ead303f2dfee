import math

import pytest

from littlesinc import __version__
from littlesinc.cli import main
from littlesinc.io import parse_csv, parse_json


def run(tmp_path, *argv, name="out"):
    path = tmp_path / name
    code = main([*argv, "-o", str(path)])
    return code, (path.read_bytes() if path.exists() else None)


def test_spectrum_harmonic_json(tmp_path):
    code, out = run(tmp_path, "spectrum", "--problem", "harmonic", "--N", "10", "--pms", "--format", "json")
    assert code == 0
    meta, data = parse_json(out)
    assert meta["command"] == "spectrum" and meta["version"] == __version__
    assert meta["flags"]["N"] == 10 and meta["flags"]["pms"] is True
    assert len(data) == 9
    published = [-4.86e-6, 1.2e-4, -1.6e-3]
    for row, p in zip(data, published):
        assert row["exact"] == 2 * row["n"] + 1
        assert abs(row["error"] / p - 1) < 0.2


def test_spectrum_levels_and_fixed_L(tmp_path):
    code, out = run(tmp_path, "spectrum", "--problem", "quartic", "--N", "12", "--L", "4", "--levels", "2")
    assert code == 0
    rows = parse_csv(out)
    assert [r["n"] for r in rows] == [0, 1]
    assert rows[0]["L"] == 4.0 and "exact" not in rows[0]


def test_spectrum_inline_potential(tmp_path):
    code, out = run(tmp_path, "spectrum", "--potential", "poly:0,0,1", "--N", "10", "--pms", "--levels", "1")
    assert code == 0
    assert abs(parse_csv(out)[0]["energy"] - 1.0) < 1e-5


def test_reproduce_table1(tmp_path):
    code, out = run(tmp_path, "reproduce", "table1", "--max-N", "20")
    assert code == 0
    assert out.splitlines()[0] == b"l,n,N,epsilon,h_pms"
    rows = parse_csv(out)
    assert [(r["l"], r["n"]) for r in rows] == [(l, n) for l in (0, 1, 2) for n in (0, 5)]
    for r in rows:
        assert r["N"] == 20 and abs(r["h_pms"] - 0.223) < 0.002
        if r["n"] == 0:
            assert 1e-11 < abs(r["epsilon"]) < 1e-9
        else:
            assert 1e-7 < abs(r["epsilon"]) < 1e-5


def test_interp(tmp_path):
    code, out = run(tmp_path, "interp", "--problem", "steng-cubic", "--N", "22")
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 1001
    assert max(r["abs_error"] for r in rows) == pytest.approx(0.0011068383713204316, rel=1e-9)


def test_bvp(tmp_path):
    code, out = run(tmp_path, "bvp", "--N", "10")
    assert code == 0
    assert len(parse_csv(out)) == 9


def test_pms_scan(tmp_path):
    code, out = run(tmp_path, "pms", "--problem", "harmonic", "--N", "50", "--scan")
    assert code == 0
    assert len(parse_csv(out)) == 64
    code, out = run(tmp_path, "pms", "--problem", "harmonic", "--N", "50")
    row = parse_csv(out)[0]
    assert abs(row["h_opt"] - 0.357) < 0.001 and row["constraint_active"] is False


def test_pms_morse_radial_cap(tmp_path):
    code, out = run(tmp_path, "pms", "--problem", "morse-radial", "--N", "80")
    assert code == 0
    row = parse_csv(out)[0]
    assert row["constraint_active"] is True and row["L_opt"] == pytest.approx(3.0)


def test_morse_1d_exact_column(tmp_path):
    code, out = run(tmp_path, "spectrum", "--problem", "morse-1d", "--N", "20", "--pms", "--levels", "2")
    assert code == 0
    rows = parse_csv(out)
    assert abs(rows[1]["error"]) <= 1e-11


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--problem", "harmonic", "--N", "10", "--L", "3", "--format", "json"],
        ["reproduce", "fig4", "--max-N", "12"],
        ["pms", "--problem", "anharmonic", "--N", "20", "--modified"],
    ],
)
def test_deterministic_bytes(tmp_path, argv):
    a = run(tmp_path, *argv, name="a")
    b = run(tmp_path, *argv, name="b")
    assert a[0] == 0 and a == b


def test_stdout(capsysbinary):
    assert main(["spectrum", "--problem", "harmonic", "--N", "6", "--L", "2", "--levels", "1"]) == 0
    out = capsysbinary.readouterr().out
    assert out.startswith(b"n,N,L,h,energy,exact,error\n0,6,2.0,")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["spectrum", "--problem", "harmonic", "--N", "10"],
        ["spectrum", "--problem", "harmonic", "--N", "10", "--L", "3", "--pms"],
        ["spectrum", "--problem", "nope", "--N", "10", "--pms"],
        ["spectrum", "--problem", "harmonic", "--N", "7", "--pms"],
        ["spectrum", "--problem", "harmonic", "--N", "10", "--L", "nan"],
        ["spectrum", "--problem", "harmonic", "--potential", "poly:1", "--N", "10", "--pms"],
        ["reproduce", "fig99"],
        ["interp", "--format", "xml"],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    assert capsys.readouterr().err.startswith("USAGE_ERROR\n")


@pytest.mark.parametrize(
    "argv,code",
    [
        (["pms", "--potential", "poly:0", "--N", "10"], "FLAT_TRACE"),
        (["spectrum", "--potential", "poly:", "--N", "10", "--pms"], "DOMAIN_ERROR"),
        (["spectrum", "--problem", "harmonic", "--N", "10", "--pms", "--L-min", "5", "--L-max", "1"], "DOMAIN_ERROR"),
        (["spectrum", "--problem", "morse-radial", "--ell", "1", "--N", "10", "--L", "4"], "DOMAIN_ERROR"),
        (["reproduce", "fig7", "--max-N", "20"], "DOMAIN_ERROR"),
    ],
)
def test_runtime_errors(argv, code, capsys):
    assert main(argv) == 1
    err = capsys.readouterr().err
    assert err.splitlines()[0] == code


def test_io_error(tmp_path, capsys):
    target = tmp_path / "missing" / "out.csv"
    assert main(["bvp", "--N", "6", "-o", str(target)]) == 1
    assert capsys.readouterr().err.startswith("IO_ERROR\n")


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_exact_column_nan_beyond_bound_states(tmp_path):
    code, out = run(tmp_path, "spectrum", "--problem", "morse-radial", "--N", "40", "--L", "2.5")
    rows = parse_csv(out)
    assert code == 0 and math.isnan(rows[-1]["exact"])
