"""Command-line behavior: schemas, exit codes, config precedence, determinism.

Tests drive wsbound.cli.main(argv) in process.  Usage errors surface as
SystemExit(2) from argparse; numeric failures that prevent any output
return 3; per-point failures inside tables must never abort the run.
"""

import json

import pytest

import wsbound
from wsbound.cli import main
from wsbound.report import CSV_HEADER, parse_json


def run(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


QUICK = ["--V0", "1", "--R0", "0", "--a", "0.5"]
EXPONENT_POINT = [
    "--potential", "generalized-ws", "--V0", "0.1", "--R0", "0",
    "--a", "0.22727272727272727", "--c", "4.5",
]


# ------------------------------------------------------------------ spectrum


def test_spectrum_rows_and_special_column(capsys):
    code, out, _ = run(capsys, ["spectrum", *QUICK, "--nmax", "2"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 4
    for line in lines[1:]:
        cells = line.split(",")
        assert len(cells) == 12
        assert cells[8] == cells[6]  # c = 1: special case equals eq32
        assert cells[9] == ""  # oracle not requested
        assert "oracle:not-requested" in cells[11]
    assert lines[1].split(",")[6] == "-3.75"


def test_spectrum_emits_deduplicated_warnings_on_stderr(capsys):
    code, out, err = run(capsys, ["scan", "--sweep-V0", "1,2", "--R0", "0", "--a", "0.5"])
    assert code == 0
    warn_lines = [l for l in err.splitlines() if l.startswith("wsbound: warning:")]
    assert len(warn_lines) == 1  # raised once per sweep point, printed once
    assert "surface thickness" in warn_lines[0]
    assert "wsbound: warning:" not in out


def test_json_format_round_trips_with_meta(capsys):
    code, out, _ = run(capsys, ["spectrum", *QUICK, "--nmax", "1", "--format", "json"])
    assert code == 0
    meta, rows = parse_json(out)
    assert meta["version"] == wsbound.__version__
    assert meta["reading"] == "A"
    assert meta["centrifugal_mode"] == "exact"
    assert len(rows) == 2
    assert rows[0].E_eq32 == -3.75


# ---------------------------------------------------------------------- scan


def test_scan_full_grid_row_count_and_order(capsys):
    code, out, _ = run(
        capsys,
        ["scan", "--sweep-V0", "1,2,5", "--sweep-a", "0.5,0.6,1.0",
         "--R0", "0", "--lmax", "1", "--nmax", "1"],
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1 + 3 * 3 * 2 * 2
    keys = []
    for line in lines[1:]:
        cells = line.split(",")
        assert len(cells) == 12
        keys.append((float(cells[0]), float(cells[1]), float(cells[2]),
                     float(cells[3]), int(cells[4]), int(cells[5])))
    assert keys == sorted(keys)


def test_scan_is_byte_identical_across_runs(capsys):
    argv = ["scan", "--sweep-V0", "1,5", "--sweep-a", "0.5,1.0",
            "--R0", "0", "--nmax", "1"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2


# ------------------------------------------------------------ oracle/compare


def test_compare_weak_well_flags_instead_of_aborting(capsys):
    code, out, _ = run(
        capsys,
        ["compare", "--potential", "generalized-ws", "--V0", "0.01",
         "--R0", "0", "--a", "0.5", "--c", "0.5", "--l", "2"],
    )
    assert code == 0
    cells = out.splitlines()[1].split(",")
    assert cells[9] == "" and cells[10] == ""
    assert "oracle:no-level" in cells[11]
    assert "deviation:missing-operand" in cells[11]


def test_compare_binding_well_fills_deviation(capsys):
    code, out, _ = run(
        capsys,
        ["compare", "--potential", "generalized-ws", "--V0", "50",
         "--R0", "0", "--a", "0.5", "--c", "10"],
    )
    assert code == 0
    cells = out.splitlines()[1].split(",")
    assert cells[6] != "" and cells[9] != "" and cells[10] != ""
    assert float(cells[10]) == float(cells[6]) - float(cells[9])


def test_oracle_subcommand_skips_formulas(capsys):
    code, out, _ = run(
        capsys,
        ["oracle", "--potential", "generalized-ws", "--V0", "50",
         "--R0", "0", "--a", "0.5", "--c", "10"],
    )
    assert code == 0
    cells = out.splitlines()[1].split(",")
    assert cells[6] == "" and cells[7] == "" and cells[8] == ""
    assert cells[9] != ""
    assert "eq32:not-requested" in cells[11]


# ----------------------------------------------------------------- usage errors


@pytest.mark.parametrize(
    "argv",
    [
        ["scan", "--sweep-c", "1,2"],  # sweep-c on the standard family
        ["scan", "--potential", "generalized-ws"],  # generalized needs c
        ["spectrum", "--l", "-1"],
        ["spectrum", "--n", "-2"],
        ["spectrum", "--V0", "-5"],
        ["spectrum", "--config", "/nonexistent/path.cfg"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, _ = run(capsys, argv)
    assert code == 2


def test_numeric_dead_end_exits_three(capsys):
    # default standard well parameters leave the regime formula rootless
    code, _, err = run(capsys, ["wavefunction"])
    assert code == 3
    assert err.startswith("wsbound: ")
    # s-wave exponents are complex at this point even with a chosen energy
    code, _, err = run(
        capsys,
        ["wavefunction", *EXPONENT_POINT, "--l", "0", "--n", "0",
         "--energy", "-1", "--rmax", "12", "--points", "301"],
    )
    assert code == 3
    assert "wsbound: " in err


# -------------------------------------------------------------- wavefunction


def test_wavefunction_csv_schema(capsys):
    code, out, _ = run(
        capsys,
        ["wavefunction", *EXPONENT_POINT, "--l", "2", "--n", "0",
         "--rmax", "12", "--points", "301"],
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "r,R,u"
    assert len(lines) == 302
    r, R, u = (float(tok) for tok in lines[1].split(","))
    assert u == r * R


def test_wavefunction_json_schema(capsys):
    code, out, _ = run(
        capsys,
        ["wavefunction", *EXPONENT_POINT, "--l", "2", "--n", "1",
         "--rmax", "12", "--points", "301", "--format", "json"],
    )
    assert code == 0
    doc = json.loads(out)
    assert "energy" in doc["meta"] and "normalization" in doc["meta"]
    assert len(doc["samples"]) == 301
    assert set(doc["samples"][0]) == {"r", "R", "u"}


# -------------------------------------------------------------------- config


def test_config_supplies_defaults(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults for the shallow test well\nV0 = 1\nR0 = 0\na = 0.5\nnmax = 2\n")
    code, out, _ = run(capsys, ["spectrum", "--config", str(cfg)])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4  # nmax propagated into the subcommand
    assert lines[1].split(",")[0] == "1"


def test_config_loses_to_command_line(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("V0 = 1\nR0 = 0\na = 0.5\n")
    code, out, _ = run(capsys, ["spectrum", "--config", str(cfg), "--V0", "2"])
    assert code == 0
    assert out.splitlines()[1].split(",")[0] == "2"


def test_config_syntax_errors_exit_two(capsys, tmp_path):
    bare = tmp_path / "bare.cfg"
    bare.write_text("just-a-token\n")
    code, _, _ = run(capsys, ["spectrum", "--config", str(bare)])
    assert code == 2
    unparsable = tmp_path / "bad.cfg"
    unparsable.write_text("V0 = abc\n")
    code, _, _ = run(capsys, ["spectrum", "--config", str(unparsable)])
    assert code == 2


# -------------------------------------------------------------------- output


def test_output_flag_writes_file_instead_of_stdout(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run(capsys, ["spectrum", *QUICK, "--output", str(target)])
    assert code == 0
    assert out == ""
    text = target.read_text()
    assert text.startswith(CSV_HEADER)
    assert len(text.splitlines()) == 2


def test_version_flag(capsys):
    code, out, _ = run(capsys, ["--version"])
    assert code == 0
    assert out.strip() == f"wsbound {wsbound.__version__}"
