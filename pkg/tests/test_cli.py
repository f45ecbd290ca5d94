import json

import pytest

from su11pct import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_spectrum_csv_rows(capsys):
    code, out = run_cli(
        capsys,
        "spectrum", "--family", "morse", "--A", "2.5", "--B", "1", "--alpha", "0",
        "--format", "csv",
    )
    assert code == 0
    assert out.splitlines() == ["0,-6.25", "1,-2.25", "2,-0.25"]


def test_spectrum_json_default(capsys):
    code, out = run_cli(
        capsys, "spectrum", "--family", "morse", "--A", "2.5", "--B", "1"
    )
    assert code == 0
    payload = json.loads(out)
    assert [lev["energy"] for lev in payload["levels"]] == [-6.25, -2.25, -0.25]


def test_spectrum_ho(capsys):
    code, out = run_cli(
        capsys, "spectrum", "--family", "ho", "--omega", "1", "--L", "0", "--nmax", "2"
    )
    payload = json.loads(out)
    assert [lev["energy"] for lev in payload["levels"]] == [1.5, 3.5, 5.5]


def test_map_chain(capsys):
    code, out = run_cli(
        capsys,
        "map", "--from", "ho", "--to", "coulomb",
        "--omega", "1", "--L", "2.5", "--alpha", "0", "--n", "1",
    )
    assert code == 0
    payload = json.loads(out)
    # L = 2.5 -> A0 = 1.5 -> Lcal = 1.0, Z1 = B (A1 + 1/2) = 0.25 * 3
    assert payload["target"]["Lcal"] == pytest.approx(1.0, abs=1e-14)
    assert payload["target"]["Z0"] == pytest.approx(0.5, abs=1e-14)
    assert payload["member"]["coupling"] == pytest.approx(0.75, abs=1e-14)
    assert payload["member"]["energy"] == pytest.approx(-0.0625, abs=1e-14)


def test_hierarchy_rows(capsys):
    code, out = run_cli(
        capsys,
        "hierarchy", "--from", "ho", "--to", "morse",
        "--omega", "1", "--L", "0", "--nmax", "2", "--format", "csv",
    )
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()]
    assert [float(r[1]) for r in rows] == [0.25, 1.25, 2.25]
    assert all(float(r[2]) == -0.0625 for r in rows)


def test_state_tabulation(capsys):
    code, out = run_cli(
        capsys,
        "state", "--family", "ho", "--omega", "1", "--L", "0", "--n", "0",
        "--grid-min", "0.5", "--grid-max", "1.5", "--grid-count", "3",
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["samples"]) == 3
    mid = payload["samples"][1]
    assert mid["point"] == 1.0
    assert mid["value"] == pytest.approx(0.89324384173800233 * 2.718281828459045**-0.25)


def test_verify_single_family(capsys):
    code, out = run_cli(
        capsys,
        "verify", "--family", "ho", "--omega", "1", "--L", "0",
        "--alpha", "0", "--nmax", "3",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["overall_pass"] is True
    assert set(payload["sections"]) == {
        "eigen_residuals", "orthonormality", "ladder", "commutators",
        "casimir", "mapping", "oracle",
    }


def test_verify_exit_code_on_failure(capsys):
    # an absurd tolerance forces verification failure (exit 1)
    code, out = run_cli(
        capsys,
        "verify", "--family", "ho", "--omega", "1", "--L", "0",
        "--nmax", "2", "--tol", "1e-18",
    )
    assert code == 1
    assert json.loads(out)["overall_pass"] is False


def test_verify_all_battery(capsys):
    code, out = run_cli(capsys, "verify", "--all", "--nmax", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["overall_pass"] is True
    assert len(payload["reports"]) == 6
    families = [r["spec"]["family"] for r in payload["reports"]]
    assert families.count("ho") == families.count("morse") == 2


def test_oracle_compare(capsys):
    code, out = run_cli(
        capsys,
        "oracle-compare", "--family", "morse", "--A", "2.5", "--B", "1",
        "--nmax", "2", "--grid-min", "-6", "--grid-max", "25",
        "--grid-count", "4000",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["overall_pass"] is True
    assert [lev["closed_form"] for lev in payload["levels"]] == [-6.25, -2.25, -0.25]


def test_reports_are_byte_stable(capsys):
    args = (
        "verify", "--family", "morse", "--A", "0.25", "--B", "0.25", "--nmax", "2"
    )
    _, first = run_cli(capsys, *args)
    _, second = run_cli(capsys, *args)
    assert first == second


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["spectrum", "--family", "morse", "--A", "1", "--B", "1", "--bogus"])
    assert err.value.code == 2


def test_missing_family_parameters_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["spectrum", "--family", "ho", "--L", "0"])
    assert err.value.code == 2


def test_invalid_physical_parameters_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["spectrum", "--family", "morse", "--A", "-2", "--B", "1"])
    assert err.value.code == 2


def test_deformed_map_error_exit_2(capsys):
    code = cli.main(
        ["map", "--from", "ho", "--to", "morse", "--omega", "1", "--L", "0",
         "--alpha", "0.6"]
    )
    assert code == 2
