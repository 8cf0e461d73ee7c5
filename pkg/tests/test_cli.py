"""CLI surface: JSON payloads, exit codes, round-trips and determinism."""

import json
import subprocess
import sys


from quartics.cli import (EXIT_DEGENERATE, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE,
                          main)


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInvariants:
    def test_x96(self, capsys):
        code, out, _ = run_cli(capsys, ["invariants", "--family", "X96"])
        assert code == EXIT_OK
        data = json.loads(out)
        inv = data["invariants"]
        assert inv["I3"] == "72" and inv["I6"] == "13822"
        assert inv["I9"] == inv["I12"] == inv["I15"] == inv["I18"] == "0"
        assert data["schema"].startswith("quartics/")

    def test_x4_at_origin_matches_x96(self, capsys):
        code, out96, _ = run_cli(capsys, ["invariants", "--family", "X96"])
        code4, out4, _ = run_cli(capsys, ["invariants", "--family", "X4",
                                          "--params", "0", "0", "0"])
        assert code == code4 == EXIT_OK
        assert json.loads(out96)["invariants"] == json.loads(out4)["invariants"]

    def test_symbolic_decompose(self, capsys):
        code, out, _ = run_cli(capsys, ["invariants", "--family", "X4",
                                        "--symbolic", "--decompose"])
        assert code == EXIT_OK
        table = json.loads(out)["decomposition"]["I3"]
        assert table == {"const": "72", "[2]": "6", "[1,1,1]": "2"}

    def test_symbolic_golden(self, capsys):
        code, out, _ = run_cli(capsys, ["invariants", "--family", "X4",
                                        "--symbolic", "--golden"])
        assert code == EXIT_OK
        golden = json.loads(out)["golden"]
        assert golden["consistent"] is True
        assert golden["gamma"]["I3"] == "1"
        assert golden["gamma"]["I6"] == "1/648"
        assert golden["gamma"]["I9"] == "64/27"

    def test_negative_rational_params(self, capsys):
        code, out, _ = run_cli(capsys, ["invariants", "--family", "X4",
                                        "--params=-7/2,0,1"])
        assert code == EXIT_OK
        assert json.loads(out)["params"] == ["-7/2", "0", "1"]

    def test_generic(self, capsys):
        coeffs = [str(k + 1) for k in range(15)]
        code, out, _ = run_cli(capsys, ["invariants", "--family", "generic",
                                        "--params", *coeffs])
        assert code == EXIT_OK
        data = json.loads(out)
        assert set(data["invariants"]) == {"I3", "I6", "I9", "I12", "I15", "I18"}

    def test_usage_bad_arity(self, capsys):
        code, _, err = run_cli(capsys, ["invariants", "--family", "X4",
                                        "--params", "1", "2"])
        assert code == EXIT_USAGE
        assert "parameter" in err


class TestBitangents:
    def test_x24_contains_rational_line(self, capsys):
        code, out, _ = run_cli(capsys, ["bitangents", "--family", "X24",
                                        "--params", "1"])
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["count"] == 28
        lines = [tuple(complex(re, im) for re, im in entry["coefficients"])
                 for entry in data["lines"]]
        from quartics.bitangent import proj_distance

        assert any(proj_distance(l, (1, -1, 1)) < 1e-9 for l in lines)
        assert all(entry["residual"] < 1e-9 for entry in data["lines"])

    def test_x96_count(self, capsys):
        code, out, _ = run_cli(capsys, ["bitangents", "--family", "X96"])
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["count"] == 28
        assert data["coordinate_type"] == 12 and data["general_type"] == 16

    def test_degenerate_exit_code(self, capsys):
        code, out, err = run_cli(capsys, ["bitangents", "--family", "X24",
                                          "--params", "2"])
        assert code == EXIT_DEGENERATE
        assert out == "" and "degenerate" in err.lower()

    def test_unattainable_tolerance_exits_numeric(self, capsys):
        code, out, err = run_cli(capsys, ["bitangents", "--family", "X96",
                                          "--tol", "1e-30"])
        assert code == EXIT_NUMERIC
        assert out == "" and "28" in err


class TestDetrep:
    def test_solves(self, capsys):
        code, out, _ = run_cli(capsys, ["detrep", "--params", "1", "2", "3"])
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["residuals"]["det"] < 1e-8
        assert max(data["residuals"][f"e{i}"] for i in range(1, 7)) < 1e-10
        # A = identity in [re, im] encoding
        assert data["A"][0][0] == [1.0, 0.0] and data["A"][0][1] == [0.0, 0.0]

    def test_fermat_branch(self, capsys):
        code, out, _ = run_cli(capsys, ["detrep", "--params", "0", "0", "0"])
        assert code == EXIT_OK
        data = json.loads(out)
        c = data["C"]
        cd = complex(*c[1][2]) * complex(*c[0][3])
        assert min(abs(cd - complex(-0.5, 0.5)), abs(cd - complex(-0.5, -0.5))) < 1e-9

    def test_degenerate_exit_code(self, capsys):
        code, _, err = run_cli(capsys, ["detrep", "--params", "2", "0", "0"])
        assert code == EXIT_DEGENERATE

    def test_usage(self, capsys):
        code, _, _ = run_cli(capsys, ["detrep", "--params", "1"])
        assert code == EXIT_USAGE


class TestEnvelope:
    def test_roundtrip_identity(self, capsys):
        for argv in (["invariants", "--family", "X24", "--symbolic"],
                     ["bitangents", "--family", "X96"],
                     ["detrep", "--params", "5", "1", "7"]):
            _, out, _ = run_cli(capsys, argv)
            data = json.loads(out)
            again = json.dumps(data, sort_keys=True, separators=(",", ": "), indent=1) + "\n"
            assert again == out

    def test_subprocess_byte_determinism(self):
        argv = [sys.executable, "-m", "quartics.cli", "detrep", "--params", "1", "2", "3"]
        a = subprocess.run(argv, capture_output=True, check=True)
        b = subprocess.run(argv, capture_output=True, check=True)
        assert a.stdout == b.stdout and a.stdout

    def test_unknown_family_exits_two(self):
        argv = [sys.executable, "-m", "quartics.cli", "invariants", "--family", "X7"]
        proc = subprocess.run(argv, capture_output=True)
        assert proc.returncode == 2
