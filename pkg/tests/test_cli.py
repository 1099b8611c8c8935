import json
import subprocess
import sys

from awdelta.cli import run_command
from awdelta.delta import B, A
from awdelta.expr import parse_element


def test_normalize_ba():
    status, out, _ = run_command(["normalize", "B*A"])
    assert status == 0
    assert parse_element(out.strip()) == B * A
    assert out.strip() == "(-q^2 + 1) * ga + (q^3 - q^-1) * C + q^2 * A B"


def test_member_reports_reason():
    status, out, _ = run_command(["member", "AB", "ga"])
    assert status == 1
    assert out.strip() == "no: abelianization involves C̄"
    assert run_command(["member", "ideal", "A B - B A"])[0] == 0
    assert run_command(["member", "ideal1", "A B - B A + 3"])[0] == 0
    assert run_command(["member", "ideal", "1"])[0] == 1


def test_verify_casimir_line():
    status, out, _ = run_command(["verify", "casimir"])
    assert (status, out.strip()) == (0, "6/6 variants equal; central: yes")


def test_usage_and_parse_errors():
    status, _, err = run_command(["normalize", "A +* B"])
    assert status == 2 and "offset 3" in err
    assert run_command(["frobnicate"])[0] == 2
    assert run_command(["member", "XY", "A"])[0] == 2
    assert run_command(["--q-at", "abc", "normalize", "A"])[0] == 2
    assert run_command(["--q-at", "1", "normalize", "A/(q - q^-1)"])[0] == 2


def test_predicates_and_values():
    assert run_command(["central", "Om al"])[0] == 0
    assert run_command(["central", "A"])[0] == 1
    assert run_command(["degree", "Om"])[1].strip() == "3"
    assert run_command(["degree", "0"])[1].strip() == "-inf"
    assert run_command(["commutator", "A", "ga"])[1].strip() == "0"
    assert run_command(["auto", "r", "A"])[1].strip() == "B"
    status, out, _ = run_command(["omega-basis", "A B C"])
    assert status == 0 and "Om" in out
    assert "lam" in run_command(["pi", "A"])[1]
    assert run_command(["abelianize", "al"])[1].strip() == "(q + q^-1) * Ab + Bb Cb"


def test_q_at_specializes_coefficients():
    out = run_command(["--q-at", "2", "normalize", "q A"])[1].strip()
    assert out == "2 * A"


def test_json_format():
    status, out, _ = run_command(["--json", "normalize", "B A"])
    data = json.loads(out)
    assert status == 0
    first = data["terms"][0]
    assert set(first) == {"mono", "coeff"} and len(first["mono"]) == 6
    assert set(first["coeff"]) == {"num", "den"}
    assert run_command(["--json", "normalize", "B A"])[1] == out


def test_verify_all_subprocess():
    runs = [subprocess.run([sys.executable, "-m", "awdelta", "--json", "--seed", "5", "verify", "all"],
                           capture_output=True, text=True) for _ in range(2)]
    assert runs[0].returncode == 0, runs[0].stdout + runs[0].stderr
    assert runs[0].stdout == runs[1].stdout
    assert json.loads(runs[0].stdout)["ok"] is True
