import io
import json
import subprocess
import sys

import pytest

from catena.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_betti_text():
    assert call("betti", "--gens", "31,47,57") == (0, "171 517 527\n", "")


def test_catenary_element_text():
    assert call("catenary", "--gens", "31,47,57", "--element", "564")[1] == "14\n"


def test_report_two_dimensional_json():
    code, out, _ = call("report", "--gens", "1 0; 1 3; 1 5; 1 7", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["half_factorial"] is True
    assert (data["catenary"], data["omega"], data["tame"]) == (4, 7, 7)
    assert data["omega_witness"] == ["1", "0"]
    assert data["catenary_mon"]["method"] == "bounded-scan"
    assert data["tame_method"] == "candidate-set"
    assert data["version"]


def test_report_text_and_non_atoms():
    code, out, _ = call("report", "--gens", "2,3,5", "--bound", "30")
    assert code == 0
    assert "omega-primality: n/a" in out
    code, out, _ = call("report", "--gens", "2,3,5", "--json", "--minimize")
    assert json.loads(out)["generators"] == [[2], [3]]
    assert json.loads(out)["omega"] == 3


def test_report_is_byte_stable():
    args = ("report", "--gens", "10,11,14,19", "--json", "--witnesses", "--bound", "120")
    first, second = call(*args), call(*args)
    assert first == second and first[0] == 0


def test_report_witnesses_round_trip():
    code, out, _ = call("report", "--gens", "31,47,57", "--json", "--witnesses", "--bound", "200")
    data = json.loads(out)
    gens = data["generators"]

    def pi(u):
        return [sum(x * g[k] for x, g in zip(u, gens)) for k in range(len(gens[0]))]

    for rel in data["presentation"]["relations"]:
        assert pi(rel["plus"]) == pi(rel["minus"]) == rel["degree"]
    for entry in data["betti_chains"]:
        assert all(pi(u) == entry["element"] for u in entry["chain"])


def test_factorizations_round_trip():
    code, out, _ = call("factorizations", "--gens", "31,47,57", "--element", "564", "--json")
    data = json.loads(out)
    assert data["factorizations"] == [[0, 12, 0], [9, 0, 5], [13, 1, 2]]
    assert data["lengths"] == [12, 14, 16]
    for u in data["factorizations"]:
        assert 31 * u[0] + 47 * u[1] + 57 * u[2] == 564
    assert call("factorizations", "--gens", "31,47,57", "--element", "564")[1] == "0 12 0\n9 0 5\n13 1 2\n"


def test_distance():
    assert call("distance", "--gens", "31,47,57", "--u", "0 12 0", "--v", "9 0 5")[1] == "14\n"
    assert call("distance", "--gens", "31,47,57", "--u", "0 12")[0] == 2


def test_nabla_dot_and_text():
    code, out, _ = call("nabla", "--gens", "31,47,57", "--element", "564", "--dot", "--show-missing")
    assert code == 0 and out.startswith('graph "nabla_564" {')
    assert 'style=dashed' in out
    code, out, _ = call("nabla", "--gens", "31,47,57", "--element", "171", "--json")
    assert json.loads(out)["betti"] is True


def test_presentation_and_lift():
    code, out, _ = call("presentation", "--gens", "31,47,57")
    assert code == 0 and len(out.splitlines()) == 3
    assert call("lift", "--gens", "10,11,14,19")[1] == "1 0; 1 10; 1 11; 1 14; 1 19\n"
    assert call("lift", "--gens", "31,47,57", "--kind", "eq")[1] == "1 31; 1 47; 1 57\n"


def test_catenary_variants():
    assert call("catenary-eq", "--gens", "11,19,32")[1] == "21\n"
    assert call("catenary-hom", "--gens", "11,19,32")[1] == "11\n"
    out = call("catenary-mon", "--gens", "11,19,23", "--bound", "700", "--threads", "2")[1]
    assert out.startswith("9 (bounded scan up to degree 700")
    data = json.loads(call("catenary-mon", "--gens", "11,19,23", "--bound", "200", "--json")[1])
    assert data["method"] == "bounded-scan" and data["bound"] == "200"
    data = json.loads(call("catenary", "--gens", "31,47,57", "--element", "564", "--json")[1])
    assert data["value"] == 14 and len(data["chain"]) >= 2


def test_omega_tame_half_factorial():
    assert call("omega", "--gens", "2,3")[1] == "3\n"
    assert call("omega", "--gens", "2,3", "--element", "2")[1] == "2\n"
    assert call("tame", "--gens", "1 0; 1 3; 1 5; 1 7")[1] == "7\n"
    assert call("tame", "--gens", "2,3", "--element", "6")[1] == "3\n"
    assert call("half-factorial", "--gens", "1 0; 1 3; 1 5; 1 7")[1] == "true (1 0)\n"
    assert call("half-factorial", "--gens", "31,47,57")[1] == "false\n"


def test_file_input(tmp_path):
    path = tmp_path / "gens.json"
    path.write_text('{"generators": [[31], [47], [57]]}')
    assert call("betti", "--file", str(path))[1] == "171 517 527\n"
    bad = tmp_path / "bad.txt"
    bad.write_text("31,47,57")
    assert call("betti", "--file", str(bad))[0] == 2
    assert call("betti", "--file", str(tmp_path / "missing.json"))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("betti", "--gens", "1 -1; -1 1"),
        ("betti", "--gens", "0,3"),
        ("betti", "--gens", "3,3"),
        ("betti", "--gens", "3,x"),
        ("catenary", "--gens", "3,5", "--element", "1 2"),
        ("factorizations", "--gens", "3,5"),
        ("omega", "--gens", "2,3,5"),
        ("bogus",),
        ("betti",),
        ("catenary-mon", "--gens", "3,5", "--bound", "abc"),
        ("catenary-mon", "--gens", "3,5", "--threads", "0"),
    ],
)
def test_invalid_input_exit_two(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert err and "Traceback" not in err


def test_budget_exit_three(monkeypatch):
    monkeypatch.setenv("CATENA_BUDGET", "5")
    code, out, err = call("omega", "--gens", "31,47,57", "--element", "100")
    assert code == 3 and "exceeded" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "catena", "betti", "--gens", "31,47,57"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "171 517 527\n"
    proc = subprocess.run([sys.executable, "-m", "catena", "betti", "--gens", "1,-1"], capture_output=True, text=True)
    assert proc.returncode == 2 and "Traceback" not in proc.stderr
