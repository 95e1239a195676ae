import json
import subprocess
import sys

import pytest

from alpha_spectra.cli import main, resolve_graph
from alpha_spectra.graph6 import to_graph6
from alpha_spectra.graphs import complete, from_shorthand, path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_charpoly_examples(capsys):
    assert run(capsys, "charpoly", "--graph6", "@", "--alpha", "1/2")[:2] == (0, "λ")
    assert run(capsys, "charpoly", "--graph6", "Bw", "--alpha", "0")[:2] == (0, "λ^3 - 3λ - 2")
    assert run(capsys, "charpoly", "--graph6", "Bw", "--alpha", "1")[:2] == (0, "λ^3 - 6λ^2 + 12λ - 8")


def test_alpha_must_be_exact(capsys):
    code, _, err = run(capsys, "charpoly", "--graph", "K3", "--alpha", "0.5")
    assert code == 2 and "exact fraction" in err
    assert run(capsys, "charpoly", "--graph", "K3", "--alpha", "3/2")[0] == 2


def test_bad_graph_and_usage(capsys):
    assert run(capsys, "charpoly", "--graph", "B", "--alpha", "0")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_graph_resolution(tmp_path):
    assert resolve_graph('{"n": 3, "edges": [[0, 1], [1, 2]]}') == path(3)
    f = tmp_path / "g.g6"
    f.write_text(to_graph6(complete(4)) + "\n")
    assert resolve_graph(str(f)) == complete(4)
    j = tmp_path / "g.json"
    j.write_text(json.dumps(path(3).to_json()))
    assert resolve_graph(str(j)) == path(3)
    assert resolve_graph("K2,3") == from_shorthand("K2,3")
    assert resolve_graph("Bg") == path(3)


def test_edge_corona_verify(capsys):
    code, out, _ = run(capsys, "edge-corona", "--base", "K2", "--components", "K1", "--alpha", "1/3", "--verify")
    assert code == 0 and out.startswith("verified")


def test_corona_direct_and_count_mismatch(capsys):
    code, out, _ = run(capsys, "corona", "--base", "P3", "--components", "K1", "K2", "K1", "--alpha", "0", "--direct")
    assert code == 0 and out.startswith("λ^7 ")
    assert run(capsys, "corona", "--base", "P3", "--components", "K1", "K2", "--alpha", "0", "--direct")[0] == 2
    assert run(capsys, "edge-corona", "--base", "C4", "--components", "K1", "--alpha", "0", "--verify")[0] == 2


def test_corona_semiregular_verify(capsys):
    code, _, _ = run(capsys, "corona", "--base", "C6", "--semiregular", "K2", "C3", "--alpha", "2/3", "--verify")
    assert code == 0
    assert run(capsys, "corona", "--base", "K3", "--semiregular", "K1", "K1", "--alpha", "0")[0] == 2


def test_json_output(capsys, tmp_path):
    out = tmp_path / "o.json"
    code, _, _ = run(capsys, "edge-corona", "--base", "C4", "--all", "K2", "--alpha", "1/2",
                     "--spectrum", "--format", "json", "--output", str(out))
    assert code == 0
    d = json.loads(out.read_text())
    assert set(d["spectrum"]) >= {"linear", "quadratic", "float"}


def test_cospectral_commands(capsys, tmp_path):
    assert run(capsys, "cospectral", "check", "--g1", "K1,4", "--g2", "C4uK1", "--alpha", "0")[:2] == (0, "true")
    assert run(capsys, "cospectral", "check", "--g1", "K1,4", "--g2", "C4uK1", "--alpha", "1/2")[:2] == (0, "false")
    out = tmp_path / "cert.json"
    code, _, _ = run(capsys, "cospectral", "cor33", "--g1", "K1,4", "--g2", "C4uK1", "--all", "K1",
                     "--alpha", "0", "--format", "json", "-o", str(out))
    assert code == 0
    cert = json.loads(out.read_text())
    assert cert["nonisomorphism"]["kind"] == "degree_sequence"
    assert run(capsys, "cospectral", "cor33", "--g1", "K1,4", "--g2", "C4uK1", "--all", "K1", "--alpha", "1/2")[0] == 2
    assert run(capsys, "cospectral", "cor34", "--base", "K1", "--components", "K2", "K2", "--alpha", "0")[0] == 0
    assert run(capsys, "cospectral", "cor42", "--g1", "C4", "--g2", "C4", "--all", "K1", "--alpha", "0")[0] == 0
    assert run(capsys, "cospectral", "cor43", "--base", "K2", "--h", "C3", "--f", "C3", "--alpha", "0")[0] == 0


def test_output_is_deterministic(capsys):
    argv = ["cospectral", "cor33", "--g1", "K1,4", "--g2", "C4uK1", "--all", "K2", "--alpha", "0", "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_matrix_command(capsys):
    code, out, _ = run(capsys, "matrix", "thm32", "--jobs", "2")
    assert code == 0 and out.splitlines()[-1] == "54/54 instances verified"


@pytest.mark.parametrize("argv,code", [(["charpoly", "--graph", "K2", "--alpha", "1/3"], 0)])
def test_module_entry_point(argv, code):
    proc = subprocess.run([sys.executable, "-m", "alpha_spectra", *argv], capture_output=True, text=True)
    assert proc.returncode == code
    assert proc.stdout.strip() == "λ^2 - (2/3)λ - 1/3"
