import json
import subprocess
import sys

import pytest

from inducedsub.cli import main
from inducedsub.digraph import Digraph
from inducedsub.formats import emit_dimacs, read_edge_list, write_edge_list
from inducedsub.sat import CnfFormula, solve_sat


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def tt3_file(tmp_path):
    path = tmp_path / "g.elist"
    # TT3 with the long arc subdivided
    write_edge_list(Digraph(4, [(0, 1), (1, 2), (0, 3), (3, 2)]), path)
    return str(path)


def test_detect_found(capsys, tt3_file):
    code, out, _ = run(capsys, "detect", "--pattern", "tt3", "--input", tt3_file)
    assert code == 0 and out.startswith("found (ibfs-cherry)")
    assert "branch 0->2" in out


def test_detect_json_then_verify(capsys, tmp_path, tt3_file):
    code, out, _ = run(capsys, "detect", "--pattern", "tt:3", "--input", tt3_file, "--json")
    data = json.loads(out)
    assert code == 0 and data["found"] and sorted(data["witness"]["vertices"]) == [0, 1, 2, 3]
    wfile = tmp_path / "w.json"
    wfile.write_text(out)
    code, out, _ = run(capsys, "verify", "--input", tt3_file, "--witness", str(wfile))
    assert code == 0 and out.strip() == "valid"


def test_verify_rejects_bad_witness(capsys, tmp_path, tt3_file):
    wfile = tmp_path / "w.json"
    wfile.write_text(json.dumps({"node_map": {"0": 0, "1": 1}, "branches": [{"arc": [0, 1], "path": [0, 2]}]}))
    code, out, _ = run(capsys, "verify", "--input", tt3_file, "--witness", str(wfile), "--pattern", "pk:2")
    assert code == 1 and out.startswith("invalid")


def test_detect_not_found(capsys, tt3_file):
    code, out, _ = run(capsys, "detect", "--pattern", "c2", "--input", tt3_file)
    assert code == 1 and out.startswith("not found")


def test_rooted_detect(capsys, tt3_file):
    code, out, _ = run(capsys, "detect", "--pattern", "a+:2", "--input", tt3_file, "--root", "2")
    assert code == 1
    code, out, _ = run(capsys, "detect", "--pattern", "cherry", "--input", tt3_file, "--root", "0", "--json")
    assert code == 0 and json.loads(out)["witness"]["node_map"]["0"] == 0


def test_classify(capsys, tmp_path):
    path = tmp_path / "c3.elist"
    write_edge_list(Digraph(3, [(0, 1), (1, 2), (2, 0)]), path)
    code, out, _ = run(capsys, "classify", "--pattern", str(path))
    assert code == 0 and out.strip() == "NPC: cycle component"
    code, out, _ = run(capsys, "classify", "--pattern", "c2")
    assert code == 0 and out.startswith("PolySpidersPlusC2")


@pytest.mark.parametrize("clauses", [((1, 2, 2), (-1, -2, -2)), ((1, 1, 1), (-1, -1, -1))])
def test_reduce_then_oracle(capsys, tmp_path, clauses):
    f = CnfFormula(max(abs(l) for c in clauses for l in c), clauses)
    cnf = tmp_path / "f.cnf"
    cnf.write_text(emit_dimacs(f))
    out_path = tmp_path / "g1s.elist"
    code, _, _ = run(capsys, "reduce", "--family", "g1star", "--k", "4", "--cnf", str(cnf), "--output", str(out_path))
    assert code == 0
    sidecar = json.loads(out_path.with_suffix(".json").read_text())
    assert sidecar["family"] == "G1star" and "a" in sidecar["specials"]
    assert read_edge_list(out_path).n == sidecar["n"]
    code, _, _ = run(capsys, "oracle", "--pattern", "c4", "--input", str(out_path))
    assert code == (0 if solve_sat(f) is not None else 1)


def test_reduce_families(capsys, tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text(emit_dimacs(CnfFormula(2, ((1, 2, -1),))))
    for fam, extra in [("g1", []), ("g2", []), ("g3", []), ("g4", []), ("g5", []), ("g5star", []),
                       ("g2k", ["--k", "5"]), ("g4k", ["--k", "4"]), ("g3l", []), ("g3c", []),
                       ("g1prime", ["--pattern", "c:5"]), ("g2d", ["--pattern", "a-:3"]), ("g4prime", ["--pattern", "tt:4"])]:
        code, out, err = run(capsys, "reduce", "--family", fam, "--cnf", str(cnf), *extra)
        assert code == 0, (fam, err)
        assert out.splitlines()[0].isdigit()


def test_reduce_didpp_and_compose(capsys, tmp_path):
    g = tmp_path / "g.elist"
    write_edge_list(Digraph(4, [(0, 1), (2, 3)]), g)
    code, out, _ = run(capsys, "reduce", "--family", "didpp2c", "--input", str(g), "--terminals", "0,1,2,3", "--json")
    assert code == 0 and json.loads(out)["n"] == 6
    code, _, err = run(capsys, "reduce", "--family", "didpp2c", "--input", str(g), "--terminals", "0,1,2")
    assert code == 2
    code, out, _ = run(capsys, "reduce", "--family", "compose", "--pattern", "c2", "--input", str(g), "--k", "0")
    assert code == 0 and out.splitlines()[0] == "4"


def test_usage_errors(capsys, tmp_path, tt3_file):
    assert run(capsys, "detect", "--pattern", "tt3")[0] == 2
    assert run(capsys, "detect", "--pattern", "bogus", "--input", tt3_file)[0] == 2
    assert run(capsys, "detect", "--pattern", "c2", "--input", str(tmp_path / "none"))[0] == 2
    assert run(capsys, "reduce", "--family", "g9")[0] == 2
    assert run(capsys, "reduce", "--family", "g1star", "--k", "5", "--cnf", "x")[0] == 2
    bad = tmp_path / "bad.cnf"
    bad.write_text("p cnf 1 1\n1 0\n")
    code, _, err = run(capsys, "reduce", "--family", "g1", "--cnf", str(bad))
    assert code == 2 and "three literals" in err
    assert run(capsys, "gen-random", "--n", "3", "--p", "2")[0] == 2
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "detect", "--pattern", "c2", "--input", tt3_file, "--root", "9")[0] == 2


def test_gen_random_is_reproducible(capsys):
    a = run(capsys, "gen-random", "--n", "12", "--p", "0.3", "--seed", "5")[1]
    b = run(capsys, "gen-random", "--n", "12", "--p", "0.3", "--seed", "5")[1]
    c = run(capsys, "gen-random", "--n", "12", "--p", "0.3", "--seed", "6", "--oriented")[1]
    assert a == b and a != c


def test_dot_export(capsys, tmp_path, tt3_file):
    dot = tmp_path / "g.dot"
    run(capsys, "detect", "--pattern", "tt3", "--input", tt3_file, "--dot", str(dot))
    assert "fillcolor" in dot.read_text()


def test_module_entry_point(tt3_file):
    res = subprocess.run([sys.executable, "-m", "inducedsub", "detect", "--pattern", "tt3", "--input", tt3_file],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("found")


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "--quick")
    assert code == 0
    assert out.count("PASS") == 8
