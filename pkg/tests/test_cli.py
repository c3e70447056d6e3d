import json

import pytest

from postdl.cli import main

THEORY = """
W:
(and x y)
D:
(default x (top) z)
goal: z
"""

GAP = "s a\nt c\nedge a b\nedge b c\n"

CNF = "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n"


@pytest.fixture
def theory_file(tmp_path):
    p = tmp_path / "t.dt"
    p.write_text(THEORY, encoding="utf-8")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_text(theory_file, capsys):
    code, out, _ = run(capsys, "classify", theory_file)
    assert code == 0
    assert "cases:" in out and "ext=" in out


def test_classify_conns_json(capsys):
    code, out, _ = run(capsys, "classify", "--conns", "or", "--json")
    assert code == 0
    js = json.loads(out)
    assert js["cases"] == {"ext": "trivial", "cred": "P", "skep": "P"}


def test_classify_defconn(capsys):
    code, out, _ = run(capsys, "classify", "--defconn", "nand 2 1110", "--json")
    assert code == 0
    js = json.loads(out)
    assert js["cases"]["ext"] == "SigmaP2"


def test_ext_yes_no(theory_file, capsys):
    code, out, _ = run(capsys, "ext", theory_file)
    assert code == 0
    assert out.startswith("answer: yes")


def test_cred_json_schema(theory_file, capsys):
    code, out, _ = run(capsys, "cred", theory_file, "--json", "--witness")
    assert code == 0
    js = json.loads(out)
    assert set(js) == {
        "problem", "answer", "engine", "case", "witness", "witness_inconsistent", "stats",
    }
    assert js["answer"] is True
    assert js["witness"] == [0]


def test_goal_override(theory_file, capsys):
    code, out, _ = run(capsys, "skep", theory_file, "--goal", "(and x q)")
    assert code == 0
    assert out.startswith("answer: no")


def test_missing_goal_is_input_error(tmp_path, capsys):
    p = tmp_path / "nogoal.dt"
    p.write_text("W:\nx\n", encoding="utf-8")
    code, _, err = run(capsys, "cred", str(p))
    assert code == 2 and "goal" in err


def test_engine_mismatch_exit_2(theory_file, capsys):
    code, _, err = run(capsys, "ext", theory_file, "--engine", "affine")
    assert code == 2 and "clone" in err


def test_cap_exit_3(tmp_path, capsys):
    lines = ["W:"] + [f"v{i}" for i in range(25)] + ["D:", "(default (and v0 v1) v2 (not v3))"]
    p = tmp_path / "big.dt"
    p.write_text("\n".join(lines), encoding="utf-8")
    code, _, err = run(capsys, "ext", str(p))
    assert code == 3 and "cap" in err


def test_parse_error_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.dt"
    p.write_text("W:\n(and x\n", encoding="utf-8")
    code, _, err = run(capsys, "ext", str(p))
    assert code == 2 and "bad.dt:2" in err


def test_imp(tmp_path, capsys):
    p = tmp_path / "prem.dt"
    p.write_text("W:\n(xor a b)\ngoal: (xor b a)\n", encoding="utf-8")
    code, out, _ = run(capsys, "imp", str(p))
    assert code == 0 and out.strip() == "answer: yes"


def test_reduce_gap_roundtrip(tmp_path, capsys):
    src = tmp_path / "g.edges"
    src.write_text(GAP, encoding="utf-8")
    out_file = tmp_path / "g.dt"
    code, _, _ = run(capsys, "reduce", "gap", str(src), "--mode", "ext", "-o", str(out_file))
    assert code == 0
    code, out, _ = run(capsys, "ext", str(out_file))
    assert code == 0 and out.startswith("answer: no")  # t reachable -> no extension


def test_reduce_3sat_to_stdout(tmp_path, capsys):
    src = tmp_path / "f.cnf"
    src.write_text(CNF, encoding="utf-8")
    code, out, _ = run(capsys, "reduce", "3sat", str(src))
    assert code == 0 and "(default" in out and "W:" in out


def test_reduce_snsat(tmp_path, capsys):
    src = tmp_path / "c.snsat"
    src.write_text("formula\nz1 0\n", encoding="utf-8")
    out_file = tmp_path / "c.dt"
    code, _, _ = run(capsys, "reduce", "snsat", str(src), "-o", str(out_file))
    assert code == 0
    code, out, _ = run(capsys, "ext", str(out_file), "--json")
    assert json.loads(out)["answer"] is True


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "3")
    assert code == 0
    assert out.count("PASS") == 5
