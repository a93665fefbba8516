import json

import pytest

from chordel import parse_edge_list, recognize, CHORDAL, SPLIT, THRESHOLD
from chordel.cli import main


DSTAR = "5 4\nu1 u2\nu1 v1\nu1 v2\nu2 v3\n"
P3 = "3 2\n0 1\n1 2\n"
C5 = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"
TENT = "6 9\n0 1\n0 2\n1 2\n0 3\n1 3\n1 4\n2 4\n0 5\n2 5\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in (("dstar", DSTAR), ("p3", P3), ("c5", C5), ("tent", TENT)):
        p = tmp_path / f"{name}.el"
        p.write_text(text)
        out[name] = str(p)
    out["dir"] = tmp_path
    return out


def run_records(capsys, argv):
    code = main(["--format", "records"] + argv)
    out = capsys.readouterr().out.strip()
    return code, [json.loads(line) for line in out.splitlines() if line]


def test_recognize_split_prints_partition(files, capsys):
    code, recs = run_records(capsys, ["recognize", "--class", "split", files["dstar"]])
    assert code == 0
    (rec,) = recs
    assert rec["member"] is True
    assert rec["clique"] == ["u1", "u2"]
    assert rec["independent"] == ["v1", "v2", "v3"]


def test_recognize_reports_witness(files, capsys):
    code, recs = run_records(capsys, ["recognize", "--class", "split", files["c5"]])
    assert code == 0
    (rec,) = recs
    assert rec["member"] is False
    assert rec["witness_name"] == "c5"
    assert len(rec["witness"]) == 5


def test_solve_double_star(files, capsys):
    code, recs = run_records(
        capsys,
        ["solve", "--problem", "split-to-complete-split", "--verify", files["dstar"]],
    )
    assert code == 0
    (rec,) = recs
    assert rec["k"] == 1 and rec["deleted"] == ["v3"]
    assert rec["verified"] is True


def test_solve_precondition_failure_exits_1(files, capsys):
    code, recs = run_records(
        capsys, ["solve", "--problem", "split-to-cluster", files["c5"]]
    )
    assert code == 1
    (rec,) = recs
    assert rec["witness_name"] == "c5"


def test_oracle_p3(files, capsys):
    code, recs = run_records(capsys, ["oracle", "--class", "cluster", files["p3"]])
    assert code == 0
    assert recs[0]["k"] == 1


def test_oracle_kmax_report(files, capsys):
    code, recs = run_records(
        capsys, ["oracle", "--class", "cluster", "--kmax", "0", files["p3"]]
    )
    assert code == 0
    assert recs[0]["exceeds_kmax"] is True


def test_oracle_ffree_label(files, capsys):
    code, recs = run_records(
        capsys,
        ["oracle", "--class", f"f-free:{files['tent']}", files["p3"]],
    )
    assert code == 0
    assert recs[0]["k"] == 0


def test_malformed_input_exits_2(files, capsys, tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("not a graph\n")
    assert main(["recognize", "--class", "split", str(bad)]) == 2


def test_unknown_class_exits_2(files):
    assert main(["recognize", "--class", "wavy", files["p3"]]) == 2


def test_generate_then_recognize(files, capsys, tmp_path):
    out = tmp_path / "gen.el"
    code = main(
        ["generate", "--class", "threshold", "--n", "7", "--seed", "5",
         "--output", str(out)]
    )
    assert code == 0
    g, _ = parse_edge_list(out.read_text())
    assert recognize(g, THRESHOLD).member


def test_generate_stdout(capsys):
    code = main(["generate", "--class", "tree", "--n", "6", "--seed", "1"])
    assert code == 0
    text = capsys.readouterr().out
    g, _ = parse_edge_list(text)
    assert g.n == 6 and g.m == 5


def test_generate_interval_model(capsys):
    code = main(["generate", "--class", "interval-model", "--n", "5", "--seed", "2"])
    assert code == 0
    from chordel import parse_interval_model

    model, _ = parse_interval_model(capsys.readouterr().out)
    assert model.n == 5


def test_reduce_vc_to_ffree_roundtrip(files, capsys, tmp_path):
    c4 = tmp_path / "c4.el"
    c4.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    out = tmp_path / "image.el"
    code = main(
        ["reduce", "--from", "vc", "--to", "f-free", "--pattern", files["tent"],
         "--anchor", "0,1", "--output", str(out), str(c4)]
    )
    assert code == 0
    g, _ = parse_edge_list(out.read_text())
    assert g.n == 20
    assert recognize(g, CHORDAL).member
    assert "reduction vc -> f-free" in out.read_text()


def test_reduce_chain_to_threshold(capsys, tmp_path):
    b = tmp_path / "b.el"
    b.write_text("4 2\n0 1\n2 3\n")
    code = main(["reduce", "--from", "chain", "--to", "threshold", str(b)])
    assert code == 0
    g, _ = parse_edge_list(capsys.readouterr().out)
    assert recognize(g, SPLIT).member


def test_solve_interval_problem_with_model(capsys, tmp_path):
    mfile = tmp_path / "claw.iv"
    mfile.write_text("c 0 10\na 1 2\nb 4 5\nd 7 8\n")
    code, recs = run_records(
        capsys,
        ["solve", "--problem", "interval-to-cluster", "--model", str(mfile)],
    )
    assert code == 0
    assert recs[0]["k"] == 1 and recs[0]["deleted"] == ["c"]


def test_chordal_to_kp_p2(files, capsys):
    code, recs = run_records(
        capsys, ["solve", "--problem", "chordal-to-kp", "--p", "2", files["p3"]]
    )
    assert code == 0
    assert recs[0]["k"] == 1


def test_chordal_to_kp_fallback_warns(files, capsys):
    code = main(["solve", "--problem", "chordal-to-kp", "--p", "3", files["p3"]])
    err = capsys.readouterr().err
    assert code == 0
    assert "fallback" in err


def test_selftest_small(capsys):
    assert main(["selftest", "--seeds", "4"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out.replace("PASS", "")
