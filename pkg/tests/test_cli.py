import json
import subprocess
import sys

import jsonschema
import pytest

from pqextremal import __version__, verify
from pqextremal.cli import main
from pqextremal.hypergraph import parse
from pqextremal.verify import ClaimRecord, load_schema

STAR = "7 2\n1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n"
MATCHING3 = "6 2\n1 2\n3 4\n5 6\n"


@pytest.fixture
def files(tmp_path):
    (tmp_path / "star.hg").write_text(STAR)
    (tmp_path / "matching3.hg").write_text(MATCHING3)
    (tmp_path / "bad.hg").write_text("3 2\n1 2\n1 2\n")
    (tmp_path / "star.json").write_text(json.dumps(parse(STAR).to_dict()))
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, schema, *argv):
    code, out, err = run(capsys, *argv, "--json")
    data = json.loads(out)
    jsonschema.validate(data, load_schema(schema))
    return code, data


def test_check_property_holds(capsys, files):
    code, data = run_json(capsys, "check", "check", files / "star.hg", "--p", 3, "--q", 2)
    assert code == 0
    assert data == {"schema_version": 1, "command": "check", "n": 7, "k": 2, "edges": 6,
                    "p": 3, "q": 2, "has_property": True, "witness": None}


def test_check_reports_witness(capsys, files):
    code, data = run_json(capsys, "check", "check", files / "matching3.hg", "--p", 3, "--q", 2)
    assert code == 1
    assert data["witness"] == [[1, 2], [3, 4], [5, 6]] and data["has_property"] is False


def test_check_reads_json_input(capsys, files):
    code, _ = run_json(capsys, "check", "check", files / "star.json", "--p", 3, "--q", 2)
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["check", "missing.hg", "--p", "3", "--q", "2"],
    ["check", "{dir}/bad.hg", "--p", "3", "--q", "2"],
    ["check", "{dir}/star.hg", "--p", "2", "--q", "3"],
    ["check", "{dir}/star.hg", "--p", "3"],
    ["frobnicate"],
    ["construct", "--family", "split", "--n", "6"],
    ["construct", "--family", "split", "--n", "4", "--k", "2", "--t", "2", "--r", "5"],
    ["phi", "--n", "1", "--k", "2", "--p", "5", "--q", "3"],
    ["kneser", "--n", "12", "--k", "2", "--p", "2", "--q", "2"],
    ["extremal", "--n", "9", "--k", "2", "--p", "3", "--q", "3", "--oracle"],
    ["extremal", "--n", "5", "--k", "2", "--p", "3", "--q", "3", "--budget-nodes", "0"],
    ["verify", "--suite", "nonsense"],
])
def test_usage_errors_exit_two(capsys, files, argv):
    argv = [a.replace("{dir}", str(files)) for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_bad_file_error_names_line(capsys, files):
    _, _, err = run(capsys, "check", files / "bad.hg", "--p", 3, "--q", 2)
    assert "line 3" in err and "duplicate" in err


def test_phi(capsys):
    code, out, _ = run(capsys, "phi", "--n", 10, "--k", 2, "--p", 5, "--q", 3)
    assert (code, out.strip()) == (0, "17")
    _, data = run_json(capsys, "phi", "phi", "--n", 10, "--k", 2, "--p", 5, "--q", 3)
    assert data["threshold"] == {"simple": 50, "refined": 27, "refined_exact": True}
    assert (data["t"], data["r"], data["phi"]) == (2, 0, 17)


def test_sarkaria(capsys):
    _, data = run_json(capsys, "sarkaria", "sarkaria", "--n", 5, "--k", 2, "--p", 2, "--q", 2)
    assert (data["chi"], data["raw"]) == (3, 3)


def test_construct_split(capsys):
    code, out, _ = run(capsys, "construct", "--family", "split", "--n", 6, "--k", 2, "--t", 2, "--r", 0)
    H = parse(out)
    assert code == 0 and H.num_edges == 9


def test_construct_json_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--family", "complete-plus-edge", "--p", 4, "--json")
    data = json.loads(out)
    jsonschema.validate(data, load_schema("hypergraph"))
    assert data == {"n": 4, "k": 2, "edges": [[1, 2], [1, 3], [2, 3], [3, 4]]}
    target = tmp_path / "c5.hg"
    assert run(capsys, "construct", "--family", "cycle", "--n", 5, "--out", target)[0] == 0
    assert parse(target.read_text()).num_edges == 5


def test_construct_random_placement_is_seeded(capsys):
    argv = ("construct", "--family", "split", "--n", 9, "--k", 2, "--t", 2, "--r", 3, "--seed", 11)
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_extremal_golden(capsys):
    code, data = run_json(capsys, "extremal", "extremal", "--n", 5, "--k", 2, "--p", 3, "--q", 3)
    assert code == 0
    assert data == {
        "schema_version": 1, "command": "extremal", "n": 5, "k": 2, "p": 3, "q": 3, "value": 4,
        "complete": True, "method": "branch_and_bound", "phi": 4,
        "stats": {"nodes": 110, "prunes": 38, "seed": 4, "subtrees": 64, "subtrees_searched": 64},
        "witness": [[1, 2], [1, 3], [1, 4], [1, 5]],
    }


def test_extremal_oracle_with_timings(capsys):
    _, data = run_json(capsys, "extremal", "extremal", "--n", 5, "--k", 2, "--p", 3, "--q", 3,
                       "--oracle", "--timings")
    assert data["method"] == "oracle" and data["stats"] == {"subsets_checked": 655}
    assert data["elapsed"] >= 0


def test_extremal_budget_marks_lower_bound(capsys):
    code, out, _ = run(capsys, "extremal", "--n", 7, "--k", 2, "--p", 5, "--q", 3, "--budget-nodes", 64)
    assert code == 0 and "incomplete" in out


def test_kneser_petersen(capsys, tmp_path):
    emit = tmp_path / "petersen.hg"
    code, data = run_json(capsys, "kneser", "kneser", "--n", 5, "--k", 2, "--p", 2, "--q", 2,
                          "--alpha", "--chi", "--chi-f", "--emit", emit)
    assert code == 0
    assert (data["vertices"], data["edges"]) == (10, 15)
    assert data["alpha"]["value"] == 4
    assert (data["chi"]["upper"], data["chi"]["formula"]) == (3, 3)
    assert data["chi_f"]["lp"] == data["chi_f"]["transitive"] == {"num": 5, "den": 2}
    assert data["chi_f"]["agree"] is True
    assert parse(emit.read_text()).num_edges == 15
    assert "vertex 10 = 4 5" in emit.read_text()


def test_kneser_text(capsys):
    code, out, _ = run(capsys, "kneser", "--n", 5, "--k", 2, "--p", 2, "--q", 2, "--chi-f")
    assert code == 0
    assert "chi_f = 5/2 (lp), 5/2 (transitive)" in out


def test_kneser_single_method(capsys):
    _, data = run_json(capsys, "kneser", "kneser", "--n", 5, "--k", 2, "--p", 3, "--q", 3,
                       "--chi-f", "--method", "transitive")
    assert data["chi_f"] == {"method": "transitive", "transitive": {"num": 5, "den": 2}}


def test_verify_theorem6(capsys):
    code, data = run_json(capsys, "verify_report", "verify", "--suite", "theorem6", "--max-p", 5)
    assert code == 0
    assert data["summary"] == {"pass": 3, "fail": 0, "skipped": 0}
    assert [c["expected"] for c in data["claims"]] == [2, 4, 7]


def test_verify_lemma5_table_and_file(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "lemma5", "--max-n", 6, "--out", out_file)
    assert code == 0 and "lemma5/n6" in out and "pass" in out
    data = json.loads(out_file.read_text())
    jsonschema.validate(data, load_schema("verify_report"))
    assert data["claims"][0]["computed"]["counterexamples"] == 0


def test_verify_failure_exits_one(capsys, monkeypatch):
    def broken(opts):
        yield ClaimRecord("broken/always", "broken", "a claim that fails", {}, 1, 0, "fail")
    monkeypatch.setitem(verify.SUITES, "broken", broken)
    code, data = run_json(capsys, "verify_report", "verify", "--suite", "broken")
    assert code == 1 and data["summary"]["fail"] == 1


def test_verify_timings_only_on_request(capsys):
    _, plain = run_json(capsys, "verify_report", "verify", "--suite", "lemma5", "--max-n", 4)
    _, timed = run_json(capsys, "verify_report", "verify", "--suite", "lemma5", "--max-n", 4, "--timings")
    assert all("elapsed" not in c for c in plain["claims"])
    assert all("elapsed" in c for c in timed["claims"])


def test_load_schema_rejects_unknown_name():
    with pytest.raises(ValueError):
        load_schema("nope")


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "pqextremal", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and __version__ in out.stdout


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
