import json

import pytest

from jinvariant.cli import main, run


def report(argv):
    code, rep = run(argv)
    return code, json.loads(json.dumps(rep))


def test_typed_example():
    code, rep = report(["typeD", "--n", "4", "--iA", "2", "--iplus", "1", "--iminus", "3"])
    assert code == 0 and rep["status"] == "ok"
    assert rep["result"]["j1"] == 2 and rep["result"]["j2"] == 1


def test_typed_invalid_data_is_input_error():
    code, rep = report(["typeD", "--n", "4", "--iA", "1", "--iplus", "0", "--iminus", "0"])
    assert code == 1 and rep["status"] == "error"


def test_typed_indeterminate_j2():
    code, rep = report(["typeD", "--n", "4", "--iA", "0", "--iplus", "1", "--iminus", "1"])
    assert code == 0
    assert rep["result"]["j2"] is None
    assert rep["result"]["j2_upper_bound"] == 1


def test_poincare_examples():
    code, rep = report(["poincare", "--flag", "--type", "A", "--rank", "1"])
    assert code == 0 and rep["result"]["polynomial"] == [1, 1]
    code, rep = report(["poincare", "--flag", "--type", "F4", "--oracle"])
    assert code == 0 and rep["result"]["value_at_1"] == 1152
    code, rep = report(["poincare", "--severi-brauer", "4"])
    assert rep["result"]["polynomial"] == [1, 1, 1, 1]
    code, rep = report(["poincare", "--parabolic", "1", "--type", "A2"])
    assert rep["result"]["polynomial"] == [1, 1, 1]


def test_poincare_oracle_cap_is_input_error():
    code, rep = report(["poincare", "--flag", "--type", "E7", "--oracle"])
    assert code == 1 and rep["error"]["kind"] == "GroupTooLarge"


def test_split_examples():
    base = ["split", "--degrees", "1,1", "--p", "2", "--j", "2,0", "--n", "4", "--jga", "2"]
    code, rep = report(base)
    assert code == 0
    assert rep["result"]["identity_holds"] is True
    assert rep["result"]["J_after"] == [0, 0]
    code, rep = report(base + ["--after", "1,0"])
    assert code == 2 and rep["status"] == "check_failed"


def test_split_error_codes():
    code, rep = report(["split", "--degrees", "1,1", "--p", "2", "--j", "1,0", "--n", "4", "--jga", "2"])
    assert code == 2 and rep["error"]["kind"] == "InconsistentInput"
    assert rep["error"]["witness"]["jGA"] == 2
    code, rep = report(["split", "--degrees", "1,1", "--p", "2", "--j", "1,0", "--n", "12", "--jga", "1"])
    assert code == 1
    code, rep = report(
        ["split", "--degrees", "1,1", "--p", "2", "--j", "1,0", "--n", "12", "--jga", "1", "--p-primary"]
    )
    assert code == 0 and rep["result"]["n"] == 4 and rep["result"]["n_given"] == 12


def test_motive_examples():
    code, rep = report(["motive", "--type", "A", "--rank", "1", "--p", "2", "--j", "1", "--px", "1,1", "--admissible"])
    assert code == 0
    assert rep["result"]["motive_poincare"] == [1, 1]
    assert rep["result"]["admissible"] == [[0], [1]]
    code, rep = report(["motive", "--type", "A3", "--p", "2", "--j", "1", "--px-sb", "4"])
    assert code == 0
    assert rep["result"]["twists"] == {"0": 1, "2": 1}


def test_motive_not_divisible_carries_witness():
    code, rep = report(["motive", "--degrees", "1", "--bounds", "2", "--p", "2", "--j", "1", "--px", "1,1,1"])
    assert code == 2 and rep["error"]["kind"] == "NotDivisible"
    assert rep["error"]["witness"]["motive"] == [1, 1]


def test_profile_lookup_and_listing():
    code, rep = report(["profile", "--type", "D", "--rank", "4", "--p", "2"])
    assert code == 0 and rep["result"]["profile"]["degrees"] == [1, 1, 3]
    code, rep = report(["profile"])
    assert code == 0 and len(rep["result"]["profiles"]) > 40
    code, rep = report(["profile", "--type", "E8", "--p", "2"])
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["poincare", "--type", "A1"],
        ["poincare", "--flag", "--parabolic", "1", "--type", "A2"],
        ["nonsense"],
        ["typeD", "--n", "4"],
        ["split", "--degrees", "1,x", "--p", "2", "--j", "0,0", "--n", "4", "--jga", "0"],
    ],
)
def test_usage_errors_exit_1(argv):
    assert run(argv)[0] == 1


def test_profiles_file_and_env(tmp_path, monkeypatch):
    doc = [{"series": "D", "rank": 4, "p": 2, "bounds": [2, 1, 1]}]
    f = tmp_path / "custom.json"
    f.write_text(json.dumps(doc))
    code, rep = report(["profile", "--type", "D4", "--p", "2", "--profiles", str(f)])
    assert code == 0 and rep["result"]["profile"]["bounds"] == [2, 1, 1]
    monkeypatch.setenv("JINV_PROFILES", str(f))
    code, rep = report(["profile", "--type", "D4", "--p", "2"])
    assert rep["result"]["profile"]["bounds"] == [2, 1, 1]
    assert rep["request"]["profiles_source"] == str(f)
    bad = tmp_path / "bad.json"
    bad.write_text('[{"series": "D", "rank": 4, "p": 2, "r": 5, "bounds": [2, 1, 1]}]')
    assert run(["profile", "--profiles", str(bad)])[0] == 1


def test_reports_replay_identically(capsys):
    argv = ["split", "--degrees", "1,1,3", "--p", "2", "--j", "1,1,1", "--n", "8", "--jga", "1"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    replay = json.loads(first)["request"]["argv"]
    assert main(replay) == 0
    assert capsys.readouterr().out == first


def test_pretty_output(capsys):
    assert main(["typeD", "--n", "4", "--iA", "2", "--iplus", "1", "--iminus", "3", "--pretty"]) == 0
    out = capsys.readouterr().out
    assert "j1" in out and not out.lstrip().startswith("{")


def test_selfcheck_quick():
    code, rep = report(["selfcheck", "--quick"])
    assert code == 0
    assert all(c["passed"] for c in rep["checks"])
    assert len(rep["checks"]) == 6
