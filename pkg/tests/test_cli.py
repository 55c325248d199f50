import json
import subprocess
import sys

import pytest

from siegel_chow.cli import cmd_table, main, render_json, run


def report_of(*argv):
    rep, _ = run([*argv, "--format", "json"])
    return rep


def test_present_g2():
    r = report_of("present", "--g", "2", "--space", "siegel")
    assert r["status"] == "pass"
    assert r["result"]["relations"] == ["lam1^2 - 2*lam2", "lam2^2"]
    assert r["result"]["graded_dimensions"] == [1, 1, 1, 1]
    assert r["result"]["basis"]["3"] == ["lam1*lam2"]


def test_present_g1():
    r = report_of("present", "--g", "1")
    assert r["result"]["relations"] == ["lam1^2"]
    assert r["result"]["graded_dimensions"] == [1, 1]


def test_present_levi_g3():
    r = report_of("present", "--g", "3", "--space", "levi")
    res = r["result"]
    assert [x["name"] for x in res["generators"]] == ["e1", "lamt1", "lamt2"]
    assert res["relations"] == ["e1", "lamt1^2 - 2*lamt2", "lamt2^2"]
    assert res["graded_dimensions"] == [1, 1, 1, 1]


def test_present_text_golden():
    _, text = run(["present", "--g", "1"])
    assert text == (
        "g: 1\n"
        "space: siegel\n"
        "group_subset:\n"
        "  - 1\n"
        "parabolic_subset: []\n"
        "generators:\n"
        "  - name: lam1\n"
        "    degree: 1\n"
        "    poly: e1\n"
        "relations:\n"
        "  - lam1^2\n"
        "dimension: 1\n"
        "graded_dimensions:\n"
        "  - 1\n"
        "  - 1\n"
        "basis:\n"
        "  0:\n"
        "    - 1\n"
        "  1:\n"
        "    - lam1\n"
        "status: pass\n"
    )


def test_chern_examples():
    r = report_of("chern", "--g", "2", "--bundle", "normal")
    assert r["result"]["weights"] == ["2e1", "e1+e2"]
    assert r["result"]["chern_classes"][2] == "2*e1^2 + 2*e1*e2"
    r = report_of("chern", "--g", "1", "--bundle", "tangent")
    assert r["result"]["chern_classes"] == ["1", "2*e1"]
    r = report_of("chern", "--g", "3", "--bundle", "hodge")
    assert r["result"]["reduced_chern_classes"] == ["1", "-lam1", "lam2", "-lam3"]


def test_verify_all_g2():
    r = report_of("verify", "--g", "2")
    assert r["status"] == "pass"
    assert set(r["result"]) == {"theorem", "chern-vanishing", "symm-lemma", "kernel"}
    assert all(v["status"] == "pass" for v in r["result"].values())


def test_verify_theorem_g4():
    r = report_of("verify", "--g", "4", "--which", "theorem")
    th = r["result"]["theorem"]
    assert r["status"] == "pass"
    assert (th["a_lambda"], th["a_JG"], th["sign_check"]) == ("1", "1", "pass")


def test_verify_g1_is_an_error():
    assert main(["verify", "--g", "1", "--which", "theorem"]) == 2
    r = report_of("verify", "--g", "1", "--which", "theorem")
    assert r["status"] == "error"
    assert "g >= 2" in r["result"]["theorem"]["error"]


def test_verify_g1_other_checks_pass():
    assert main(["verify", "--g", "1", "--which", "kernel"]) == 0


def test_out_of_range_rank():
    assert main(["present", "--g", "9"]) == 2
    assert main(["verify", "--g", "10", "--which", "symm-lemma"]) == 0
    assert main(["verify", "--g", "11", "--which", "symm-lemma"]) == 2


def test_unknown_bundle_rejected_by_parser():
    with pytest.raises(SystemExit):
        run(["chern", "--g", "2", "--bundle", "cotangent"])


def test_table():
    r = cmd_table(4)
    assert r["status"] == "pass"
    rows = [(x["g"], x["dim_G/P_I"], x["a_lambda"], x["a_JG"], x["sign_check"]) for x in r["result"]["rows"]]
    assert rows == [(2, 3, "1", "1", "pass"), (3, 6, "1", "-1", "pass"), (4, 10, "1", "1", "pass")]
    _, text = run(["table", "--gmax", "3"])
    assert text.splitlines()[1].split() == ["2", "3", "1", "1", "pass"]


def test_deterministic_json():
    a = render_json(cmd_table(3))
    b = render_json(cmd_table(3))
    assert a == b
    assert json.loads(a)["command"] == "table"
    assert "timing_s" not in json.loads(a)


def test_timing_flag():
    rep, _ = run(["present", "--g", "2", "--timing"])
    assert rep["timing_s"] >= 0


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "siegel_chow", "chern", "--g", "2", "--bundle", "normal", "--format", "json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(out.stdout)["result"]["weights"] == ["2e1", "e1+e2"]
