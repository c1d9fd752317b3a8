import io
import json

import pytest

from rankin_critical.cli import run

K3 = '{"n": 2, "r": 1, "standard": [[-1, -2]]}'
TRIVIAL = '{"n": 1, "r": 1, "standard": [[0]]}'


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    text = out.getvalue()
    return code, (json.loads(text) if text.lstrip().startswith("{") else text)


def test_hilbert_weight_twelve():
    code, rep = call("hilbert", "--k", "12", "--m", "0")
    assert code == 0
    res = rep["results"]
    assert res["cuspidal"]["ell"] == [[11, -11]]
    assert res["hodge_eff"]["pairs"] == [[[11, 0], [0, 11]]]
    assert res["critical_set"]["points"] == [str(m) for m in range(1, 12)]
    assert res["gl2_x_gl1"]["admissible_d_prime"]


def test_hilbert_weight_two_has_no_balanced_twist():
    code, rep = call("hilbert", "--k", "2", "--with-oracle")
    assert code == 0
    assert rep["results"]["gl2_x_gl1"]["admissible_d_prime"] == []
    assert rep["oracle"][0]["agreed"]


def test_hilbert_mixed_parity_is_input_error():
    code, rep = call("hilbert", "--k", "4", "5")
    assert code == 1 and rep["error"]["type"] == "InputError"


def test_comblemma_k3():
    code, rep = call("comblemma", "--mu", K3, "--mup", TRIVIAL, "--with-oracle")
    assert code == 0
    res = rep["results"]
    assert res["cond1"] and res["cond2"] and res["cond3"]
    assert res["witness"]["lengths"] == [1]
    assert all(o["agreed"] for o in rep["oracle"])


def test_degrees_report():
    code, rep = call("degrees", "--n", "2", "--np", "1", "--r", "1")
    assert code == 0
    res = rep["results"]
    assert res["bottom"] == {"lhs": 2, "rhs": 2} and res["holds"]


def test_degrees_text_summary():
    code, text = call("degrees", "--n", "2", "--np", "1", "--format", "text")
    assert code == 0 and "1+0+1 = 2" in text


def test_kostant_genfun():
    code, rep = call("kostant", "--N", "4", "--n", "2", "--genfun", "--with-oracle")
    assert code == 0
    assert rep["results"]["genfun"] == [1, 1, 2, 1, 1]
    assert rep["oracle"][0]["agreed"]


def test_kostant_list_is_sorted():
    code, rep = call("kostant", "--N", "3", "--n", "2", "--list")
    perms = [e["perm"] if isinstance(e, dict) else e for e in rep["results"]["elements"]]
    assert code == 0 and perms == sorted(perms) and len(perms) == 3


def test_weight_file_input(tmp_path):
    mu = tmp_path / "mu.json"
    mu.write_text(K3)
    code, rep = call("balanced", "--mu", str(mu), "--mup", TRIVIAL)
    assert code == 0 and rep["results"]["status"] == "Balanced"


def test_fundamental_input():
    w = '{"n": 2, "r": 1, "fundamental": {"a": [[11]], "d": ["-6"]}}'
    code, rep = call("analyze-weight", "--weight", w)
    assert code == 0
    assert rep["results"]["weight"]["standard"] == [[-1, -11]]


def test_critical_modes_agree():
    mu = '{"n": 2, "r": 1, "standard": [[0, -3]]}'
    _, auto = call("critical", "--mu", mu, "--mup", TRIVIAL, "--automorphic")
    _, scan = call("critical", "--mu", mu, "--mup", TRIVIAL, "--gamma-scan")
    assert auto["results"]["critical_set"]["points"] == ["-5/2", "-3/2", "-1/2", "1/2"]
    assert scan["results"]["regular_doubled"] == [-5, -3, -1, 1]


def test_not_disjoint_is_domain_error():
    w = '{"n": 2, "r": 1, "standard": [[2, -1]]}'
    code, rep = call("critical", "--mu", w, "--mup", w, "--automorphic")
    assert code == 2
    assert rep["error"]["type"] == "NotDisjoint" and "results" not in rep
    assert rep["inputs"]["mu"] == w


def test_not_pure_is_domain_error():
    code, rep = call("comblemma", "--mu", '{"n": 2, "r": 1, "standard": [[-2, -1]]}', "--mup", TRIVIAL)
    assert code == 2 and rep["error"]["type"] == "NotPure"


def test_oddodd_report():
    mu = '{"n": 3, "r": 1, "standard": [[2, 0, -2]]}'
    mup = '{"n": 3, "r": 1, "standard": [[-2, -3, -4]]}'  # ℓ' = (2, 0, -2), Δ = 3
    code, rep = call("oddodd", "--mu", mu, "--mup", mup, "--eps0", "1", "--with-oracle")
    assert code == 0
    assert all(o["agreed"] for o in rep["oracle"])


@pytest.mark.parametrize(
    "argv",
    [
        ["kostant", "--N", "3", "--n", "2", "--bogus"],
        ["nonsense"],
        ["degrees", "--n", "two", "--np", "1"],
        ["oddodd", "--mu", K3, "--mup", TRIVIAL],
    ],
)
def test_usage_errors_exit_one(argv, capsys):
    assert run(argv, io.StringIO()) == 1
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize("weight", ["{not json", '{"n": 2, "r": 1}', '{"n": 2, "r": 1, "standard": [[1.5, 0]]}', "/no/such/file.json"])
def test_malformed_weights_exit_one(weight):
    code, rep = call("analyze-weight", "--weight", weight)
    assert code == 1 and "error" in rep


def test_output_is_byte_identical():
    argv = ["comblemma", "--mu", K3, "--mup", TRIVIAL, "--with-oracle"]
    first, second = io.StringIO(), io.StringIO()
    run(argv, first)
    run(argv, second)
    assert first.getvalue() == second.getvalue()
