# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""命令行：退出码、文本与 json 输出、语料运行"""

import json

import pytest

from ncpi.Commands.corpus_commands import run_fixture
from ncpi.Commands.dispatcher import dispatch
from ncpi.Commands.run_config import RunConfig
from ncpi.Utilities.documents import list_corpus


def run(capsys, *argv: str) -> tuple[int, str]:
    code = dispatch(list(argv))
    return code, capsys.readouterr().out


def test_al(capsys) -> None:
    code, out = run(capsys, "al", "--d", "2", "--output", "text", "--seed", "3")
    assert code == 0
    assert out.rstrip().endswith("seed: 3")


def test_bound(capsys) -> None:
    code, out = run(capsys, "bound", "--n", "8", "--d", "1", "--output", "text", "--seed", "0")
    assert code == 0
    assert out.splitlines()[0].startswith("3.6106")


def test_json_output_is_sorted_and_reproducible(capsys) -> None:
    code, first = run(capsys, "identity", "[x1,x2]", "--d", "2", "--method", "random", "--output", "json", "--seed", "9")
    assert code == 0
    _, second = run(capsys, "identity", "[x1,x2]", "--d", "2", "--method", "random", "--output", "json", "--seed", "9")
    assert first == second
    document = json.loads(first)
    assert document["config"]["seed"] == 9
    assert document["ok"] is True
    assert document["result"]["verdict"] == "not_identity"
    assert document["result"]["witness_verified"] is True
    assert first.strip() == json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)


def test_identity_expectations(capsys) -> None:
    assert run(capsys, "identity", "S4", "--d", "2", "--expect", "identity")[0] == 0
    assert run(capsys, "identity", "x1*x2 - x2*x1", "--d", "1", "--expect", "not_identity")[0] == 1
    assert run(capsys, "identity", "S4", "--d", "2", "--method", "random", "--expect", "identity")[0] == 0


def test_usage_errors(capsys) -> None:
    assert dispatch(["transmogrify"]) == 2
    assert dispatch(["identity", "x1", "--d", "2", "--method", "oracle"]) == 2
    assert dispatch(["identity", "x1 +", "--d", "2"]) == 2
    assert dispatch(["proof", "check", "no_such_proof.yaml"]) == 2
    assert dispatch(["identity", "x1", "--d", "2", "--p", "10"]) == 2
    assert "error:" in capsys.readouterr().err


def test_long_formula_text_is_not_a_path(capsys) -> None:
    text = " + ".join(f"x1*x{i}" for i in range(2, 80))
    assert run(capsys, "poly", "show", text, "--output", "json")[0] == 0


def test_poly_commands(capsys) -> None:
    code, out = run(capsys, "poly", "show", "x2*x1 + x1*x2 - 3", "--output", "json")
    assert code == 0
    assert json.loads(out)["result"]["poly"] == "-3 + x1*x2 + x2*x1"
    code, out = run(capsys, "poly", "bracket", "x1*z1*x2", "--output", "text")
    assert "z1*x2*x1" in out
    assert run(capsys, "poly", "standard", "4", "--circuit")[0] == 0


def test_lower(capsys) -> None:
    code, out = run(capsys, "lower", "corpus/commutator_entry.lowering", "--d", "2", "--entry", "1", "1", "--output", "json")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["lowered_size"] <= result["bound"]
    assert result["entry"]["poly"] == "e1_1_1*e2_1_1 + e1_1_2*e2_2_1 - e2_1_1*e1_1_1 - e2_1_2*e1_2_1"


def test_ideal_commands(capsys) -> None:
    assert run(capsys, "cert", "verify", "corpus/commutator_example.cert")[0] == 0
    assert run(capsys, "cert", "compose", "corpus/sandwich.compose")[0] == 0
    code, out = run(capsys, "q", "[x1,x2] + [x3,x4]", "--output", "json")
    assert code == 0
    assert json.loads(out)["result"]["q"] == 2
    assert run(capsys, "membership", "corpus/commutator_member.membership", "--expect", "member")[0] == 0
    assert run(capsys, "membership", "[x1,x2,x3]", "--generator", "commutator", "--expect", "non_member")[0] == 1


def test_tensor_commands(capsys) -> None:
    assert run(capsys, "tensor", "rank", "corpus/w_state.tensor", "--max-rank", "3", "--expect", "3")[0] == 0
    assert run(capsys, "tensor", "rank", "corpus/w_state.tensor", "--max-rank", "2", "--expect", "3")[0] == 1
    assert run(capsys, "tensor", "to-cert", "corpus/rank3.tensor")[0] == 0
    code, out = run(capsys, "tensor", "to-poly", "corpus/simple.tensor", "--output", "json")
    assert json.loads(out)["result"]["polys"] == ["x1*x2 + x2*x1", "0"]


def test_proof_commands(capsys) -> None:
    assert run(capsys, "proof", "check", "corpus/s4_instance.proof")[0] == 0
    assert run(capsys, "proof", "check", "corpus/hall_instance.proof", "--spotcheck", "--trials", "5")[0] == 0
    code, out = run(capsys, "proof", "check", "corpus/pc_commutative.proof", "--system", "pmat2", "--output", "json")
    assert code == 1
    assert json.loads(out)["result"]["reason"] == "axiom_not_in_system"
    code, out = run(
        capsys, "proof", "count", "corpus/pc_commutative.proof", "--certificate", "corpus/commutator_example.cert"
    )
    assert code == 0
    assert "lines: 7" in out


# 语料


def test_corpus_list(capsys) -> None:
    code, out = run(capsys, "corpus", "--list", "--output", "json")
    assert code == 0
    assert json.loads(out)["result"]["fixtures"] == list_corpus()


def test_corpus_subset(capsys) -> None:
    code, out = run(capsys, "corpus", "--only", "simple", "--only", "zero", "--output", "text")
    assert code == 0
    assert "[corpus] OK (2/2 fixtures)" in out


@pytest.mark.parametrize("name", list_corpus())
def test_corpus_fixture(name: str) -> None:
    assert run_fixture(name, RunConfig(command="corpus", seed=0)) == []
