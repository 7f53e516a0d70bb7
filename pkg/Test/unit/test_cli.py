import json
from pathlib import Path

import pytest

import osgw
from Utils.errors import get_error_count

TEST_DIR = Path(__file__).resolve().parents[1]
VALID = TEST_DIR / "valid_tests"
INVALID = TEST_DIR / "invalid_tests"
GOLDEN = TEST_DIR / "golden"


def run(capsys, *argv):
    code = osgw.main([str(a) for a in argv])
    return code, capsys.readouterr()


def golden(name):
    return json.loads((GOLDEN / f"{name}.json").read_text(encoding="utf-8"))


@pytest.mark.parametrize("name, argv", [
    ("check_ch3_rectangular", ("check", VALID / "ch3.json", "--property", "rectangular", "--json")),
    ("check_lz2_h_commutative", ("check", VALID / "lz2.json", "--property", "h-commutative", "--json")),
    ("green_lz2", ("green", VALID / "lz2.json", "--json")),
    ("verify_ch3_left_zero_left_simple", ("verify", VALID / "ch3.json", "--theorem", "left-zero-left-simple", "--json")),
    ("build_min_chain_3", ("build", "min-chain", "3", "--json")),
    ("enumerate_n2_count", ("enumerate", "--n", "2", "--count", "--json")),
    ("counterexample_rect_lz", ("counterexample", "--hyp", "rectangular", "--concl", "left-zero",
                                "--restrict", "--n-max", "3", "--json")),
])
def test_golden_output(capsys, name, argv):
    code, captured = run(capsys, *argv)
    assert code == 0
    assert json.loads(captured.out) == golden(name)


# =====================================================================
# Exit codes
# =====================================================================

def test_failed_assertion_exits_3(capsys):
    code, _ = run(capsys, "check", VALID / "ch3.json", "--property", "rectangular", "--assert")
    assert code == 3
    code, _ = run(capsys, "check", VALID / "lz2.json", "--property", "left-zero", "--assert")
    assert code == 0


def test_counterexample_found_with_assert_exits_3(capsys):
    code, _ = run(capsys, "counterexample", "--hyp", "idempotent-ordered", "--concl", "rectangular",
                  "--n-max", "2", "--assert")
    assert code == 3


@pytest.mark.parametrize("fixture", ["non_associative", "incompatible", "malformed_table", "not_transitive"])
def test_invalid_structure_exits_2(capsys, fixture):
    code, captured = run(capsys, "check", INVALID / f"{fixture}.json")
    assert code == 2
    assert captured.out == ""


def test_size_bound_exits_4(capsys):
    assert run(capsys, "check", INVALID / "too_large.json")[0] == 4
    assert run(capsys, "enumerate", "--n", "5", "--count")[0] == 4
    assert run(capsys, "counterexample", "--hyp", "band", "--concl", "rectangular", "--n-max", "5")[0] == 4


@pytest.mark.parametrize("argv", [
    ("check", VALID / "ch3.json", "--property", "no-such-property"),
    ("verify", VALID / "z2.json", "--theorem", "zero-rectangular"),
    ("build", "no-such-template"),
    ("enumerate", "--n", "2", "--plain", "--require", "band"),
    ("decompose", VALID / "ch3.json", "--partition", "0,1,0"),
    ("decompose", VALID / "ch3.json", "--partition", "0,1"),
    ("power", VALID / "sl2.json", "--extend", VALID / "lz2.json", "--map", "0,1"),
    ("check", TEST_DIR / "missing.json"),
    ("enumerate", "--n", "0"),
    ("counterexample", "--hyp", "band", "--concl", "rectangular", "--n-max", "0"),
    ("corpus", "--n-max", "1", "--workers", "0"),
])
def test_bad_requests_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


# =====================================================================
# Other verbs
# =====================================================================

def test_check_every_property_as_json(capsys):
    code, captured = run(capsys, "check", VALID / "t1.json", "--json")
    docs = json.loads(captured.out)
    assert code == 0
    assert len(docs) == 21
    assert all(d["holds"] for d in docs)


def test_classify_json(capsys):
    code, captured = run(capsys, "classify", VALID / "ch3.json", "--json")
    doc = json.loads(captured.out)
    assert doc["classification"]["headline"] == "complete semilattice of t-simple idempotent ordered semigroups"
    assert doc["properties"]["rectangular"]["counterexample"] == [1, 0]


def test_decompose_by_relation_and_dot(capsys, tmp_path):
    dot = tmp_path / "lz2.dot"
    code, captured = run(capsys, "decompose", VALID / "lz2.json", "--relation", "J", "--dot", dot, "--json")
    assert code == 0
    assert json.loads(captured.out)["class_of"] == [0, 0]
    assert "digraph" in dot.read_text()


def test_incomplete_decomposition_with_assert(capsys):
    code, captured = run(capsys, "decompose", VALID / "sl2_reversed_leq.json", "--partition", "0,1", "--json", "--assert")
    assert code == 3
    assert json.loads(captured.out)["flags"]["complete_semilattice"] is False
    assert "Warning" in captured.err


def test_bad_partition_counts_an_error(capsys):
    assert run(capsys, "decompose", VALID / "ch3.json", "--partition", "0,1")[0] == 2
    assert get_error_count() == 1


def test_verify_all(capsys):
    code, captured = run(capsys, "verify", VALID / "sat3.json", "--all", "--json", "--assert")
    assert code == 0
    assert len(json.loads(captured.out)) == 16


def test_power_with_extension(capsys, tmp_path):
    chain = tmp_path / "ch2.json"
    assert run(capsys, "build", "min-chain", "2", "--out", chain)[0] == 0
    out = tmp_path / "power.json"
    code, captured = run(capsys, "power", VALID / "sl2.json", "--extend", chain, "--map", "0,1",
                         "--out", out, "--json", "--assert")
    doc = json.loads(captured.out)
    assert code == 0
    assert doc["idempotent_ordered"]["holds"]
    assert json.loads(out.read_text())["name"] == "P_f(SL2)"


def test_large_power_file_reloads(capsys, tmp_path):
    base = tmp_path / "lz4.json"
    out = tmp_path / "p_lz4.json"
    assert run(capsys, "build", "left-zero", "4", "--out", base)[0] == 0
    assert run(capsys, "power", base, "--out", out)[0] == 0
    code, captured = run(capsys, "check", out, "--property", "idempotent-ordered", "--json")
    assert code == 0
    assert json.loads(captured.out)["holds"]


def test_enumeration_output_is_deterministic(capsys):
    first = run(capsys, "enumerate", "--n", "3", "--up-to-iso", "--json")[1].out
    again = run(capsys, "enumerate", "--n", "3", "--up-to-iso", "--json")[1].out
    assert first == again
    assert len(json.loads(first)) > 0


def test_corpus_report(capsys, tmp_path):
    out = tmp_path / "corpus.json"
    code, captured = run(capsys, "corpus", "--n-max", "2", "--out", out, "--json", "--assert")
    assert code == 0
    summary = json.loads(captured.out)
    assert summary["structures"] == 15
    assert summary["violations"] == []
    assert len(json.loads(out.read_text())["entries"]) == 15


@pytest.mark.parametrize("argv", [
    ("check", VALID / "ch3.json"),
    ("check", VALID / "ch3.json", "--property", "left-zero", "--witnesses"),
    ("classify", VALID / "rb2x2.json"),
    ("green", VALID / "sat3.json", "--sandwich"),
    ("decompose", VALID / "ch3.json"),
    ("verify", VALID / "lz2.json", "--all"),
    ("power", VALID / "z2.json"),
    ("build", "rectangular-band", "2", "3"),
    ("enumerate", "--n", "2", "--up-to-iso"),
    ("enumerate", "--n", "2", "--plain"),
    ("counterexample", "--hyp", "left-zero", "--concl", "left-simple", "--restrict", "--n-max", "2"),
])
def test_text_output(capsys, argv):
    code, captured = run(capsys, *argv)
    assert code == 0
    assert captured.out.strip()
