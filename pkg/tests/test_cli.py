import json

import pytest

from slee.cli import main
from slee.graph6 import write_graph6_file
from slee.families import make_cycle


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_family(capsys):
    code, out, _ = run(capsys, "compute", "--family", "C:3")
    assert code == 0
    assert "SLEE = 60.0347136901" in out
    assert "v1->0" in out


def test_compute_json_schema(capsys):
    code, out, _ = run(capsys, "compute", "--family", "G1:5", "--json")
    assert code == 0
    doc = json.loads(out)
    entry = doc["reports"][0]
    assert {"slee", "eigenvalues", "moments", "n", "m", "g6", "roles"} <= set(entry)
    assert entry["n"] == 5 and entry["m"] == 5


def test_compute_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "compute", "--input", "missing.g6")
    assert code == 2
    assert "missing.g6" in err


def test_compute_requires_exactly_one_source(capsys):
    code, _, err = run(capsys, "compute")
    assert code == 1
    code, _, err = run(capsys, "compute", "--family", "C:3", "--input", "x.g6")
    assert code == 1


def test_compute_from_file(capsys, tmp_path):
    path = tmp_path / "in.g6"
    write_graph6_file(path, [make_cycle(4), make_cycle(5)])
    code, out, _ = run(capsys, "compute", "--input", str(path))
    assert code == 0
    assert out.count("graph ") == 2


def test_enumerate_writes_sorted_lines(capsys):
    code, out, err = run(capsys, "enumerate", "-n", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and lines == sorted(lines)
    assert "2 graphs" in err


def test_enumerate_diameter_filter(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "6", "--diameter", "3")
    assert code == 0
    assert all(line for line in out.splitlines())


def test_enumerate_out_file(capsys, tmp_path):
    path = tmp_path / "u5.g6"
    code, out, err = run(capsys, "enumerate", "-n", "5", "--out", str(path))
    assert code == 0 and out == ""
    assert len(path.read_text().splitlines()) == 5


def test_enumerate_range_refusal(capsys):
    code, _, err = run(capsys, "enumerate", "-n", "99")
    assert code == 1
    assert "3 <= n <= 10" in err


def test_verify_max_passes(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "max", "-n", "6")
    assert code == 0
    assert "max [n=6]: pass" in out


def test_verify_json_document(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "diameter", "-n", "6", "-d", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["reports"][0]["theorem"] == "diameter-max"
    assert doc["reports"][0]["verdict"] == "pass"


def test_verify_min_n3_is_skipped(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "min", "-n", "3")
    assert code == 0
    assert "skipped" in out


def test_verify_diameter_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "diameter", "-n", "6")
    assert code == 0
    assert out.count("diameter-max") == 3  # d = 2..4 (capped at n-2)


def test_walks_output(capsys):
    code, out, _ = run(capsys, "walks", "--family", "P:2", "--from", "0", "--to", "0", "--max-k", "3")
    assert code == 0
    assert out.strip() == "1, 1, 2, 4"


def test_compare_s_strict(capsys):
    code, out, _ = run(
        capsys, "compare-s", "--family", "G2:6", "-x", "1", "-y", "0", "--max-k", "20"
    )
    assert code == 0
    assert out.startswith("strictly-less")


def test_compare_s_pair_mode(capsys):
    code, out, _ = run(
        capsys, "compare-s", "--family", "P:4", "-w", "3", "-x", "0", "-y", "1", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["checked_up_to"] == 20


def test_transfer_reports_slee_change(capsys):
    code, out, _ = run(
        capsys, "transfer", "--family", "G2:6", "--v", "1", "--u", "0", "--neighbors", "5"
    )
    assert code == 0
    assert "SLEE before" in out and "hypotheses hold" in out
    assert "result" in out


def test_replay_summarizes_chains(capsys):
    code, out, _ = run(capsys, "replay", "-n", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10
    assert all("[ok]" in line for line in lines)


def test_replay_single_graph_mode(capsys):
    code, out, _ = run(capsys, "replay", "--family", "C4S:1,0,0,0")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert all("[ok]" in line for line in lines)

    code, _, err = run(capsys, "replay", "--family", "P:5")
    assert code == 1 and "unicyclic" in err

    code, _, err = run(capsys, "replay")
    assert code == 1


def test_identical_invocations_are_byte_identical(capsys):
    _, out1, _ = run(capsys, "verify", "--theorem", "diameter", "-n", "6", "-d", "2", "--json")
    _, out2, _ = run(capsys, "verify", "--theorem", "diameter", "-n", "6", "-d", "2", "--json")
    doc1, doc2 = json.loads(out1), json.loads(out2)
    for doc in (doc1, doc2):
        for report in doc["reports"]:
            report.pop("runtime_ms")
    assert doc1 == doc2

    _, out1, _ = run(capsys, "enumerate", "-n", "6")
    _, out2, _ = run(capsys, "enumerate", "-n", "6")
    assert out1 == out2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--theorem", "bogus", "-n", "5"])
    assert exc.value.code == 1


def test_bad_family_spec_exits_2(capsys):
    code, _, err = run(capsys, "compute", "--family", "C3S")
    assert code == 2


def test_verdict_exit_mapping():
    from slee.cli import EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_OK, _verdict_exit
    from slee.verify import TheoremReport

    def report(verdict):
        return TheoremReport(
            theorem="max", n=5, d=None, verdict=verdict, expected_spec=None,
            expected_g6=None, found_g6=None, slee_table=(), margin=None, runtime_ms=0.0,
        )

    assert _verdict_exit([report("pass"), report("skipped")]) == EXIT_OK
    assert _verdict_exit([report("pass"), report("inconclusive")]) == EXIT_INCONCLUSIVE
    assert _verdict_exit([report("inconclusive"), report("fail")]) == EXIT_FAILED
