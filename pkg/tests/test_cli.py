"""CLI surface: every subcommand produces its documented output shape."""

from __future__ import annotations

import json

from crosslimit.classes import overlapping_cover_class, save_class
from crosslimit.cli import main


def run_cli(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_regions(capsys):
    code, out = run_cli(capsys, "regions", "--witness", "disjoint", "--pair", "hA,hB")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["A"] == "mod 1 { }"
    assert payload["B"] == "mod 2 { 0 }"


def test_eliminable(capsys):
    code, out = run_cli(capsys, "eliminable", "--witness", "disjoint", "--pair", "hA,hB")
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["eliminable"] is False
    assert payload["regime"] == "disjoint"


def test_shared_family(capsys):
    code, out = run_cli(capsys, "shared", "--witness", "six-cell", "--family", "h1,h2,h3")
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["exists"] is True
    assert len(payload["prefix"]) == 12


def test_shared_pair_none(capsys):
    code, out = run_cli(
        capsys, "--truncation", "5", "shared", "--witness", "co-singleton",
        "--family", "h0,h1",
    )
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["exists"] is False


def test_dimension(capsys):
    code, out = run_cli(
        capsys, "dimension", "--witness", "punctured:10", "--max-size", "8",
        "--vertex-horizon", "24",
    )
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["outcome"] == "at-least"
    assert payload["dimension"] == 8


def test_stream_with_corruption(capsys):
    code, out = run_cli(
        capsys, "stream", "--target", "3", "--kind", "ctr", "--take", "6",
        "--corrupt", "3:{0,4}",
    )
    assert code == 0
    assert out.splitlines() == [
        "{0,3}", "{1,3}", "{0,4}", "{2,3}", "{3,4}", "{3,5}",
    ]


def test_stream_text(capsys):
    code, out = run_cli(
        capsys, "stream", "--witness", "disjoint", "--target", "hA",
        "--kind", "text", "--take", "4",
    )
    assert code == 0
    assert out.splitlines() == ["0", "2", "4", "6"]


def test_identify(capsys):
    code, out = run_cli(
        capsys, "identify", "--witness", "overlap-cover", "--learner", "eligibility",
        "--target", "h2", "--stream", "sampled:3", "--steps", "30", "--window", "5",
    )
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["final_output"] == "h2"
    assert payload["converged_at"] is not None


def test_identify_trace_csv(capsys):
    code, out = run_cli(
        capsys, "identify", "--witness", "co-singleton", "--learner", "absence-count",
        "--target", "4", "--steps", "10", "--window", "3", "--trace",
    )
    assert code == 0
    header = out.splitlines()[0]
    assert "step" in header and "output" in header and "absence_counts" in header


def test_generate(capsys):
    code, out = run_cli(
        capsys, "generate", "--witness", "augmented:5", "--learner", "safe-core-gen",
        "--target", "h2", "--steps", "20", "--window", "5",
    )
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["converged_at"] == 1


def test_defect_with_verification(capsys):
    code, out = run_cli(
        capsys, "--horizon", "12", "defect", "--witness", "disjoint",
        "--pair", "hA,hB", "--verify",
    )
    doc = json.loads(out)
    assert code == 0
    assert doc["payload"]["kappa"] == "0"
    assert doc["ok"] is True


def test_corrupt_id(capsys):
    code, out = run_cli(
        capsys, "corrupt-id", "--witness", "co-singleton", "--target", "3",
        "--budget", "5", "--steps", "200",
    )
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["final_output"] == "h3"
    assert len(payload["injections"]) == 5


def test_classify(capsys):
    code, out = run_cli(capsys, "classify", "--witness", "disjoint")
    doc = json.loads(out)
    assert code == 0
    assert doc["ctr_id"]["status"] == "no"
    assert doc["txt_id"]["status"] == "yes"


def test_classify_text_format(capsys):
    code, out = run_cli(capsys, "--format", "text-summary", "classify",
                        "--witness", "augmented:6")
    assert code == 0
    assert "ctr_gen: yes (safe-core)" in out


def test_reproduce(capsys):
    code, out = run_cli(capsys, "--format", "text-summary", "reproduce", "ex61")
    assert code == 0
    assert "ok" in out


def test_class_file_round_trip(tmp_path, capsys):
    path = tmp_path / "overlap.json"
    save_class(overlapping_cover_class(), str(path))
    code, out = run_cli(capsys, "classify", "--class", str(path))
    doc = json.loads(out)
    assert code == 0
    assert doc["ctr_id"]["status"] == "yes"


def test_verify_runs_acceptance_suite(capsys):
    code, out = run_cli(capsys, "verify")
    assert code == 0
    lines = [line for line in out.splitlines() if line.startswith("[")]
    assert len(lines) == 10
    assert all(line.startswith("[PASS]") for line in lines)


def test_usage_errors_return_2(capsys):
    code, _ = run_cli(capsys, "regions", "--witness", "disjoint", "--pair", "hA")
    assert code == 2
    code, _ = run_cli(capsys, "identify", "--witness", "disjoint",
                      "--learner", "nonsense", "--target", "hA")
    assert code == 2
