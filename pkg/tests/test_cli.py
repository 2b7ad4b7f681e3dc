from __future__ import annotations

import json

import pytest

from dotparse import parse_dot
from semiosquare.cli import main
from semiosquare.corpus import (
    WorkMeta,
    analysis_to_dict,
    serialize_key_value,
)
from semiosquare.gateway import Cassette, GatewayMode
from semiosquare.judging import default_rubric, judge_analysis
from semiosquare.pipeline import PipelineConfig, analyze_work
from strategies import build_analysis

JTW_ARGS = [
    "analyze",
    "--work-title",
    "Journey to the West",
    "--author",
    "Wu Cheng'en",
    "--medium",
    "novel",
    "--pi1",
    "summarizer",
    "--pi2",
    "analyst",
    "--examples-n",
    "3",
    "--seed",
    "7",
    "--mode",
    "replay",
]


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def data_args(data_dir):
    return [
        "--corpus",
        str(data_dir / "corpus.json"),
        "--endpoints",
        str(data_dir / "endpoints.json"),
        "--cassette",
        str(data_dir / "cassettes" / "journey_to_the_west.jsonl"),
    ]


def test_missing_required_option_is_a_usage_error(capsys):
    code, _, err = run(["analyze"], capsys)
    assert code == 1
    assert "Usage:" in err
    assert "error:" in err


def test_unknown_subcommand_exits_one(capsys):
    code, _, err = run(["frobnicate"], capsys)
    assert code == 1


def test_unknown_endpoint_id_exits_one(capsys, data_dir):
    argv = JTW_ARGS[:-4] + ["--pi1", "nope", "--pi2", "analyst", "--mode", "replay"]
    argv += data_args(data_dir) + ["--out", "-"]
    code, _, err = run(argv, capsys)
    assert code == 1
    assert "unknown endpoint id 'nope'" in err
    assert "available:" in err


def test_replay_without_cassette_exits_one(capsys, data_dir):
    argv = JTW_ARGS + [
        "--corpus",
        str(data_dir / "corpus.json"),
        "--endpoints",
        str(data_dir / "endpoints.json"),
        "--out",
        "-",
    ]
    code, _, err = run(argv, capsys)
    assert code == 1
    assert "--mode replay requires --cassette" in err


def test_analyze_replay_markdown_to_stdout(capsys, data_dir):
    argv = JTW_ARGS + data_args(data_dir) + ["--out", "-"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.startswith("# Journey to the West")
    assert "### X: idealism and quest for enlightenment" in out


def test_analyze_replay_dot_output_parses(capsys, data_dir, tmp_path):
    dest = tmp_path / "square.dot"
    argv = JTW_ARGS + data_args(data_dir) + ["--format", "dot", "--out", str(dest)]
    code, _, _ = run(argv, capsys)
    assert code == 0
    graph = parse_dot(dest.read_text(encoding="utf-8"))
    assert len(graph.nodes) == 4
    assert len(graph.edges) == 6


def test_analyze_missing_cassette_entry_exits_two(capsys, data_dir):
    argv = [
        "analyze",
        "--work-title",
        "Some Unrecorded Work",
        "--pi1",
        "summarizer",
        "--pi2",
        "analyst",
        "--mode",
        "replay",
    ] + data_args(data_dir) + ["--out", "-"]
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "cassette miss" in err
    assert "digest" in err


def _record_failing_cassette(tmp_path, endpoint_registry):
    """A cassette whose analyst never produces a valid block."""
    block = serialize_key_value(build_analysis())
    broken = "\n".join(
        line for line in block.splitlines() if not line.startswith("Summary: ")
    )

    def transport(endpoint, messages):
        if endpoint.model_name == endpoint_registry["summarizer"].model_name:
            return "background facts"
        return broken

    path = tmp_path / "failing.jsonl"
    config = PipelineConfig(
        summarizer=endpoint_registry["summarizer"],
        analyst=endpoint_registry["analyst"],
        examples_n=0,
        example_seed=0,
        max_repair_rounds=2,
        mode=GatewayMode.RECORD,
        cassette_path=path,
    )
    run_record = analyze_work(WorkMeta(title="T"), [], config, transport=transport)
    assert run_record.failure is not None
    return path


def test_analyze_failure_exits_two_but_writes_the_run_record(
    capsys, data_dir, tmp_path, endpoint_registry
):
    cassette = _record_failing_cassette(tmp_path, endpoint_registry)
    run_out = tmp_path / "run.json"
    report = tmp_path / "report.md"
    argv = [
        "analyze",
        "--work-title",
        "T",
        "--pi1",
        "summarizer",
        "--pi2",
        "analyst",
        "--mode",
        "replay",
        "--corpus",
        str(data_dir / "corpus.json"),
        "--endpoints",
        str(data_dir / "endpoints.json"),
        "--cassette",
        str(cassette),
        "--run-out",
        str(run_out),
        "--out",
        str(report),
    ]
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "no valid analysis after 2 repair rounds" in err
    assert not report.exists()
    payload = json.loads(run_out.read_text(encoding="utf-8"))
    assert payload["analysis"] is None
    assert payload["failure"]["stage"] == "analysis"
    assert "missing key: Summary" in payload["failure"]["problems"]


def test_batch_mixes_successes_and_failures(capsys, data_dir, tmp_path):
    works = [
        {"title": "Journey to the West", "author": "Wu Cheng'en", "medium": "novel"},
        {"title": "Some Unrecorded Work"},
    ]
    works_path = tmp_path / "works.json"
    works_path.write_text(json.dumps(works), encoding="utf-8")
    out_path = tmp_path / "runs.jsonl"
    argv = [
        "batch",
        "--works",
        str(works_path),
        "--pi1",
        "summarizer",
        "--pi2",
        "analyst",
        "--examples-n",
        "3",
        "--seed",
        "7",
        "--mode",
        "replay",
    ] + data_args(data_dir) + ["--out", str(out_path)]
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "1 of 2 runs failed: some-unrecorded-work" in err
    lines = out_path.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 2
    first, second = (json.loads(line) for line in lines)
    assert first["failure"] is None
    assert first["analysis"]["meta"]["title"] == "Journey to the West"
    assert second["failure"]["stage"] == "gateway"


def test_batch_rejects_malformed_works_files(capsys, data_dir, tmp_path):
    works_path = tmp_path / "works.json"
    works_path.write_text('{"title": "not a list"}', encoding="utf-8")
    argv = [
        "batch",
        "--works",
        str(works_path),
        "--pi1",
        "summarizer",
        "--pi2",
        "analyst",
        "--mode",
        "replay",
    ] + data_args(data_dir) + ["--out", "-"]
    code, _, err = run(argv, capsys)
    assert code == 1
    assert "must be a JSON array" in err


def test_judge_replay_round_trip(capsys, data_dir, tmp_path, endpoint_registry):
    analysis = build_analysis()
    analysis_path = tmp_path / "analysis.json"
    analysis_path.write_text(
        json.dumps(analysis_to_dict(analysis)), encoding="utf-8"
    )
    cassette_path = tmp_path / "judge.jsonl"
    reply = json.dumps(
        {
            "scores": {
                "core_binary_opposition": 22,
                "oppositional_extension": 20,
                "square_completeness": 17,
                "textual_detail": 12,
                "innovation": 11,
            },
            "rationale": "coherent and grounded",
        }
    )
    judge_analysis(
        serialize_key_value(analysis),
        WorkMeta(title="The Test Work"),
        default_rubric(),
        endpoint_registry["grader"],
        GatewayMode.RECORD,
        Cassette(cassette_path),
        transport=lambda e, m: reply,
    )
    argv = [
        "judge",
        "--analysis",
        str(analysis_path),
        "--work-title",
        "The Test Work",
        "--endpoints",
        str(data_dir / "endpoints.json"),
        "--judge",
        "grader",
        "--mode",
        "replay",
        "--cassette",
        str(cassette_path),
        "--out",
        "-",
    ]
    code, out, _ = run(argv, capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == 82
    assert payload["rationale"] == "coherent and grounded"


def test_judge_rejects_empty_and_malformed_analysis_files(capsys, data_dir, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("   \n", encoding="utf-8")
    base = [
        "judge",
        "--work-title",
        "T",
        "--endpoints",
        str(data_dir / "endpoints.json"),
        "--judge",
        "grader",
        "--mode",
        "replay",
        "--cassette",
        str(tmp_path / "none.jsonl"),
        "--out",
        "-",
    ]
    code, _, err = run(["judge", "--analysis", str(empty)] + base[1:], capsys)
    assert code == 1
    assert "is empty" in err

    malformed = tmp_path / "broken.json"
    malformed.write_text('{"meta": {}}', encoding="utf-8")
    code, _, err = run(["judge", "--analysis", str(malformed)] + base[1:], capsys)
    assert code == 1
    assert "malformed analysis file" in err


def test_compare_object_form_with_summary_out(capsys, data_dir, tmp_path):
    summary_path = tmp_path / "summary.json"
    argv = [
        "compare",
        "--cells",
        str(data_dir / "comparison_cells.json"),
        "--out",
        "-",
        "--summary-out",
        str(summary_path),
    ]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.startswith("# Expert versus framework comparison")
    summary = json.loads(summary_path.read_text(encoding="utf-8"))
    assert summary["cells"] == 40
    assert summary["higher"] == 29


def test_compare_accepts_a_bare_array(capsys, tmp_path):
    cells_path = tmp_path / "cells.json"
    cells_path.write_text(
        json.dumps(
            [{"work": "a", "judge": "J", "expert_score": 1, "framework_score": 2}]
        ),
        encoding="utf-8",
    )
    code, out, _ = run(["compare", "--cells", str(cells_path), "--out", "-"], capsys)
    assert code == 0
    assert "- Framework higher: 1 (100.0%)" in out


def test_compare_rejects_bad_cells_files(capsys, tmp_path):
    bad_reported = tmp_path / "bad1.json"
    bad_reported.write_text(json.dumps({"reported": 5, "cells": []}), encoding="utf-8")
    code, _, err = run(["compare", "--cells", str(bad_reported), "--out", "-"], capsys)
    assert code == 1
    assert "'reported' must be an object" in err

    bad_cells = tmp_path / "bad2.json"
    bad_cells.write_text(json.dumps([{"work": "a"}]), encoding="utf-8")
    code, _, err = run(["compare", "--cells", str(bad_cells), "--out", "-"], capsys)
    assert code == 1
    assert "missing field" in err


def test_corpus_validate_happy_path(capsys, data_dir):
    code, out, _ = run(
        ["corpus-validate", "--corpus", str(data_dir / "corpus.json")], capsys
    )
    assert code == 0
    assert out.strip() == "49 entries valid"


def test_corpus_validate_reports_every_problem(capsys, tmp_path):
    good = analysis_to_dict(build_analysis("a"))
    bad = analysis_to_dict(build_analysis("b"))
    bad["square"]["summary"] = ""
    bad["provenance"]["source"] = ""
    corpus_path = tmp_path / "corpus.json"
    corpus_path.write_text(json.dumps([good, bad]), encoding="utf-8")
    code, _, err = run(["corpus-validate", "--corpus", str(corpus_path)], capsys)
    assert code == 2
    assert "work-b: blank-summary" in err
    assert "work-b: empty-source" in err


def test_corpus_validate_rejects_malformed_json(capsys, tmp_path):
    corpus_path = tmp_path / "corpus.json"
    corpus_path.write_text("[not json", encoding="utf-8")
    code, _, err = run(["corpus-validate", "--corpus", str(corpus_path)], capsys)
    assert code == 1
    assert "error:" in err


def test_missing_input_file_exits_one(capsys):
    code, _, err = run(
        ["corpus-validate", "--corpus", "/nonexistent/corpus.json"], capsys
    )
    assert code == 1
    assert "cannot read corpus" in err


def test_entry_exits_via_sys_exit(monkeypatch, data_dir, capsys):
    from semiosquare.cli import entry

    monkeypatch.setattr(
        "sys.argv",
        ["semiosquare", "corpus-validate", "--corpus", str(data_dir / "corpus.json")],
    )
    with pytest.raises(SystemExit) as info:
        entry()
    assert info.value.code == 0
