"""Command-line interface.

Exit codes follow one discipline everywhere: 0 on success, 1 for usage
and input errors, 2 for pipeline, judging, or validation failures.
Model endpoints are resolved from a JSON registry file by id; API keys
come from ``<PROVIDER_ID>_API_KEY`` environment variables only.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .corpus import (
    CorpusError,
    CorpusParseError,
    CorpusValidationError,
    Medium,
    WorkMeta,
    analysis_from_dict,
    load_corpus,
    meta_from_dict,
    serialize_key_value,
)
from .gateway import CassetteMissError, Cassette, GatewayError, GatewayMode, GenerationParams, ModelEndpoint
from .judging import (
    JudgeError,
    ScoreValidationError,
    default_rubric,
    judge_analysis,
    load_cells,
    score_to_dict,
    summarize,
    summary_to_dict,
)
from .pipeline import (
    PipelineConfig,
    PipelineError,
    analyze_work,
    batch_analyze,
    run_to_dict,
)
from .render import OutputFormat, RenderOptions, analysis_report, comparison_report

__all__ = ["cli", "main", "entry"]


class CliError(Exception):
    """Usage or input problem; exits 1."""

    exit_code = 1


class RunFailure(CliError):
    """Pipeline, judging, or validation failure; exits 2."""

    exit_code = 2


def _read_text(path: str, what: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {what} {path}: {exc}") from exc


def _read_json(path: str, what: str) -> object:
    text = _read_text(path, what)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{what} {path} is not valid JSON: {exc}") from exc


def _write_text(dest: str, text: str) -> None:
    if dest == "-":
        click.echo(text, nl=False)
        return
    try:
        Path(dest).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {dest}: {exc}") from exc


def _load_endpoints(path: str) -> dict[str, ModelEndpoint]:
    data = _read_json(path, "endpoint registry")
    if not isinstance(data, dict):
        raise CliError(f"endpoint registry {path} must be a JSON object")
    registry: dict[str, ModelEndpoint] = {}
    for endpoint_id, item in data.items():
        if not isinstance(item, dict):
            raise CliError(f"endpoint {endpoint_id!r} in {path} must be an object")
        try:
            params = GenerationParams(
                temperature=item.get("temperature", 0.7),
                max_tokens=item.get("max_tokens", 1024),
                seed=item.get("seed"),
            )
            registry[endpoint_id] = ModelEndpoint(
                provider_id=item["provider_id"],
                model_name=item["model_name"],
                base_url=item["base_url"],
                params=params,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError(f"endpoint {endpoint_id!r} in {path} is invalid: {exc}") from exc
    return registry


def _resolve(registry: dict[str, ModelEndpoint], endpoint_id: str) -> ModelEndpoint:
    try:
        return registry[endpoint_id]
    except KeyError:
        available = ", ".join(sorted(registry)) or "none"
        raise CliError(
            f"unknown endpoint id {endpoint_id!r}; available: {available}"
        ) from None


def _load_corpus_file(path: str):
    try:
        return load_corpus(_read_text(path, "corpus"))
    except CorpusError as exc:
        raise CliError(f"corpus {path}: {exc}") from exc


_MODE = click.Choice([m.value for m in GatewayMode])
_MEDIUM = click.Choice([m.value for m in Medium])
_FORMAT = click.Choice([f.value for f in OutputFormat])


@click.group()
def cli() -> None:
    """Semiotic square analysis pipeline, judging, and reports."""


def _pipeline_config(
    registry: dict[str, ModelEndpoint],
    pi1: str,
    pi2: str,
    examples_n: int,
    seed: int,
    max_repair_rounds: int,
    mode: str,
    cassette: str | None,
) -> PipelineConfig:
    gateway_mode = GatewayMode(mode)
    if gateway_mode is not GatewayMode.LIVE and cassette is None:
        raise CliError(f"--mode {mode} requires --cassette")
    return PipelineConfig(
        summarizer=_resolve(registry, pi1),
        analyst=_resolve(registry, pi2),
        examples_n=examples_n,
        example_seed=seed,
        max_repair_rounds=max_repair_rounds,
        mode=gateway_mode,
        cassette_path=Path(cassette) if cassette else None,
    )


@cli.command()
@click.option("--work-title", required=True, help="Title of the work to analyze.")
@click.option("--author", default="unknown", show_default=True)
@click.option("--medium", type=_MEDIUM, default=Medium.OTHER.value, show_default=True)
@click.option("--culture", default="", help="Cultural context tag.")
@click.option("--era", default="", help="Era tag.")
@click.option("--corpus", "corpus_path", required=True, type=click.Path(), help="Corpus JSON file supplying prompt examples.")
@click.option("--endpoints", "endpoints_path", required=True, type=click.Path(), help="Endpoint registry JSON file.")
@click.option("--pi1", required=True, help="Endpoint id for the knowledge-summary stage.")
@click.option("--pi2", required=True, help="Endpoint id for the analysis stage.")
@click.option("--examples-n", type=int, default=0, show_default=True, help="How many corpus examples to include in the prompt.")
@click.option("--seed", type=int, default=0, show_default=True, help="Example selection seed.")
@click.option("--max-repair-rounds", type=int, default=2, show_default=True)
@click.option("--mode", type=_MODE, required=True, help="live, record, or replay.")
@click.option("--cassette", type=click.Path(), default=None, help="Cassette file for record and replay modes.")
@click.option("--out", required=True, help="Report destination; - for stdout.")
@click.option("--format", "format_", type=_FORMAT, default=OutputFormat.MARKDOWN.value, show_default=True)
@click.option("--run-out", type=click.Path(), default=None, help="Also write the full run record as JSON.")
def analyze(
    work_title: str,
    author: str,
    medium: str,
    culture: str,
    era: str,
    corpus_path: str,
    endpoints_path: str,
    pi1: str,
    pi2: str,
    examples_n: int,
    seed: int,
    max_repair_rounds: int,
    mode: str,
    cassette: str | None,
    out: str,
    format_: str,
    run_out: str | None,
) -> None:
    """Run the two-stage pipeline for one work and write its report."""
    registry = _load_endpoints(endpoints_path)
    corpus = _load_corpus_file(corpus_path)
    work = WorkMeta(
        title=work_title,
        author=author,
        medium=Medium(medium),
        culture=culture,
        era=era,
    )
    config = _pipeline_config(
        registry, pi1, pi2, examples_n, seed, max_repair_rounds, mode, cassette
    )
    try:
        run = analyze_work(work, corpus, config)
    except CassetteMissError as exc:
        raise RunFailure(f"cassette miss: {exc} (digest {exc.digest})") from exc
    except (GatewayError, PipelineError) as exc:
        raise RunFailure(str(exc)) from exc
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if run_out:
        _write_text(run_out, json.dumps(run_to_dict(run), ensure_ascii=False, indent=2) + "\n")
    if run.failure:
        detail = "; ".join(run.failure.problems[:5])
        suffix = f": {detail}" if detail else ""
        raise RunFailure(f"{run.failure.message}{suffix}")
    assert run.analysis is not None
    report = analysis_report(run.analysis, RenderOptions(format=OutputFormat(format_)))
    _write_text(out, report)


@cli.command()
@click.option("--works", "works_path", required=True, type=click.Path(), help="JSON array of work metadata objects.")
@click.option("--corpus", "corpus_path", required=True, type=click.Path())
@click.option("--endpoints", "endpoints_path", required=True, type=click.Path())
@click.option("--pi1", required=True)
@click.option("--pi2", required=True)
@click.option("--examples-n", type=int, default=0, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-repair-rounds", type=int, default=2, show_default=True)
@click.option("--mode", type=_MODE, required=True)
@click.option("--cassette", type=click.Path(), default=None)
@click.option("--parallelism", type=int, default=1, show_default=True)
@click.option("--out", required=True, help="Destination for run records, one JSON object per line.")
def batch(
    works_path: str,
    corpus_path: str,
    endpoints_path: str,
    pi1: str,
    pi2: str,
    examples_n: int,
    seed: int,
    max_repair_rounds: int,
    mode: str,
    cassette: str | None,
    parallelism: int,
    out: str,
) -> None:
    """Analyze many works; failures are recorded, not fatal per work."""
    registry = _load_endpoints(endpoints_path)
    corpus = _load_corpus_file(corpus_path)
    raw_works = _read_json(works_path, "works file")
    if not isinstance(raw_works, list):
        raise CliError(f"works file {works_path} must be a JSON array")
    try:
        works = [meta_from_dict(item, f"works[{i}]") for i, item in enumerate(raw_works)]
    except CorpusParseError as exc:
        raise CliError(f"works file {works_path}: {exc}") from exc
    config = _pipeline_config(
        registry, pi1, pi2, examples_n, seed, max_repair_rounds, mode, cassette
    )
    if parallelism < 1:
        raise CliError(f"--parallelism must be positive, got {parallelism}")
    runs = batch_analyze(works, corpus, config, parallelism=parallelism)
    lines = [json.dumps(run_to_dict(run), ensure_ascii=False) for run in runs]
    _write_text(out, "\n".join(lines) + "\n")
    failed = [run.work.work_id for run in runs if run.failure]
    if failed:
        raise RunFailure(f"{len(failed)} of {len(runs)} runs failed: {', '.join(failed)}")


@cli.command()
@click.option("--analysis", "analysis_path", required=True, type=click.Path(), help="Analysis to score: canonical JSON or a Key: Value block.")
@click.option("--work-title", required=True)
@click.option("--endpoints", "endpoints_path", required=True, type=click.Path())
@click.option("--judge", "judge_id", required=True, help="Endpoint id of the judge model.")
@click.option("--mode", type=_MODE, required=True)
@click.option("--cassette", type=click.Path(), default=None)
@click.option("--out", required=True, help="Score JSON destination; - for stdout.")
def judge(
    analysis_path: str,
    work_title: str,
    endpoints_path: str,
    judge_id: str,
    mode: str,
    cassette: str | None,
    out: str,
) -> None:
    """Score one analysis with a judge model under the standard rubric."""
    registry = _load_endpoints(endpoints_path)
    endpoint = _resolve(registry, judge_id)
    text = _read_text(analysis_path, "analysis file")
    if text.lstrip().startswith("{"):
        try:
            analysis = analysis_from_dict(json.loads(text))
            text = serialize_key_value(analysis)
        except (json.JSONDecodeError, CorpusError, ValueError) as exc:
            raise CliError(f"malformed analysis file {analysis_path}: {exc}") from exc
    if not text.strip():
        raise CliError(f"analysis file {analysis_path} is empty")
    gateway_mode = GatewayMode(mode)
    if gateway_mode is not GatewayMode.LIVE and cassette is None:
        raise CliError(f"--mode {mode} requires --cassette")
    cassette_store = Cassette(cassette) if cassette else None
    work = WorkMeta(title=work_title)
    try:
        score = judge_analysis(
            text, work, default_rubric(), endpoint, gateway_mode, cassette_store
        )
    except CassetteMissError as exc:
        raise RunFailure(f"cassette miss: {exc} (digest {exc.digest})") from exc
    except (GatewayError, JudgeError) as exc:
        raise RunFailure(str(exc)) from exc
    _write_text(out, json.dumps(score_to_dict(score), ensure_ascii=False, indent=2) + "\n")


@cli.command()
@click.option("--cells", "cells_path", required=True, type=click.Path(), help="Comparison cells JSON: an array, or an object with cells and a previously reported tally.")
@click.option("--out", required=True, help="Markdown report destination; - for stdout.")
@click.option("--summary-out", type=click.Path(), default=None, help="Also write the tally as JSON.")
def compare(cells_path: str, out: str, summary_out: str | None) -> None:
    """Recount expert-versus-framework cells and render the comparison."""
    data = _read_json(cells_path, "cells file")
    reported = None
    if isinstance(data, dict):
        reported = data.get("reported")
        if reported is not None and not isinstance(reported, dict):
            raise CliError(f"cells file {cells_path}: 'reported' must be an object")
        data = data.get("cells")
    try:
        cells = load_cells(data)
        summary = summarize(cells)
        report = comparison_report(cells, reported=reported)
    except ValueError as exc:
        raise CliError(f"cells file {cells_path}: {exc}") from exc
    _write_text(out, report)
    if summary_out:
        _write_text(
            summary_out,
            json.dumps(summary_to_dict(summary), ensure_ascii=False, indent=2) + "\n",
        )


@cli.command(name="corpus-validate")
@click.option("--corpus", "corpus_path", required=True, type=click.Path())
def corpus_validate(corpus_path: str) -> None:
    """Validate every corpus entry, reporting all violations."""
    text = _read_text(corpus_path, "corpus")
    try:
        corpus = load_corpus(text)
    except CorpusParseError as exc:
        raise CliError(f"corpus {corpus_path}: {exc}") from exc
    except CorpusValidationError as exc:
        for work_id, problems in exc.entries:
            for problem in problems:
                click.echo(f"{work_id}: {problem}", err=True)
        raise RunFailure(f"corpus {corpus_path}: {exc}") from exc
    click.echo(f"{len(corpus)} entries valid")


def main(argv: list[str] | None = None) -> int:
    """Run the CLI and map every failure onto the exit-code discipline."""
    try:
        cli.main(args=argv, prog_name="semiosquare", standalone_mode=False)
    except CliError as exc:
        click.echo(f"error: {exc}", err=True)
        return exc.exit_code
    except click.UsageError as exc:
        if exc.ctx is not None:
            click.echo(exc.ctx.get_usage(), err=True)
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.exceptions.Abort:
        return 1
    return 0


def entry() -> None:
    sys.exit(main())
