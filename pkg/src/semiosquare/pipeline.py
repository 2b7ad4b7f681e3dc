"""Two-stage analysis pipeline.

Stage one asks a summarizer model for background knowledge about the
work; stage two hands that knowledge, the expert context, the
instruction, and a few corpus examples to an analyst model and expects a
Key: Value block back.  Malformed or invalid replies trigger a bounded
repair loop that restates the problems and asks again.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .corpus import (
    KeyValueParseError,
    Provenance,
    ProvenanceKind,
    WorkAnalysis,
    WorkMeta,
    analysis_to_dict,
    meta_to_dict,
    parse_key_value,
    select_examples,
)
from .gateway import Cassette, GatewayMode, ModelEndpoint, Transport, complete
from .prompting import (
    Message,
    MessageRole,
    build_prompt,
    default_context,
    default_instruction,
    render_messages,
)
from .square import validate_square

__all__ = [
    "PipelineError",
    "PipelineConfig",
    "PipelineFailure",
    "PipelineRun",
    "generate_summary",
    "analyze_work",
    "batch_analyze",
    "run_to_dict",
]

logger = logging.getLogger(__name__)

_SUMMARY_CONTEXT = (
    "You are a well-read literary assistant. You give accurate, compact "
    "briefings on narrative works from memory."
)


class PipelineError(Exception):
    """A pipeline stage produced something unusable."""


@dataclass(frozen=True)
class PipelineConfig:
    """Settings for one analysis run.

    ``summarizer`` drives the knowledge stage, ``analyst`` the square
    construction.  ``max_repair_rounds`` bounds how many times a bad
    reply is sent back for correction.
    """

    summarizer: ModelEndpoint
    analyst: ModelEndpoint
    examples_n: int = 0
    example_seed: int = 0
    max_repair_rounds: int = 2
    mode: GatewayMode = GatewayMode.REPLAY
    cassette_path: Path | None = None

    def __post_init__(self) -> None:
        if self.examples_n < 0:
            raise ValueError(f"examples_n must be nonnegative, got {self.examples_n}")
        if self.max_repair_rounds < 0:
            raise ValueError(
                f"max_repair_rounds must be nonnegative, got {self.max_repair_rounds}"
            )


@dataclass(frozen=True)
class PipelineFailure:
    """Why a run ended without an analysis."""

    stage: str
    message: str
    problems: tuple[str, ...] = ()


@dataclass(frozen=True)
class PipelineRun:
    """Everything a run produced.  Exactly one of ``analysis`` and
    ``failure`` is set."""

    work: WorkMeta
    knowledge: str
    raw_response: str
    analysis: WorkAnalysis | None
    repair_rounds_used: int
    failure: PipelineFailure | None


def _summary_messages(work: WorkMeta) -> tuple[Message, Message]:
    by_author = f" by {work.author}" if work.author not in ("", "unknown") else ""
    user = (
        f'Give a concise briefing on "{work.title}"{by_author}: the plot, the '
        "principal characters, and the values held in tension. Plain prose "
        "only; no structured analysis."
    )
    return (
        Message(role=MessageRole.SYSTEM, content=_SUMMARY_CONTEXT),
        Message(role=MessageRole.USER, content=user),
    )


def generate_summary(
    work: WorkMeta,
    summarizer: ModelEndpoint,
    mode: GatewayMode,
    cassette: Cassette | None = None,
    transport: Transport | None = None,
) -> str:
    """Run the knowledge stage and return its nonempty summary text.

    Gateway errors propagate; an empty completion raises
    :class:`PipelineError`.
    """
    if not work.title.strip():
        raise ValueError("work title is empty")
    text = complete(summarizer, _summary_messages(work), mode, cassette, transport)
    if not text.strip():
        raise PipelineError("empty knowledge summary")
    return text


def _repair_messages(
    context: str, original_user: str, problems: list[str]
) -> tuple[Message, Message]:
    listing = "\n".join(f"- {problem}" for problem in problems)
    user = (
        original_user
        + "\n\nThe previous response was not a valid analysis. Problems found:\n"
        + listing
        + "\nRe-emit the complete Key: Value block with every problem corrected."
    )
    return (
        Message(role=MessageRole.SYSTEM, content=context),
        Message(role=MessageRole.USER, content=user),
    )


def _open_cassette(config: PipelineConfig) -> Cassette | None:
    if config.mode is GatewayMode.LIVE:
        return None
    if config.cassette_path is None:
        raise ValueError(f"{config.mode.value} mode requires a cassette path")
    return Cassette(config.cassette_path)


def analyze_work(
    work: WorkMeta,
    corpus: list[WorkAnalysis],
    config: PipelineConfig,
    transport: Transport | None = None,
    cassette: Cassette | None = None,
) -> PipelineRun:
    """Run both stages for one work.

    The returned analysis carries the caller's metadata and a generated
    provenance naming the analyst model; whatever metadata the model
    echoed in its block is discarded.  Parse and validation problems are
    sent back for up to ``config.max_repair_rounds`` corrections, after
    which the run is returned as a failure.  Gateway errors propagate.
    """
    if config.summarizer == config.analyst:
        logger.warning(
            "summarizer and analyst are the same endpoint (%s); stage "
            "separation is doing no work",
            config.analyst.model_name,
        )
    if cassette is None:
        cassette = _open_cassette(config)
    knowledge = generate_summary(
        work, config.summarizer, config.mode, cassette, transport
    )
    examples = select_examples(corpus, config.examples_n, config.example_seed)
    bundle = build_prompt(
        knowledge, default_context(), default_instruction(), examples
    )
    messages = render_messages(bundle)
    original_user = messages[1].content

    raw = ""
    problems: list[str] = []
    for round_index in range(config.max_repair_rounds + 1):
        raw = complete(config.analyst, messages, config.mode, cassette, transport)
        try:
            parsed = parse_key_value(raw)
        except KeyValueParseError as exc:
            problems = list(exc.problems)
        else:
            violations = validate_square(parsed.square)
            if not violations:
                analysis = WorkAnalysis(
                    meta=work,
                    provenance=Provenance(
                        kind=ProvenanceKind.GENERATED,
                        source=config.analyst.model_name,
                    ),
                    square=parsed.square,
                )
                return PipelineRun(
                    work=work,
                    knowledge=knowledge,
                    raw_response=raw,
                    analysis=analysis,
                    repair_rounds_used=round_index,
                    failure=None,
                )
            problems = [str(v) for v in violations]
        if round_index < config.max_repair_rounds:
            logger.info(
                "reply for %s rejected (%d problems), repair round %d",
                work.work_id,
                len(problems),
                round_index + 1,
            )
            messages = _repair_messages(bundle.context, original_user, problems)

    return PipelineRun(
        work=work,
        knowledge=knowledge,
        raw_response=raw,
        analysis=None,
        repair_rounds_used=config.max_repair_rounds,
        failure=PipelineFailure(
            stage="analysis",
            message=f"no valid analysis after {config.max_repair_rounds} repair rounds",
            problems=tuple(problems),
        ),
    )


def batch_analyze(
    works: list[WorkMeta],
    corpus: list[WorkAnalysis],
    config: PipelineConfig,
    parallelism: int = 1,
    transport: Transport | None = None,
) -> list[PipelineRun]:
    """Analyze many works, preserving input order in the results.

    Runs share one cassette.  A failed run never aborts the batch:
    exceptions are captured as failure runs for their work.
    """
    if parallelism < 1:
        raise ValueError(f"parallelism must be positive, got {parallelism}")
    cassette = _open_cassette(config)

    def one(work: WorkMeta) -> PipelineRun:
        try:
            return analyze_work(
                work, corpus, config, transport=transport, cassette=cassette
            )
        except Exception as exc:  # noqa: BLE001 - isolate per-work failures
            logger.warning("run for %s failed: %s", work.work_id, exc)
            return PipelineRun(
                work=work,
                knowledge="",
                raw_response="",
                analysis=None,
                repair_rounds_used=0,
                failure=PipelineFailure(stage="gateway", message=str(exc)),
            )

    if parallelism == 1:
        return [one(work) for work in works]
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(one, works))


def run_to_dict(run: PipelineRun) -> dict:
    """JSON-friendly view of a run, for batch output files."""
    return {
        "work": meta_to_dict(run.work),
        "knowledge": run.knowledge,
        "raw_response": run.raw_response,
        "analysis": analysis_to_dict(run.analysis) if run.analysis else None,
        "repair_rounds_used": run.repair_rounds_used,
        "failure": (
            {
                "stage": run.failure.stage,
                "message": run.failure.message,
                "problems": list(run.failure.problems),
            }
            if run.failure
            else None
        ),
    }
