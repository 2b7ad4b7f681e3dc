"""Rubric-based scoring of analyses and the expert comparison.

A judge model scores an analysis against a weighted rubric and answers
in strict JSON.  Scores against expert baselines roll up into a
comparison summary: how often the pipeline's analyses score higher than,
level with, or lower than the expert ones.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, replace
from enum import Enum

from .corpus import WorkMeta
from .gateway import Cassette, GatewayMode, ModelEndpoint, Transport, complete
from .prompting import Message, MessageRole

__all__ = [
    "RubricDimension",
    "JudgeRubric",
    "JudgeScore",
    "JudgeError",
    "JudgeResponseError",
    "ScoreValidationError",
    "Outcome",
    "ComparisonCell",
    "ComparisonSummary",
    "default_rubric",
    "judge_analysis",
    "validate_scores",
    "classify",
    "make_cell",
    "summarize",
    "load_cells",
    "score_to_dict",
    "summary_to_dict",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RubricDimension:
    """One scoring dimension: display name, stable JSON slug, what the
    judge should look for, and its weight in points."""

    name: str
    slug: str
    intent: str
    max_points: int


@dataclass(frozen=True)
class JudgeRubric:
    dimensions: tuple[RubricDimension, ...]

    @property
    def total(self) -> int:
        return sum(d.max_points for d in self.dimensions)


_DEFAULT_RUBRIC = JudgeRubric(
    dimensions=(
        RubricDimension(
            name="Core Binary Opposition Identification and Accuracy",
            slug="core_binary_opposition",
            intent=(
                "accuracy in identifying the core contradictions that organize "
                "the work"
            ),
            max_points=25,
        ),
        RubricDimension(
            name="Extension of Oppositional Relationships",
            slug="oppositional_extension",
            intent=(
                "depth in expanding and reconciling the binary oppositions "
                "beyond their first statement"
            ),
            max_points=25,
        ),
        RubricDimension(
            name="Completeness and Logicality of the Semiotic Square",
            slug="square_completeness",
            intent=(
                "logical coherence and structural integrity of the completed "
                "square"
            ),
            max_points=20,
        ),
        RubricDimension(
            name="Integration of Textual Details",
            slug="textual_detail",
            intent=(
                "evidence-based alignment of the analysis with the specifics "
                "of the text"
            ),
            max_points=15,
        ),
        RubricDimension(
            name="Innovation and Inspirational Value",
            slug="innovation",
            intent="novelty of the reading and the interpretative depth it opens",
            max_points=15,
        ),
    )
)


def default_rubric() -> JudgeRubric:
    """The standard five-dimension, 100-point rubric."""
    return _DEFAULT_RUBRIC


@dataclass(frozen=True)
class JudgeScore:
    """A judged result: per-dimension (name, points) pairs in rubric
    order, their total, and the judge's rationale."""

    per_dimension: tuple[tuple[str, int], ...]
    total: int
    rationale: str


class JudgeError(Exception):
    """Base class for judging failures."""


class JudgeResponseError(JudgeError):
    """The judge's reply was not the required JSON, even after a retry.

    ``raw_text`` preserves the offending reply for diagnosis.
    """

    def __init__(self, message: str, raw_text: str):
        super().__init__(message)
        self.raw_text = raw_text


class ScoreValidationError(JudgeError):
    """Parsed scores break the rubric's bounds."""


def validate_scores(
    rubric: JudgeRubric, scores: dict[str, int], rationale: str
) -> JudgeScore:
    """Check parsed scores against the rubric and assemble the result.

    Every dimension must be present and within [0, max_points]; the
    total is recomputed here rather than trusted from the judge.
    """
    per_dimension = []
    for dimension in rubric.dimensions:
        if dimension.slug not in scores:
            raise ScoreValidationError(f"missing score for {dimension.slug}")
        points = scores[dimension.slug]
        if not 0 <= points <= dimension.max_points:
            raise ScoreValidationError(
                f"{dimension.slug} score {points} outside [0, {dimension.max_points}]"
            )
        per_dimension.append((dimension.name, points))
    return JudgeScore(
        per_dimension=tuple(per_dimension),
        total=sum(points for _, points in per_dimension),
        rationale=rationale,
    )


_JUDGE_CONTEXT = (
    "You are an exacting grader of literary analyses. You score strictly "
    "against the rubric you are given and reply in JSON only."
)


def _judge_messages(
    analysis_text: str, work: WorkMeta, rubric: JudgeRubric
) -> tuple[Message, Message]:
    rubric_lines = "\n".join(
        f"- {d.name} (0-{d.max_points} points; JSON key \"{d.slug}\"): {d.intent}"
        for d in rubric.dimensions
    )
    schema_scores = ", ".join(f'"{d.slug}": <integer>' for d in rubric.dimensions)
    user = (
        f"Work under analysis: {work.title}\n\n"
        f"Score the following semiotic square analysis on each rubric "
        f"dimension. The dimensions and their weights (out of "
        f"{rubric.total} total points):\n{rubric_lines}\n\n"
        f"Analysis to score:\n{analysis_text}\n\n"
        f"Reply with only a JSON object of this exact shape: "
        f'{{"scores": {{{schema_scores}}}, "rationale": "<short justification>"}}'
    )
    return (
        Message(role=MessageRole.SYSTEM, content=_JUDGE_CONTEXT),
        Message(role=MessageRole.USER, content=user),
    )


class _MalformedReply(ValueError):
    pass


def _strip_fences(text: str) -> str:
    stripped = text.strip()
    if stripped.startswith("```"):
        first_break = stripped.find("\n")
        stripped = stripped[first_break + 1 :] if first_break != -1 else ""
        if stripped.rstrip().endswith("```"):
            stripped = stripped.rstrip()[:-3]
    return stripped.strip()


def _parse_reply(text: str, rubric: JudgeRubric) -> tuple[dict[str, int], str]:
    """Decode the judge's JSON, tolerating code fences and surrounding
    prose but nothing structurally loose."""
    candidate = _strip_fences(text)
    try:
        data = json.loads(candidate)
    except json.JSONDecodeError:
        start, end = candidate.find("{"), candidate.rfind("}")
        if start == -1 or end <= start:
            raise _MalformedReply("no JSON object in reply") from None
        try:
            data = json.loads(candidate[start : end + 1])
        except json.JSONDecodeError as exc:
            raise _MalformedReply(f"unparseable JSON in reply: {exc}") from None
    if not isinstance(data, dict):
        raise _MalformedReply("reply is not a JSON object")
    if set(data) != {"scores", "rationale"}:
        raise _MalformedReply('reply must carry exactly "scores" and "rationale"')
    raw_scores = data["scores"]
    rationale = data["rationale"]
    if not isinstance(raw_scores, dict):
        raise _MalformedReply('"scores" is not an object')
    if not isinstance(rationale, str):
        raise _MalformedReply('"rationale" is not a string')
    expected = {d.slug for d in rubric.dimensions}
    if set(raw_scores) != expected:
        raise _MalformedReply(
            f'"scores" keys {sorted(raw_scores)} do not match the rubric'
        )
    scores: dict[str, int] = {}
    for slug, value in raw_scores.items():
        if isinstance(value, bool) or not isinstance(value, int):
            raise _MalformedReply(f"score for {slug} is not an integer")
        scores[slug] = value
    return scores, rationale


def judge_analysis(
    analysis_text: str,
    work: WorkMeta,
    rubric: JudgeRubric,
    judge: ModelEndpoint,
    mode: GatewayMode,
    cassette: Cassette | None = None,
    transport: Transport | None = None,
) -> JudgeScore:
    """Score one analysis with a judge model.

    Judging always runs at temperature 0.0 regardless of the endpoint's
    configured parameters.  A reply that is not the required JSON gets
    exactly one retry with a stricter reminder; out-of-range scores are
    a validation error, not a malformed reply, and are never retried.
    """
    if not analysis_text.strip():
        raise ValueError("analysis text is empty")
    deterministic = replace(judge, params=replace(judge.params, temperature=0.0))
    messages = _judge_messages(analysis_text, work, rubric)
    text = complete(deterministic, messages, mode, cassette, transport)
    try:
        scores, rationale = _parse_reply(text, rubric)
    except _MalformedReply as first:
        logger.info("judge reply malformed (%s), retrying once", first)
        system, user = messages
        retry = (
            system,
            Message(
                role=MessageRole.USER,
                content=user.content
                + "\n\nYour previous reply was not the required JSON. Reply with "
                "only the JSON object, no prose and no code fences.",
            ),
        )
        text = complete(deterministic, retry, mode, cassette, transport)
        try:
            scores, rationale = _parse_reply(text, rubric)
        except _MalformedReply as second:
            raise JudgeResponseError(
                f"judge reply unusable after retry: {second}", raw_text=text
            ) from second
    return validate_scores(rubric, scores, rationale)


# --- expert comparison -------------------------------------------------------


class Outcome(Enum):
    """How a pipeline score compares with the expert baseline."""

    HIGHER = "higher"
    PAR = "par"
    LOWER = "lower"


@dataclass(frozen=True)
class ComparisonCell:
    """One (work, judge) pairing of expert and pipeline totals."""

    work_id: str
    judge_model: str
    expert_score: int
    framework_score: int
    outcome: Outcome


@dataclass(frozen=True)
class ComparisonSummary:
    cells: tuple[ComparisonCell, ...]
    higher: int
    par: int
    lower: int
    pct_higher: float
    pct_higher_or_par: float


def classify(expert_score: int, framework_score: int, total: int = 100) -> Outcome:
    """Compare two totals on the same scale."""
    for name, score in (("expert", expert_score), ("framework", framework_score)):
        if not 0 <= score <= total:
            raise ValueError(f"{name} score {score} outside [0, {total}]")
    if framework_score > expert_score:
        return Outcome.HIGHER
    if framework_score == expert_score:
        return Outcome.PAR
    return Outcome.LOWER


def make_cell(
    work_id: str,
    judge_model: str,
    expert_score: int,
    framework_score: int,
    total: int = 100,
) -> ComparisonCell:
    return ComparisonCell(
        work_id=work_id,
        judge_model=judge_model,
        expert_score=expert_score,
        framework_score=framework_score,
        outcome=classify(expert_score, framework_score, total),
    )


def summarize(cells: list[ComparisonCell]) -> ComparisonSummary:
    """Tally outcomes over a nonempty cell collection.

    Percentages are exact floats over the cell count; rounding is left
    to the renderers.
    """
    if not cells:
        raise ValueError("no comparison cells to summarize")
    higher = sum(1 for cell in cells if cell.outcome is Outcome.HIGHER)
    par = sum(1 for cell in cells if cell.outcome is Outcome.PAR)
    lower = sum(1 for cell in cells if cell.outcome is Outcome.LOWER)
    count = len(cells)
    return ComparisonSummary(
        cells=tuple(cells),
        higher=higher,
        par=par,
        lower=lower,
        pct_higher=higher * 100.0 / count,
        pct_higher_or_par=(higher + par) * 100.0 / count,
    )


def load_cells(data: object) -> list[ComparisonCell]:
    """Decode comparison cells from their JSON form.

    Expects a list of objects with ``work``, ``judge``, ``expert_score``,
    and ``framework_score`` fields.
    """
    if not isinstance(data, list):
        raise ValueError(f"cells must be a JSON array, got {type(data).__name__}")
    cells = []
    for index, item in enumerate(data):
        if not isinstance(item, dict):
            raise ValueError(f"cells[{index}]: expected an object")
        try:
            work = item["work"]
            judge = item["judge"]
            expert_score = item["expert_score"]
            framework_score = item["framework_score"]
        except KeyError as exc:
            raise ValueError(f"cells[{index}]: missing field {exc.args[0]!r}") from None
        if not isinstance(work, str) or not isinstance(judge, str):
            raise ValueError(f"cells[{index}]: work and judge must be strings")
        for name, score in (("expert_score", expert_score), ("framework_score", framework_score)):
            if isinstance(score, bool) or not isinstance(score, int):
                raise ValueError(f"cells[{index}].{name}: expected an integer")
        cells.append(make_cell(work, judge, expert_score, framework_score))
    return cells


def score_to_dict(score: JudgeScore) -> dict:
    return {
        "per_dimension": [
            {"name": name, "points": points} for name, points in score.per_dimension
        ],
        "total": score.total,
        "rationale": score.rationale,
    }


def summary_to_dict(summary: ComparisonSummary) -> dict:
    return {
        "cells": len(summary.cells),
        "higher": summary.higher,
        "par": summary.par,
        "lower": summary.lower,
        "pct_higher": summary.pct_higher,
        "pct_higher_or_par": summary.pct_higher_or_par,
    }
