#!/usr/bin/env python3
"""Rebuild data/cassettes/journey_to_the_west.jsonl.

Records the two requests of a pipeline run for Journey to the West
against a scripted transport, then replays the cassette to prove the
recording satisfies the run.  The pipeline configuration here must stay
in step with the demo command in the README: endpoints from
data/endpoints.json, three examples, seed 7.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from semiosquare.corpus import Medium, WorkMeta, load_corpus
from semiosquare.gateway import GatewayMode, GenerationParams, ModelEndpoint
from semiosquare.pipeline import PipelineConfig, analyze_work
from semiosquare.square import ROLE_ORDER

ROOT = Path(__file__).resolve().parent.parent
CASSETTE = ROOT / "data" / "cassettes" / "journey_to_the_west.jsonl"

TITLE = "Journey to the West"

KNOWLEDGE = (
    "Journey to the West, the sixteenth-century Chinese novel attributed to "
    "Wu Cheng'en, follows the monk Tang Sanzang on a pilgrimage from the Tang "
    "capital to India to fetch Buddhist scriptures. He travels with three "
    "supernatural disciples serving out their penances: Sun Wukong, the Monkey "
    "King who once rebelled against heaven and now wears a golden headband "
    "that curbs him; the pig spirit Zhu Bajie, gluttonous and reluctant; and "
    "the steady river ogre Sha Wujing. Across eighty-one tribulations the "
    "company battles demons who hope to gain immortality by eating the monk, "
    "while bodhisattvas such as Guanyin intervene to keep the quest on its "
    "road. The novel holds spiritual aspiration and discipline in tension "
    "with appetite, mischief, and defiance of authority, ending with the "
    "pilgrims enlightened and rewarded."
)


def _load_endpoints(path: Path) -> dict[str, ModelEndpoint]:
    registry = {}
    for endpoint_id, item in json.loads(path.read_text(encoding="utf-8")).items():
        registry[endpoint_id] = ModelEndpoint(
            provider_id=item["provider_id"],
            model_name=item["model_name"],
            base_url=item["base_url"],
            params=GenerationParams(
                temperature=item.get("temperature", 0.7),
                max_tokens=item.get("max_tokens", 1024),
                seed=item.get("seed"),
            ),
        )
    return registry


def _analysis_block(corpus) -> str:
    """Render the corpus square for the title as a model reply would:
    the instruction's template keys only, no provenance or id lines."""
    entry = next(a for a in corpus if a.meta.title == TITLE)
    lines = [f"Work: {TITLE}"]
    for role in ROLE_ORDER:
        term = entry.square.term(role)
        lines.append(f"{role.value}: {term.label}")
        lines.append(f"{role.value}-Gloss: {term.gloss}")
        if term.exemplars:
            lines.append(f"{role.value}-Exemplars: " + "; ".join(term.exemplars))
    for relation in entry.square.relations:
        first, second = relation.endpoints
        joiner = "->" if relation.kind.value == "implication" else "vs"
        lines.append(
            f"Relation[{first.value} {joiner} {second.value}]: {relation.explanation}"
        )
    lines.append(f"Summary: {entry.square.summary}")
    return "\n".join(lines) + "\n"


def main() -> int:
    registry = _load_endpoints(ROOT / "data" / "endpoints.json")
    corpus = load_corpus((ROOT / "data" / "corpus.json").read_text(encoding="utf-8"))
    block = _analysis_block(corpus)

    def scripted(endpoint: ModelEndpoint, messages) -> str:
        if endpoint.model_name == "stub-summarizer":
            return KNOWLEDGE
        if endpoint.model_name == "stub-analyst":
            return block
        raise AssertionError(f"unexpected endpoint {endpoint.model_name}")

    work = WorkMeta(title=TITLE, author="Wu Cheng'en", medium=Medium.NOVEL)
    if CASSETTE.exists():
        CASSETTE.unlink()
    config = PipelineConfig(
        summarizer=registry["summarizer"],
        analyst=registry["analyst"],
        examples_n=3,
        example_seed=7,
        mode=GatewayMode.RECORD,
        cassette_path=CASSETTE,
    )
    recorded = analyze_work(work, corpus, config, transport=scripted)
    if recorded.failure is not None:
        raise SystemExit(f"recording run failed: {recorded.failure.message}")

    replay_config = PipelineConfig(
        summarizer=config.summarizer,
        analyst=config.analyst,
        examples_n=config.examples_n,
        example_seed=config.example_seed,
        mode=GatewayMode.REPLAY,
        cassette_path=CASSETTE,
    )
    replayed = analyze_work(work, corpus, replay_config)
    assert replayed.failure is None and replayed.analysis is not None
    assert replayed.analysis.square == recorded.analysis.square
    assert replayed.repair_rounds_used == 0
    labels = {
        role.value: replayed.analysis.square.term(role).label for role in ROLE_ORDER
    }
    print(f"wrote {CASSETTE} ({len(CASSETTE.read_text().splitlines())} records)")
    for role, label in labels.items():
        print(f"  {role}: {label}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
