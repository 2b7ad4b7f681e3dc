"""Corpus records, the Key: Value block format, and example selection.

A corpus file is a UTF-8 JSON array of work analyses.  The Key: Value
block is the line-oriented rendering used in prompts and expected back
from the analyst model: one ``Key: value`` pair per line, values folded
over continuation lines indented by two spaces, LF line endings.
"""

from __future__ import annotations

import json
import random
import re
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .square import (
    ROLE_ORDER,
    Relation,
    RelationKind,
    SemioticSquare,
    SquareDecodeError,
    Term,
    TermRole,
    canonical_relation_set,
    square_from_dict,
    square_to_dict,
    validate_square,
)

__all__ = [
    "Medium",
    "MEDIUM_ORDER",
    "ProvenanceKind",
    "WorkMeta",
    "Provenance",
    "WorkAnalysis",
    "CorpusError",
    "CorpusParseError",
    "CorpusValidationError",
    "KeyValueParseError",
    "slugify",
    "analysis_to_dict",
    "analysis_from_dict",
    "meta_to_dict",
    "meta_from_dict",
    "load_corpus",
    "dump_corpus",
    "serialize_key_value",
    "parse_key_value",
    "select_examples",
]


class Medium(Enum):
    NOVEL = "novel"
    FILM = "film"
    PLAY = "play"
    OTHER = "other"


#: Stratification order for example selection.
MEDIUM_ORDER: tuple[Medium, ...] = (Medium.NOVEL, Medium.FILM, Medium.PLAY, Medium.OTHER)


class ProvenanceKind(Enum):
    EXPERT = "expert"
    GENERATED = "generated"


def slugify(title: str) -> str:
    """Derive a work id from a title: lowercase, runs of other characters
    collapsed to single dashes."""
    slug = re.sub(r"[^a-z0-9]+", "-", title.lower()).strip("-")
    return slug


@dataclass(frozen=True)
class WorkMeta:
    """Identity of a literary work.  ``work_id`` defaults to a slug of
    the title when left empty."""

    title: str
    author: str = "unknown"
    medium: Medium = Medium.OTHER
    culture: str = ""
    era: str = ""
    work_id: str = ""

    def __post_init__(self) -> None:
        if not self.work_id:
            object.__setattr__(self, "work_id", slugify(self.title))


@dataclass(frozen=True)
class Provenance:
    """Where an analysis came from: an expert citation or a model name."""

    kind: ProvenanceKind
    source: str


@dataclass(frozen=True)
class WorkAnalysis:
    meta: WorkMeta
    provenance: Provenance
    square: SemioticSquare


class CorpusError(Exception):
    """Base class for corpus loading and format errors."""


class CorpusParseError(CorpusError):
    """Malformed corpus encoding.  ``byte_offset`` locates JSON syntax
    errors; semantic decode errors leave it ``None``."""

    def __init__(self, message: str, byte_offset: int | None = None):
        super().__init__(message)
        self.byte_offset = byte_offset


class CorpusValidationError(CorpusError):
    """One or more corpus entries violate the structural invariants.

    ``entries`` pairs each offending work id with its problem list; every
    invalid entry is reported, not just the first.
    """

    def __init__(self, entries: list[tuple[str, tuple[str, ...]]]):
        self.entries = tuple(entries)
        first_id = entries[0][0] if entries else "?"
        super().__init__(
            f"{len(entries)} invalid corpus entr{'y' if len(entries) == 1 else 'ies'} "
            f"(first: {first_id})"
        )


class KeyValueParseError(CorpusError):
    """A Key: Value block could not be parsed into an analysis.

    ``problems`` holds one human-readable line per defect so a repair
    prompt can enumerate them.
    """

    def __init__(self, problems: list[str]):
        self.problems = tuple(problems)
        super().__init__("; ".join(problems))


def meta_to_dict(meta: WorkMeta) -> dict:
    return {
        "title": meta.title,
        "author": meta.author,
        "medium": meta.medium.value,
        "culture": meta.culture,
        "era": meta.era,
        "work_id": meta.work_id,
    }


def meta_from_dict(data: object, where: str = "meta") -> WorkMeta:
    if not isinstance(data, dict):
        raise CorpusParseError(f"{where}: expected an object, got {type(data).__name__}")
    try:
        title = data["title"]
    except KeyError:
        raise CorpusParseError(f"{where}: missing field 'title'") from None
    if not isinstance(title, str):
        raise CorpusParseError(f"{where}.title: expected a string")
    raw_medium = data.get("medium", Medium.OTHER.value)
    try:
        medium = Medium(raw_medium)
    except ValueError:
        raise CorpusParseError(f"{where}.medium: unknown medium {raw_medium!r}") from None
    for key in ("author", "culture", "era", "work_id"):
        if key in data and not isinstance(data[key], str):
            raise CorpusParseError(f"{where}.{key}: expected a string")
    return WorkMeta(
        title=title,
        author=data.get("author", "unknown"),
        medium=medium,
        culture=data.get("culture", ""),
        era=data.get("era", ""),
        work_id=data.get("work_id", ""),
    )


def analysis_to_dict(analysis: WorkAnalysis) -> dict:
    return {
        "meta": meta_to_dict(analysis.meta),
        "provenance": {
            "kind": analysis.provenance.kind.value,
            "source": analysis.provenance.source,
        },
        "square": square_to_dict(analysis.square),
    }


def analysis_from_dict(data: object, where: str = "analysis") -> WorkAnalysis:
    if not isinstance(data, dict):
        raise CorpusParseError(f"{where}: expected an object, got {type(data).__name__}")
    meta = meta_from_dict(data.get("meta"), f"{where}.meta")
    raw_provenance = data.get("provenance")
    if not isinstance(raw_provenance, dict):
        raise CorpusParseError(f"{where}.provenance: expected an object")
    raw_kind = raw_provenance.get("kind")
    try:
        kind = ProvenanceKind(raw_kind)
    except ValueError:
        raise CorpusParseError(
            f"{where}.provenance.kind: unknown kind {raw_kind!r}"
        ) from None
    source = raw_provenance.get("source", "")
    if not isinstance(source, str):
        raise CorpusParseError(f"{where}.provenance.source: expected a string")
    try:
        square = square_from_dict(data.get("square"))
    except SquareDecodeError as exc:
        raise CorpusParseError(f"{where}.square: {exc}") from exc
    return WorkAnalysis(
        meta=meta, provenance=Provenance(kind=kind, source=source), square=square
    )


def _entry_problems(analysis: WorkAnalysis) -> list[str]:
    problems = [str(v) for v in validate_square(analysis.square)]
    if not analysis.meta.title.strip():
        problems.append("empty-title: work title is empty")
    if not analysis.provenance.source.strip():
        problems.append("empty-source: provenance source is empty")
    return problems


def load_corpus(text: str | bytes) -> list[WorkAnalysis]:
    """Parse and validate a corpus file.

    Raises :class:`CorpusParseError` on malformed encoding (with the byte
    offset for JSON syntax errors) and :class:`CorpusValidationError`
    collecting every invariant violation, keyed by work id.  Work ids
    must be unique.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusParseError(f"corpus is not UTF-8: {exc}", exc.start) from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[: exc.pos].encode("utf-8"))
        raise CorpusParseError(
            f"corpus is not valid JSON at byte {offset}: {exc.msg}", offset
        ) from exc
    if not isinstance(data, list):
        raise CorpusParseError(
            f"corpus must be a JSON array, got {type(data).__name__}"
        )

    analyses = [
        analysis_from_dict(item, f"entry[{index}]") for index, item in enumerate(data)
    ]

    invalid: list[tuple[str, tuple[str, ...]]] = []
    seen_ids: set[str] = set()
    for analysis in analyses:
        work_id = analysis.meta.work_id
        problems = _entry_problems(analysis)
        if work_id in seen_ids:
            problems.append(f"duplicate-id: work id {work_id!r} appears more than once")
        seen_ids.add(work_id)
        if problems:
            invalid.append((work_id, tuple(problems)))
    if invalid:
        raise CorpusValidationError(invalid)
    return analyses


def dump_corpus(analyses: list[WorkAnalysis]) -> str:
    """Render a corpus back to its canonical JSON form."""
    payload = [analysis_to_dict(a) for a in analyses]
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


# --- Key: Value block format -------------------------------------------------

_GLOSS_SUFFIX = "-Gloss"
_EXEMPLARS_SUFFIX = "-Exemplars"
_EXEMPLAR_JOINER = "; "

_META_KEYS = ("Work", "Author", "Medium", "Culture", "Era", "Id", "Provenance", "Source")

_KEY_LINE = re.compile(r"^([A-Za-z][A-Za-z-]*(?:\[[^\]]*\])?): (.*)$")
_RELATION_KEY = re.compile(r"^Relation\[(.*)\]$")

_IMPLICATION_PAIRS = {
    (TermRole.NON_ANTI_X, TermRole.X),
    (TermRole.NON_X, TermRole.ANTI_X),
}

_SYMMETRIC_KIND_BY_PAIR = {
    frozenset({TermRole.X, TermRole.ANTI_X}): RelationKind.CONTRARIETY,
    frozenset({TermRole.X, TermRole.NON_X}): RelationKind.CONTRADICTION,
    frozenset({TermRole.ANTI_X, TermRole.NON_ANTI_X}): RelationKind.CONTRADICTION,
    frozenset({TermRole.NON_X, TermRole.NON_ANTI_X}): RelationKind.SUBCONTRARIETY,
}


def relation_key(relation: Relation) -> str:
    """The block key naming a relation: ``Relation[a vs b]`` for the
    symmetric kinds, ``Relation[a -> b]`` for implications."""
    a, b = relation.endpoints
    joiner = " -> " if relation.kind is RelationKind.IMPLICATION else " vs "
    return f"Relation[{a.value}{joiner}{b.value}]"


def _canonical_relation_keys() -> list[str]:
    keys = []
    for kind, pair in canonical_relation_set():
        keys.append(relation_key(Relation(kind=kind, endpoints=pair, explanation="")))
    return keys


def _fold(key: str, value: str, lines: list[str]) -> None:
    segments = value.split("\n")
    lines.append(f"{key}: {segments[0]}")
    for segment in segments[1:]:
        lines.append(f"  {segment}")


def serialize_key_value(analysis: WorkAnalysis) -> str:
    """Render a valid analysis as a Key: Value block.

    Refuses invalid analyses and values that cannot survive the line
    grammar (carriage returns anywhere, ``"; "`` inside an exemplar
    name).  Output is deterministic: equal analyses yield identical
    bytes, always LF-terminated.
    """
    problems = [str(v) for v in validate_square(analysis.square)]
    if not analysis.meta.title.strip():
        problems.append("empty-title: work title is empty")
    if problems:
        raise ValueError("cannot serialize an invalid analysis: " + "; ".join(problems))

    def check(value: str, where: str) -> str:
        if "\r" in value:
            raise ValueError(f"{where} contains a carriage return")
        return value

    lines: list[str] = []
    meta = analysis.meta
    _fold("Work", check(meta.title, "title"), lines)
    _fold("Author", check(meta.author, "author"), lines)
    _fold("Medium", meta.medium.value, lines)
    if meta.culture:
        _fold("Culture", check(meta.culture, "culture"), lines)
    if meta.era:
        _fold("Era", check(meta.era, "era"), lines)
    _fold("Id", check(meta.work_id, "work id"), lines)
    _fold("Provenance", analysis.provenance.kind.value, lines)
    _fold("Source", check(analysis.provenance.source, "source"), lines)

    for term in analysis.square.terms:
        key = term.role.value
        _fold(key, check(term.label, f"{key} label"), lines)
        _fold(key + _GLOSS_SUFFIX, check(term.gloss, f"{key} gloss"), lines)
        if term.exemplars:
            for name in term.exemplars:
                check(name, f"{key} exemplar")
                if _EXEMPLAR_JOINER in name or "\n" in name:
                    raise ValueError(
                        f"{key} exemplar {name!r} cannot carry {_EXEMPLAR_JOINER!r} "
                        "or newlines"
                    )
                if not name.strip():
                    raise ValueError(f"{key} has an empty exemplar name")
            _fold(
                key + _EXEMPLARS_SUFFIX,
                _EXEMPLAR_JOINER.join(term.exemplars),
                lines,
            )

    for relation in analysis.square.relations:
        _fold(
            relation_key(relation),
            check(relation.explanation, "relation explanation"),
            lines,
        )

    _fold("Summary", check(analysis.square.summary, "summary"), lines)
    return "\n".join(lines) + "\n"


def _parse_relation_key(content: str) -> tuple[RelationKind, tuple[TermRole, TermRole]]:
    if " -> " in content:
        left, _, right = content.partition(" -> ")
        directed = True
    elif " vs " in content:
        left, _, right = content.partition(" vs ")
        directed = False
    else:
        raise KeyValueParseError(
            [f"relation key {content!r} must join two roles with ' vs ' or ' -> '"]
        )
    roles = []
    for token in (left.strip(), right.strip()):
        try:
            roles.append(TermRole(token))
        except ValueError:
            raise KeyValueParseError(
                [f"unrecognized role token {token!r} in relation key {content!r}"]
            ) from None
    a, b = roles
    if a is b:
        raise KeyValueParseError([f"relation key {content!r} joins a role to itself"])
    if directed:
        if (a, b) not in _IMPLICATION_PAIRS:
            raise KeyValueParseError(
                [
                    f"relation key {content!r} is not a canonical implication; "
                    "implications run non-anti-X -> X and non-X -> anti-X"
                ]
            )
        return RelationKind.IMPLICATION, (a, b)
    pair = frozenset({a, b})
    if pair not in _SYMMETRIC_KIND_BY_PAIR:
        raise KeyValueParseError(
            [f"relation key {content!r} names an implication pair; use ' -> '"]
        )
    return _SYMMETRIC_KIND_BY_PAIR[pair], (a, b)


def parse_key_value(text: str) -> WorkAnalysis:
    """Parse a Key: Value block back into an analysis.

    Tolerant of leading prose, blank lines, unknown keys, and reordered
    lines; strict about duplicate keys, malformed relation keys, and the
    required keys (the four role labels, all six relations, and the
    summary).  Missing metadata falls back to defaults so that model
    output carrying only the analysis still parses.
    """
    values: dict[str, str] = {}
    term_order: list[TermRole] = []
    relations: list[tuple[RelationKind, tuple[TermRole, TermRole], str]] = []
    relation_keys_seen: set[str] = set()
    role_values = {role.value for role in ROLE_ORDER}
    recognized = set(_META_KEYS) | {"Summary"} | role_values
    recognized |= {v + _GLOSS_SUFFIX for v in role_values}
    recognized |= {v + _EXEMPLARS_SUFFIX for v in role_values}

    open_key: str | None = None
    open_relation: int | None = None

    def append_continuation(segment: str) -> None:
        nonlocal values, relations
        if open_relation is not None:
            kind, pair, explanation = relations[open_relation]
            relations[open_relation] = (kind, pair, explanation + "\n" + segment)
        elif open_key is not None:
            values[open_key] = values[open_key] + "\n" + segment

    for line in text.split("\n"):
        if line.startswith("  "):
            append_continuation(line[2:])
            continue
        match = _KEY_LINE.match(line)
        if not match:
            continue  # prose, blank, or decoration around the block
        key, value = match.group(1), match.group(2)
        relation_match = _RELATION_KEY.match(key)
        if relation_match:
            kind, pair = _parse_relation_key(relation_match.group(1))
            dedup = relation_key(Relation(kind=kind, endpoints=pair, explanation=""))
            if dedup in relation_keys_seen:
                raise KeyValueParseError([f"duplicate key: {dedup}"])
            relation_keys_seen.add(dedup)
            relations.append((kind, pair, value))
            open_key, open_relation = None, len(relations) - 1
            continue
        if key not in recognized:
            open_key, open_relation = None, None
            continue  # unknown keys read as prose
        if key in values:
            raise KeyValueParseError([f"duplicate key: {key}"])
        values[key] = value
        if key in role_values:
            term_order.append(TermRole(key))
        open_key, open_relation = key, None

    problems: list[str] = []
    for role in ROLE_ORDER:
        if role.value not in values:
            problems.append(f"missing key: {role.value}")
    if "Summary" not in values:
        problems.append("missing key: Summary")
    present = {
        relation_key(Relation(kind=k, endpoints=p, explanation=""))
        for k, p, _ in relations
    }
    for key in _canonical_relation_keys():
        if key not in present:
            problems.append(f"missing relation: {key}")
    if problems:
        raise KeyValueParseError(problems)

    terms = []
    for role in term_order:
        raw = values.get(role.value + _EXEMPLARS_SUFFIX, "")
        exemplars = tuple(
            name for name in raw.split(_EXEMPLAR_JOINER) if name
        ) if raw else ()
        terms.append(
            Term(
                role=role,
                label=values[role.value],
                gloss=values.get(role.value + _GLOSS_SUFFIX, ""),
                exemplars=exemplars,
            )
        )

    square = SemioticSquare(
        terms=tuple(terms),
        relations=tuple(
            Relation(kind=k, endpoints=p, explanation=e) for k, p, e in relations
        ),
        summary=values["Summary"],
    )

    raw_medium = values.get("Medium", "")
    try:
        medium = Medium(raw_medium)
    except ValueError:
        medium = Medium.OTHER
    raw_kind = values.get("Provenance", "")
    try:
        kind = ProvenanceKind(raw_kind)
    except ValueError:
        kind = ProvenanceKind.GENERATED
    meta = WorkMeta(
        title=values.get("Work", ""),
        author=values.get("Author", "unknown"),
        medium=medium,
        culture=values.get("Culture", ""),
        era=values.get("Era", ""),
        work_id=values.get("Id", ""),
    )
    provenance = Provenance(kind=kind, source=values.get("Source", "unspecified"))
    return WorkAnalysis(meta=meta, provenance=provenance, square=square)


# --- example selection -------------------------------------------------------


def select_examples(
    corpus: list[WorkAnalysis], n: int, seed: int | str
) -> list[WorkAnalysis]:
    """Pick ``n`` prompt examples, stratified by medium.

    Within each medium the order is a seeded shuffle with expert-sourced
    entries stably promoted to the front; the final list round-robins
    across media in their declared order.  Deterministic for a given
    corpus order, ``n``, and ``seed``.
    """
    if n < 0 or n > len(corpus):
        raise ValueError(f"cannot select {n} examples from a corpus of {len(corpus)}")
    strata: dict[Medium, list[WorkAnalysis]] = {m: [] for m in MEDIUM_ORDER}
    for analysis in corpus:
        strata[analysis.meta.medium].append(analysis)
    queues = []
    for medium in MEDIUM_ORDER:
        bucket = list(strata[medium])
        random.Random(f"{seed}:{medium.value}").shuffle(bucket)
        bucket.sort(key=lambda a: a.provenance.kind is not ProvenanceKind.EXPERT)
        queues.append(deque(bucket))

    picked: list[WorkAnalysis] = []
    while len(picked) < n:
        for queue in queues:
            if queue and len(picked) < n:
                picked.append(queue.popleft())
    return picked
