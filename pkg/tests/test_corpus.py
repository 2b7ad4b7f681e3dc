from __future__ import annotations

import json

import pytest
from hypothesis import given, settings

from semiosquare.corpus import (
    CorpusParseError,
    CorpusValidationError,
    KeyValueParseError,
    Medium,
    Provenance,
    ProvenanceKind,
    WorkAnalysis,
    WorkMeta,
    analysis_from_dict,
    analysis_to_dict,
    dump_corpus,
    load_corpus,
    meta_from_dict,
    parse_key_value,
    select_examples,
    serialize_key_value,
    slugify,
)
from semiosquare.square import (
    ROLE_ORDER,
    SemioticSquare,
    Term,
    TermRole,
    validate_square,
)
from strategies import build_analysis, build_square, valid_analyses


def test_slugify():
    assert slugify("The Old Man and the Sea") == "the-old-man-and-the-sea"
    assert slugify("  Jane    Eyre ") == "jane-eyre"
    assert slugify("Wuthering Heights!") == "wuthering-heights"
    assert slugify("!!!") == ""


def test_work_meta_derives_id_from_title():
    assert WorkMeta(title="Moby-Dick").work_id == "moby-dick"
    assert WorkMeta(title="Moby-Dick", work_id="md").work_id == "md"


def test_meta_from_dict_errors():
    with pytest.raises(CorpusParseError, match="missing field 'title'"):
        meta_from_dict({})
    with pytest.raises(CorpusParseError, match="title"):
        meta_from_dict({"title": 7})
    with pytest.raises(CorpusParseError, match="unknown medium"):
        meta_from_dict({"title": "t", "medium": "opera"})
    with pytest.raises(CorpusParseError, match="author"):
        meta_from_dict({"title": "t", "author": 1})
    with pytest.raises(CorpusParseError, match="expected an object"):
        meta_from_dict("t")


def test_analysis_from_dict_errors():
    good = analysis_to_dict(build_analysis())
    bad = dict(good, provenance={"kind": "folk"})
    with pytest.raises(CorpusParseError, match="unknown kind"):
        analysis_from_dict(bad)
    bad = dict(good, provenance="expert")
    with pytest.raises(CorpusParseError, match="provenance"):
        analysis_from_dict(bad)
    bad = dict(good, square={"terms": [], "relations": []})
    with pytest.raises(CorpusParseError, match="square"):
        analysis_from_dict(bad)


def test_load_corpus_round_trip():
    corpus = [build_analysis("a"), build_analysis("b", medium=Medium.FILM)]
    assert load_corpus(dump_corpus(corpus)) == corpus


def test_load_corpus_accepts_bytes_and_rejects_bad_encodings():
    corpus = [build_analysis("a")]
    assert load_corpus(dump_corpus(corpus).encode("utf-8")) == corpus
    with pytest.raises(CorpusParseError, match="not UTF-8"):
        load_corpus(b"\xff\xfe[]")


def test_load_corpus_rejects_non_array():
    with pytest.raises(CorpusParseError, match="must be a JSON array"):
        load_corpus("{}")


def test_load_corpus_reports_json_errors_by_byte_offset():
    text = '["café", ]'
    with pytest.raises(CorpusParseError) as info:
        load_corpus(text)
    assert info.value.byte_offset == text.encode("utf-8").index(b"]")


def test_load_corpus_names_the_entry_on_decode_errors():
    good = analysis_to_dict(build_analysis())
    with pytest.raises(CorpusParseError, match=r"entry\[1\]"):
        load_corpus(json.dumps([good, {"meta": {"title": "x"}}]))


def _invalidated(analysis: WorkAnalysis, summary: str = "") -> dict:
    payload = analysis_to_dict(analysis)
    payload["square"]["summary"] = summary
    return payload


def test_load_corpus_collects_every_invalid_entry():
    first = build_analysis("a")
    second = build_analysis("b")
    payload = [_invalidated(first), _invalidated(second)]
    with pytest.raises(CorpusValidationError) as info:
        load_corpus(json.dumps(payload))
    reported = {work_id for work_id, _ in info.value.entries}
    assert reported == {"work-a", "work-b"}
    for _, problems in info.value.entries:
        assert any("blank-summary" in p for p in problems)


def test_load_corpus_rejects_duplicate_ids():
    entry = analysis_to_dict(build_analysis("a"))
    with pytest.raises(CorpusValidationError) as info:
        load_corpus(json.dumps([entry, entry]))
    (work_id, problems) = info.value.entries[0]
    assert work_id == "work-a"
    assert any("duplicate-id" in p for p in problems)


def test_load_corpus_rejects_empty_source():
    payload = analysis_to_dict(build_analysis())
    payload["provenance"]["source"] = " "
    with pytest.raises(CorpusValidationError) as info:
        load_corpus(json.dumps([payload]))
    assert any("empty-source" in p for _, ps in info.value.entries for p in ps)


# --- Key: Value block --------------------------------------------------------


def test_serialize_is_deterministic_and_lf_only():
    analysis = build_analysis()
    text = serialize_key_value(analysis)
    assert text == serialize_key_value(analysis)
    assert "\r" not in text
    assert text.endswith("\n")
    assert text.startswith("Work: ")


def test_serialize_refuses_invalid_analysis():
    analysis = build_analysis()
    broken = WorkAnalysis(
        meta=analysis.meta,
        provenance=analysis.provenance,
        square=SemioticSquare(
            analysis.square.terms, analysis.square.relations[1:], "s"
        ),
    )
    with pytest.raises(ValueError, match="cannot serialize"):
        serialize_key_value(broken)


def test_serialize_refuses_carriage_returns():
    analysis = build_analysis()
    bad = WorkAnalysis(
        meta=WorkMeta(title="bad\rtitle"),
        provenance=analysis.provenance,
        square=analysis.square,
    )
    with pytest.raises(ValueError, match="carriage return"):
        serialize_key_value(bad)


@pytest.mark.parametrize("name", ["a; b", "line\nbreak", "   "])
def test_serialize_refuses_unrepresentable_exemplars(name):
    square = build_square()
    terms = list(square.terms)
    terms[0] = Term(
        role=terms[0].role,
        label=terms[0].label,
        gloss=terms[0].gloss,
        exemplars=(name,),
    )
    analysis = WorkAnalysis(
        meta=WorkMeta(title="T"),
        provenance=Provenance(kind=ProvenanceKind.EXPERT, source="s"),
        square=SemioticSquare(tuple(terms), square.relations, square.summary),
    )
    with pytest.raises(ValueError):
        serialize_key_value(analysis)


def test_parse_round_trips_the_serialized_block():
    analysis = build_analysis()
    assert parse_key_value(serialize_key_value(analysis)) == analysis


def test_parse_round_trips_multi_line_values():
    square = build_square()
    terms = list(square.terms)
    terms[0] = Term(
        role=terms[0].role,
        label=terms[0].label,
        gloss="first line\n  indented second\n\nfourth after a blank",
        exemplars=terms[0].exemplars,
    )
    analysis = WorkAnalysis(
        meta=WorkMeta(title="Folded"),
        provenance=Provenance(kind=ProvenanceKind.GENERATED, source="m"),
        square=SemioticSquare(
            tuple(terms), square.relations, "summary\nwith a second line"
        ),
    )
    assert parse_key_value(serialize_key_value(analysis)) == analysis


def test_parse_tolerates_prose_blank_lines_and_unknown_keys():
    analysis = build_analysis()
    block = serialize_key_value(analysis)
    noisy = (
        "Here is the completed analysis you asked for.\n\n"
        "Mood: contemplative\n"
        "  continuation of an unknown key\n" + block + "\nHope this helps!\n"
    )
    assert parse_key_value(noisy).square == analysis.square


def test_parse_is_order_free_for_single_line_blocks():
    analysis = build_analysis()
    lines = serialize_key_value(analysis).rstrip("\n").split("\n")
    parsed = parse_key_value("\n".join(reversed(lines)))
    for role in ROLE_ORDER:
        assert parsed.square.term(role) == analysis.square.term(role)
    assert parsed.square.summary == analysis.square.summary
    assert parsed.meta == analysis.meta
    assert {r.explanation for r in parsed.square.relations} == {
        r.explanation for r in analysis.square.relations
    }


def test_parse_defaults_metadata_when_only_the_analysis_is_present():
    block = serialize_key_value(build_analysis())
    kept = [
        line
        for line in block.splitlines()
        if not line.startswith(
            ("Work: ", "Author: ", "Medium: ", "Id: ", "Provenance: ", "Source: ")
        )
    ]
    parsed = parse_key_value("\n".join(kept))
    assert parsed.meta.title == ""
    assert parsed.meta.author == "unknown"
    assert parsed.meta.medium is Medium.OTHER
    assert parsed.provenance.kind is ProvenanceKind.GENERATED
    assert parsed.provenance.source == "unspecified"


def test_parse_falls_back_on_unknown_medium_and_provenance_tokens():
    block = serialize_key_value(build_analysis())
    block = block.replace("Medium: novel", "Medium: tapestry")
    block = block.replace("Provenance: expert", "Provenance: hearsay")
    parsed = parse_key_value(block)
    assert parsed.meta.medium is Medium.OTHER
    assert parsed.provenance.kind is ProvenanceKind.GENERATED


def test_parse_rejects_duplicate_keys():
    block = serialize_key_value(build_analysis())
    with pytest.raises(KeyValueParseError, match="duplicate key: X"):
        parse_key_value(block + "X: another label\n")
    with pytest.raises(KeyValueParseError, match=r"duplicate key: Relation"):
        parse_key_value(block + "Relation[X vs anti-X]: stated twice\n")


def test_reversed_duplicate_relation_parses_but_fails_validation():
    # A reversed restatement is a distinct key; the structural check
    # catches the doubled relation instead.
    block = serialize_key_value(build_analysis())
    parsed = parse_key_value(block + "Relation[anti-X vs X]: reversed restatement\n")
    codes = {v.code for v in validate_square(parsed.square)}
    assert "duplicate-relation" in codes


@pytest.mark.parametrize(
    "key, complaint",
    [
        ("Relation[X vs Y]", "unrecognized role token"),
        ("Relation[X & anti-X]", "must join two roles"),
        ("Relation[X -> X]", "joins a role to itself"),
        ("Relation[X -> anti-X]", "not a canonical implication"),
        ("Relation[non-anti-X vs X]", "use ' -> '"),
    ],
)
def test_parse_rejects_malformed_relation_keys(key, complaint):
    with pytest.raises(KeyValueParseError, match=complaint):
        parse_key_value(f"{key}: something\n")


def test_parse_aggregates_missing_requirements():
    block = serialize_key_value(build_analysis())
    kept = [
        line
        for line in block.splitlines()
        if not line.startswith(("Summary: ", "Relation[X vs anti-X]"))
    ]
    with pytest.raises(KeyValueParseError) as info:
        parse_key_value("\n".join(kept))
    problems = info.value.problems
    assert "missing key: Summary" in problems
    assert "missing relation: Relation[X vs anti-X]" in problems


def test_parse_reads_exemplars_back_as_tuples():
    analysis = build_analysis()
    parsed = parse_key_value(serialize_key_value(analysis))
    assert parsed.square.term(TermRole.X).exemplars == ("t figure", "t motif")


@settings(max_examples=150)
@given(valid_analyses())
def test_property_serialize_parse_round_trip(analysis: WorkAnalysis):
    assert parse_key_value(serialize_key_value(analysis)) == analysis


# --- example selection -------------------------------------------------------


def _mixed_corpus() -> list[WorkAnalysis]:
    def entry(tag: str, medium: Medium, kind: ProvenanceKind) -> WorkAnalysis:
        base = build_analysis(tag, medium=medium)
        return WorkAnalysis(
            meta=base.meta,
            provenance=Provenance(kind=kind, source=base.provenance.source),
            square=base.square,
        )

    return [
        entry("n1", Medium.NOVEL, ProvenanceKind.GENERATED),
        entry("n2", Medium.NOVEL, ProvenanceKind.EXPERT),
        entry("n3", Medium.NOVEL, ProvenanceKind.GENERATED),
        entry("f1", Medium.FILM, ProvenanceKind.GENERATED),
        entry("f2", Medium.FILM, ProvenanceKind.EXPERT),
        entry("p1", Medium.PLAY, ProvenanceKind.GENERATED),
        entry("o1", Medium.OTHER, ProvenanceKind.GENERATED),
    ]


def test_select_examples_bounds():
    corpus = _mixed_corpus()
    with pytest.raises(ValueError):
        select_examples(corpus, -1, 0)
    with pytest.raises(ValueError):
        select_examples(corpus, len(corpus) + 1, 0)
    assert select_examples(corpus, 0, 0) == []


def test_select_examples_round_robins_media_with_experts_first():
    corpus = _mixed_corpus()
    picked = select_examples(corpus, 4, seed=3)
    assert [a.meta.medium for a in picked] == [
        Medium.NOVEL,
        Medium.FILM,
        Medium.PLAY,
        Medium.OTHER,
    ]
    assert picked[0].provenance.kind is ProvenanceKind.EXPERT
    assert picked[1].provenance.kind is ProvenanceKind.EXPERT


def test_select_examples_is_deterministic_and_exhaustive():
    corpus = _mixed_corpus()
    assert select_examples(corpus, 5, 11) == select_examples(corpus, 5, 11)
    everything = select_examples(corpus, len(corpus), 2)
    assert sorted(a.meta.work_id for a in everything) == sorted(
        a.meta.work_id for a in corpus
    )
