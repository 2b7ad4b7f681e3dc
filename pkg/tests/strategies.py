"""Shared hypothesis strategies and deterministic fixture builders."""

from __future__ import annotations

from hypothesis import strategies as st

from semiosquare.corpus import (
    Medium,
    Provenance,
    ProvenanceKind,
    WorkAnalysis,
    WorkMeta,
)
from semiosquare.square import (
    ROLE_ORDER,
    Relation,
    RelationKind,
    SemioticSquare,
    Term,
    TermRole,
    canonical_relation_set,
)

_WORD_CHARS = "abcdefghijklmnopqrstuvwxyzABCDE0123456789 ',.:-()é京"
_NAME_CHARS = "abcdefghijklmnopqrstuvwxyz '-"


def single_line(min_size: int = 1, max_size: int = 40) -> st.SearchStrategy[str]:
    """Nonblank text with no line breaks."""
    return st.text(alphabet=_WORD_CHARS, min_size=min_size, max_size=max_size).filter(
        lambda s: s.strip() != ""
    )


def multi_line(max_segments: int = 3) -> st.SearchStrategy[str]:
    """Nonblank text, possibly folded over several lines.

    Segments may be empty or start with spaces; the value as a whole must
    survive a ``strip`` check, matching what validation demands.
    """
    segment = st.text(alphabet=_WORD_CHARS, max_size=30)
    return (
        st.lists(segment, min_size=1, max_size=max_segments)
        .map("\n".join)
        .filter(lambda s: s.strip() != "")
    )


def exemplar_name() -> st.SearchStrategy[str]:
    # No semicolons at all, which rules out the "; " joiner wholesale.
    return st.text(alphabet=_NAME_CHARS, min_size=1, max_size=20).filter(
        lambda s: s.strip() != ""
    )


def exemplar_lists() -> st.SearchStrategy[tuple[str, ...]]:
    return st.lists(exemplar_name(), max_size=3).map(tuple)


@st.composite
def valid_squares(draw) -> SemioticSquare:
    """Structurally valid squares with shuffled term and relation order."""
    terms = [
        Term(
            role=role,
            label=draw(single_line()),
            gloss=draw(multi_line()),
            exemplars=draw(exemplar_lists()),
        )
        for role in ROLE_ORDER
    ]
    relations = [
        Relation(kind=kind, endpoints=pair, explanation=draw(multi_line()))
        for kind, pair in canonical_relation_set()
    ]
    terms = draw(st.permutations(terms))
    relations = draw(st.permutations(relations))
    summary = draw(multi_line())
    return SemioticSquare(
        terms=tuple(terms), relations=tuple(relations), summary=summary
    )


@st.composite
def valid_metas(draw) -> WorkMeta:
    return WorkMeta(
        title=draw(single_line(max_size=30)),
        author=draw(st.one_of(st.just("unknown"), single_line(max_size=20))),
        medium=draw(st.sampled_from(Medium)),
        culture=draw(st.one_of(st.just(""), single_line(max_size=15))),
        era=draw(st.one_of(st.just(""), single_line(max_size=15))),
    )


@st.composite
def valid_analyses(draw) -> WorkAnalysis:
    return WorkAnalysis(
        meta=draw(valid_metas()),
        provenance=Provenance(
            kind=draw(st.sampled_from(ProvenanceKind)),
            source=draw(single_line(max_size=25)),
        ),
        square=draw(valid_squares()),
    )


# --- deterministic builders --------------------------------------------------


def build_square(tag: str = "t") -> SemioticSquare:
    """A fixed valid square; ``tag`` keeps instances distinguishable."""
    terms = tuple(
        Term(
            role=role,
            label=f"{tag} {role.value} label",
            gloss=f"{tag} {role.value} gloss grounded in the work",
            exemplars=(f"{tag} figure", f"{tag} motif"),
        )
        for role in ROLE_ORDER
    )
    relations = tuple(
        Relation(
            kind=kind,
            endpoints=pair,
            explanation=f"{tag} explains {pair[0].value} and {pair[1].value}",
        )
        for kind, pair in canonical_relation_set()
    )
    return SemioticSquare(
        terms=terms, relations=relations, summary=f"{tag} summary of the interplay"
    )


def build_analysis(tag: str = "t", medium: Medium = Medium.NOVEL) -> WorkAnalysis:
    return WorkAnalysis(
        meta=WorkMeta(title=f"Work {tag}", author=f"Author {tag}", medium=medium),
        provenance=Provenance(kind=ProvenanceKind.EXPERT, source=f"reading {tag}"),
        square=build_square(tag),
    )


# --- structural mutations ----------------------------------------------------


def drop_relation(square: SemioticSquare, index: int) -> tuple[SemioticSquare, str]:
    relations = list(square.relations)
    del relations[index % len(relations)]
    return (
        SemioticSquare(square.terms, tuple(relations), square.summary),
        "missing-relation",
    )


def duplicate_role(square: SemioticSquare, index: int) -> tuple[SemioticSquare, str]:
    terms = list(square.terms)
    terms.append(terms[index % len(terms)])
    return (
        SemioticSquare(tuple(terms), square.relations, square.summary),
        "duplicate-role",
    )


def twist_relation(square: SemioticSquare, index: int) -> tuple[SemioticSquare, str]:
    """Swap one relation's kind for a wrong one, leaving its endpoints."""
    relations = list(square.relations)
    victim = relations[index % len(relations)]
    wrong = (
        RelationKind.SUBCONTRARIETY
        if victim.kind is not RelationKind.SUBCONTRARIETY
        else RelationKind.CONTRARIETY
    )
    relations[index % len(relations)] = Relation(
        kind=wrong, endpoints=victim.endpoints, explanation=victim.explanation
    )
    return (
        SemioticSquare(square.terms, tuple(relations), square.summary),
        "noncanonical-relation",
    )


def blank_label(square: SemioticSquare, index: int) -> tuple[SemioticSquare, str]:
    terms = list(square.terms)
    victim = terms[index % len(terms)]
    terms[index % len(terms)] = Term(
        role=victim.role, label="  ", gloss=victim.gloss, exemplars=victim.exemplars
    )
    return (
        SemioticSquare(tuple(terms), square.relations, square.summary),
        "blank-label",
    )


MUTATIONS = (drop_relation, duplicate_role, twist_relation, blank_label)
