from __future__ import annotations

import pytest
from hypothesis import given, settings

from semiosquare.square import (
    ROLE_ORDER,
    SYMMETRIC_KINDS,
    Relation,
    RelationKind,
    SemioticSquare,
    SquareDecodeError,
    Term,
    TermRole,
    Violation,
    canonical_relation_set,
    relation_between,
    square_from_dict,
    square_to_dict,
    validate_square,
)
from strategies import build_square, valid_squares


def codes(square: SemioticSquare) -> set[str]:
    return {violation.code for violation in validate_square(square)}


def test_canonical_relation_set_is_the_fixed_six():
    canonical = canonical_relation_set()
    assert canonical == (
        (RelationKind.CONTRARIETY, (TermRole.X, TermRole.ANTI_X)),
        (RelationKind.CONTRADICTION, (TermRole.X, TermRole.NON_X)),
        (RelationKind.CONTRADICTION, (TermRole.ANTI_X, TermRole.NON_ANTI_X)),
        (RelationKind.IMPLICATION, (TermRole.NON_ANTI_X, TermRole.X)),
        (RelationKind.IMPLICATION, (TermRole.NON_X, TermRole.ANTI_X)),
        (RelationKind.SUBCONTRARIETY, (TermRole.NON_X, TermRole.NON_ANTI_X)),
    )
    assert RelationKind.IMPLICATION not in SYMMETRIC_KINDS
    assert len(SYMMETRIC_KINDS) == 3


def test_valid_square_passes():
    assert validate_square(build_square()) == []


def test_missing_role_reported():
    square = build_square()
    trimmed = SemioticSquare(square.terms[:3], square.relations, square.summary)
    assert "missing-role" in codes(trimmed)


def test_duplicate_role_reported():
    square = build_square()
    doubled = SemioticSquare(
        square.terms + (square.terms[0],), square.relations, square.summary
    )
    assert codes(doubled) == {"duplicate-role"}


def test_blank_label_and_gloss_reported():
    square = build_square()
    terms = list(square.terms)
    terms[0] = Term(role=terms[0].role, label=" ", gloss="", exemplars=())
    bad = SemioticSquare(tuple(terms), square.relations, square.summary)
    assert {"blank-label", "blank-gloss"} <= codes(bad)


def test_degenerate_relation_reported():
    square = build_square()
    relations = square.relations[:-1] + (
        Relation(
            kind=RelationKind.SUBCONTRARIETY,
            endpoints=(TermRole.NON_X, TermRole.NON_X),
            explanation="joins itself",
        ),
    )
    bad = SemioticSquare(square.terms, relations, square.summary)
    found = codes(bad)
    assert "degenerate-relation" in found
    # the canonical subcontrariety is now absent as well
    assert "missing-relation" in found


def test_noncanonical_relation_reported():
    square = build_square()
    relations = square.relations + (
        Relation(
            kind=RelationKind.CONTRARIETY,
            endpoints=(TermRole.NON_X, TermRole.X),
            explanation="wrong kind for this pair",
        ),
    )
    assert "noncanonical-relation" in codes(
        SemioticSquare(square.terms, relations, square.summary)
    )


def test_reversed_implication_is_noncanonical():
    square = build_square()
    relations = list(square.relations)
    index = next(
        i for i, r in enumerate(relations) if r.kind is RelationKind.IMPLICATION
    )
    original = relations[index]
    relations[index] = Relation(
        kind=RelationKind.IMPLICATION,
        endpoints=(original.endpoints[1], original.endpoints[0]),
        explanation=original.explanation,
    )
    found = codes(SemioticSquare(square.terms, tuple(relations), square.summary))
    assert "noncanonical-relation" in found
    assert "missing-relation" in found


def test_symmetric_relation_order_is_free():
    square = build_square()
    relations = tuple(
        Relation(
            kind=r.kind,
            endpoints=(r.endpoints[1], r.endpoints[0]),
            explanation=r.explanation,
        )
        if r.kind in SYMMETRIC_KINDS
        else r
        for r in square.relations
    )
    assert validate_square(SemioticSquare(square.terms, relations, square.summary)) == []


def test_blank_explanation_and_summary_reported():
    square = build_square()
    relations = (
        Relation(
            kind=square.relations[0].kind,
            endpoints=square.relations[0].endpoints,
            explanation="   ",
        ),
    ) + square.relations[1:]
    bad = SemioticSquare(square.terms, relations, "")
    assert {"blank-explanation", "blank-summary"} <= codes(bad)


def test_missing_and_duplicate_relation_reported():
    square = build_square()
    dropped = SemioticSquare(square.terms, square.relations[1:], square.summary)
    assert codes(dropped) == {"missing-relation"}
    doubled = SemioticSquare(
        square.terms, square.relations + (square.relations[0],), square.summary
    )
    assert codes(doubled) == {"duplicate-relation"}


def test_violation_str_format():
    violation = Violation(code="missing-role", detail="no term bound to role X")
    assert str(violation) == "missing-role: no term bound to role X"


def test_term_lookup_and_keyerror():
    square = build_square()
    assert square.term(TermRole.X).role is TermRole.X
    empty = SemioticSquare(terms=(), relations=(), summary="s")
    with pytest.raises(KeyError):
        empty.term(TermRole.X)


def test_relation_between_matches_either_order():
    square = build_square()
    found = relation_between(square, TermRole.ANTI_X, TermRole.X)
    assert found is not None
    assert found.kind is RelationKind.CONTRARIETY
    with pytest.raises(ValueError):
        relation_between(square, TermRole.X, TermRole.X)
    bare = SemioticSquare(square.terms, (), square.summary)
    assert relation_between(bare, TermRole.X, TermRole.ANTI_X) is None


@settings(max_examples=150)
@given(valid_squares())
def test_dict_round_trip(square: SemioticSquare):
    assert square_from_dict(square_to_dict(square)) == square


@pytest.mark.parametrize(
    "mangle",
    [
        lambda d: d.pop("summary"),
        lambda d: d["terms"][0].pop("role"),
        lambda d: d["terms"][0].update(role="middle-X"),
        lambda d: d["terms"][0].update(label=3),
        lambda d: d["terms"][0].update(exemplars="not a list"),
        lambda d: d["relations"][0].update(kind="friendship"),
        lambda d: d["relations"][0].update(endpoints=["X"]),
        lambda d: d["relations"][0].pop("explanation"),
    ],
)
def test_decode_rejects_malformed_payloads(mangle):
    payload = square_to_dict(build_square())
    mangle(payload)
    with pytest.raises(SquareDecodeError):
        square_from_dict(payload)


def test_decode_rejects_non_object():
    with pytest.raises(SquareDecodeError):
        square_from_dict([1, 2, 3])


def test_role_order_covers_all_roles():
    assert set(ROLE_ORDER) == set(TermRole)
    assert len(ROLE_ORDER) == 4
