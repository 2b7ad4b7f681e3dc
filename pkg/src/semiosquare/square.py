"""Semiotic square data model and structural validation.

A Greimas square binds four terms: a seme ``X``, its contrary ``anti-X``,
and the two contradictories ``non-X`` and ``non-anti-X``.  Exactly six
relations connect them, and a square is structurally valid only when all
six are present with the right kinds and directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

__all__ = [
    "TermRole",
    "RelationKind",
    "Term",
    "Relation",
    "SemioticSquare",
    "Violation",
    "SquareDecodeError",
    "ROLE_ORDER",
    "SYMMETRIC_KINDS",
    "canonical_relation_set",
    "validate_square",
    "relation_between",
    "square_to_dict",
    "square_from_dict",
]


class TermRole(Enum):
    """Corner positions of the square."""

    X = "X"
    ANTI_X = "anti-X"
    NON_X = "non-X"
    NON_ANTI_X = "non-anti-X"


#: Presentation order for the four roles.
ROLE_ORDER: tuple[TermRole, ...] = (
    TermRole.X,
    TermRole.ANTI_X,
    TermRole.NON_X,
    TermRole.NON_ANTI_X,
)


class RelationKind(Enum):
    """The four kinds of edges a square can carry."""

    CONTRARIETY = "contrariety"
    CONTRADICTION = "contradiction"
    IMPLICATION = "implication"
    SUBCONTRARIETY = "subcontrariety"


#: Kinds whose endpoint order carries no meaning.  Implication is the one
#: directed kind: it always points from a contradictory toward the term it
#: supports.
SYMMETRIC_KINDS: frozenset[RelationKind] = frozenset(
    {
        RelationKind.CONTRARIETY,
        RelationKind.CONTRADICTION,
        RelationKind.SUBCONTRARIETY,
    }
)


@dataclass(frozen=True)
class Term:
    """One corner of the square.

    ``label`` is the short concept phrase, ``gloss`` the justification
    grounded in the work, ``exemplars`` the characters or motifs that
    carry the term.
    """

    role: TermRole
    label: str
    gloss: str
    exemplars: tuple[str, ...] = ()


@dataclass(frozen=True)
class Relation:
    """An edge between two roles.

    For symmetric kinds the endpoint order is free; for implication the
    pair reads source then target.
    """

    kind: RelationKind
    endpoints: tuple[TermRole, TermRole]
    explanation: str


@dataclass(frozen=True)
class SemioticSquare:
    """Four terms, six relations, and a summary of their interplay.

    Construction is permissive so that parsed model output can be held
    and inspected; :func:`validate_square` decides validity.
    """

    terms: tuple[Term, ...]
    relations: tuple[Relation, ...]
    summary: str

    def term(self, role: TermRole) -> Term:
        """Return the first term bound to ``role``.

        Unambiguous on valid squares; raises ``KeyError`` when the role
        is unbound.
        """
        for term in self.terms:
            if term.role is role:
                return term
        raise KeyError(role.value)


@dataclass(frozen=True)
class Violation:
    """A single structural defect found by :func:`validate_square`."""

    code: str
    detail: str

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}"


class SquareDecodeError(ValueError):
    """Raised when a JSON payload cannot be decoded into square types."""


_CANONICAL: tuple[tuple[RelationKind, tuple[TermRole, TermRole]], ...] = (
    (RelationKind.CONTRARIETY, (TermRole.X, TermRole.ANTI_X)),
    (RelationKind.CONTRADICTION, (TermRole.X, TermRole.NON_X)),
    (RelationKind.CONTRADICTION, (TermRole.ANTI_X, TermRole.NON_ANTI_X)),
    (RelationKind.IMPLICATION, (TermRole.NON_ANTI_X, TermRole.X)),
    (RelationKind.IMPLICATION, (TermRole.NON_X, TermRole.ANTI_X)),
    (RelationKind.SUBCONTRARIETY, (TermRole.NON_X, TermRole.NON_ANTI_X)),
)


def canonical_relation_set() -> tuple[tuple[RelationKind, tuple[TermRole, TermRole]], ...]:
    """The six relations every valid square must carry, in a fixed order.

    Symmetric entries list their endpoints in presentation order; the two
    implications read source then target.
    """
    return _CANONICAL


def _canonical_key(
    kind: RelationKind, endpoints: tuple[TermRole, TermRole]
) -> tuple[RelationKind, object]:
    if kind in SYMMETRIC_KINDS:
        return (kind, frozenset(endpoints))
    return (kind, endpoints)


_CANONICAL_KEYS = {_canonical_key(kind, pair): (kind, pair) for kind, pair in _CANONICAL}


def _pair_text(kind: RelationKind, endpoints: tuple[TermRole, TermRole]) -> str:
    a, b = endpoints
    joiner = " -> " if kind is RelationKind.IMPLICATION else " vs "
    return f"{a.value}{joiner}{b.value}"


def validate_square(square: SemioticSquare) -> list[Violation]:
    """Check a square against the structural invariants.

    Returns an empty list for a valid square, otherwise one violation per
    defect: role bindings, blank text fields, and the exact canonical
    relation set are all enforced.
    """
    violations: list[Violation] = []

    by_role: dict[TermRole, list[Term]] = {role: [] for role in ROLE_ORDER}
    for term in square.terms:
        by_role[term.role].append(term)
    for role in ROLE_ORDER:
        bound = by_role[role]
        if not bound:
            violations.append(
                Violation("missing-role", f"no term bound to role {role.value}")
            )
        elif len(bound) > 1:
            violations.append(
                Violation(
                    "duplicate-role",
                    f"{len(bound)} terms bound to role {role.value}",
                )
            )
        for term in bound:
            if not term.label.strip():
                violations.append(
                    Violation("blank-label", f"term {role.value} has an empty label")
                )
            if not term.gloss.strip():
                violations.append(
                    Violation("blank-gloss", f"term {role.value} has an empty gloss")
                )

    seen: dict[tuple[RelationKind, object], int] = {}
    for relation in square.relations:
        a, b = relation.endpoints
        if a is b:
            violations.append(
                Violation(
                    "degenerate-relation",
                    f"{relation.kind.value} joins {a.value} to itself",
                )
            )
            continue
        key = _canonical_key(relation.kind, relation.endpoints)
        if key not in _CANONICAL_KEYS:
            violations.append(
                Violation(
                    "noncanonical-relation",
                    f"{relation.kind.value} between "
                    f"{_pair_text(relation.kind, relation.endpoints)} "
                    "is not part of the canonical square",
                )
            )
            continue
        seen[key] = seen.get(key, 0) + 1
        if not relation.explanation.strip():
            violations.append(
                Violation(
                    "blank-explanation",
                    f"relation {_pair_text(relation.kind, relation.endpoints)} "
                    "has an empty explanation",
                )
            )

    for key, (kind, pair) in _CANONICAL_KEYS.items():
        count = seen.get(key, 0)
        if count == 0:
            violations.append(
                Violation(
                    "missing-relation",
                    f"no {kind.value} relation for {_pair_text(kind, pair)}",
                )
            )
        elif count > 1:
            violations.append(
                Violation(
                    "duplicate-relation",
                    f"{count} {kind.value} relations for {_pair_text(kind, pair)}",
                )
            )

    if not square.summary.strip():
        violations.append(Violation("blank-summary", "summary is empty"))

    return violations


def relation_between(
    square: SemioticSquare, a: TermRole, b: TermRole
) -> Relation | None:
    """Return the relation joining ``a`` and ``b``, in either stored order.

    ``a`` and ``b`` must differ; every distinct pair of roles belongs to
    exactly one canonical relation, so on valid squares the answer is
    unique and never ``None``.
    """
    if a is b:
        raise ValueError(f"relation endpoints must differ, got {a.value} twice")
    wanted = {a, b}
    for relation in square.relations:
        if set(relation.endpoints) == wanted:
            return relation
    return None


def square_to_dict(square: SemioticSquare) -> dict:
    """Encode a square for JSON interchange."""
    return {
        "terms": [
            {
                "role": term.role.value,
                "label": term.label,
                "gloss": term.gloss,
                "exemplars": list(term.exemplars),
            }
            for term in square.terms
        ],
        "relations": [
            {
                "kind": relation.kind.value,
                "endpoints": [role.value for role in relation.endpoints],
                "explanation": relation.explanation,
            }
            for relation in square.relations
        ],
        "summary": square.summary,
    }


def _decode_role(token: object, where: str) -> TermRole:
    try:
        return TermRole(token)
    except ValueError:
        raise SquareDecodeError(f"{where}: unknown role {token!r}") from None


def _decode_str(value: object, where: str) -> str:
    if not isinstance(value, str):
        raise SquareDecodeError(f"{where}: expected a string, got {type(value).__name__}")
    return value


def square_from_dict(data: object) -> SemioticSquare:
    """Decode the :func:`square_to_dict` encoding.

    Strict about shape and enum tokens; does not check structural
    validity, which stays the job of :func:`validate_square`.
    """
    if not isinstance(data, dict):
        raise SquareDecodeError(f"square: expected an object, got {type(data).__name__}")
    try:
        raw_terms = data["terms"]
        raw_relations = data["relations"]
        raw_summary = data["summary"]
    except KeyError as exc:
        raise SquareDecodeError(f"square: missing field {exc.args[0]!r}") from None
    if not isinstance(raw_terms, list) or not isinstance(raw_relations, list):
        raise SquareDecodeError("square: terms and relations must be arrays")

    terms = []
    for index, item in enumerate(raw_terms):
        where = f"terms[{index}]"
        if not isinstance(item, dict):
            raise SquareDecodeError(f"{where}: expected an object")
        try:
            role = _decode_role(item["role"], f"{where}.role")
            label = _decode_str(item["label"], f"{where}.label")
            gloss = _decode_str(item["gloss"], f"{where}.gloss")
        except KeyError as exc:
            raise SquareDecodeError(f"{where}: missing field {exc.args[0]!r}") from None
        raw_exemplars = item.get("exemplars", [])
        if not isinstance(raw_exemplars, list):
            raise SquareDecodeError(f"{where}.exemplars: expected an array")
        exemplars = tuple(
            _decode_str(e, f"{where}.exemplars[{i}]") for i, e in enumerate(raw_exemplars)
        )
        terms.append(Term(role=role, label=label, gloss=gloss, exemplars=exemplars))

    relations = []
    for index, item in enumerate(raw_relations):
        where = f"relations[{index}]"
        if not isinstance(item, dict):
            raise SquareDecodeError(f"{where}: expected an object")
        try:
            raw_kind = item["kind"]
            raw_endpoints = item["endpoints"]
            explanation = _decode_str(item["explanation"], f"{where}.explanation")
        except KeyError as exc:
            raise SquareDecodeError(f"{where}: missing field {exc.args[0]!r}") from None
        try:
            kind = RelationKind(raw_kind)
        except ValueError:
            raise SquareDecodeError(f"{where}.kind: unknown kind {raw_kind!r}") from None
        if not isinstance(raw_endpoints, list) or len(raw_endpoints) != 2:
            raise SquareDecodeError(f"{where}.endpoints: expected a pair of roles")
        endpoints = (
            _decode_role(raw_endpoints[0], f"{where}.endpoints[0]"),
            _decode_role(raw_endpoints[1], f"{where}.endpoints[1]"),
        )
        relations.append(Relation(kind=kind, endpoints=endpoints, explanation=explanation))

    summary = _decode_str(raw_summary, "square.summary")
    return SemioticSquare(terms=tuple(terms), relations=tuple(relations), summary=summary)
