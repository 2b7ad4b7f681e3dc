"""Renderers: DOT graphs, Markdown reports, comparison tables.

All renderers are deterministic: equal inputs yield byte-identical
output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .corpus import WorkAnalysis, analysis_to_dict
from .judging import ComparisonCell, ComparisonSummary, Outcome, summarize
from .square import (
    ROLE_ORDER,
    RelationKind,
    SemioticSquare,
    TermRole,
    canonical_relation_set,
    relation_between,
    validate_square,
)

__all__ = [
    "OutputFormat",
    "RenderOptions",
    "to_dot",
    "analysis_report",
    "comparison_table",
    "comparison_report",
]


class OutputFormat(Enum):
    DOT = "dot"
    MARKDOWN = "markdown"
    JSON = "json"


@dataclass(frozen=True)
class RenderOptions:
    format: OutputFormat = OutputFormat.MARKDOWN
    include_relations: bool = True
    include_summary: bool = True


_NODE_IDS = {
    TermRole.X: "x",
    TermRole.ANTI_X: "anti_x",
    TermRole.NON_X: "non_x",
    TermRole.NON_ANTI_X: "non_anti_x",
}

# Corner layout: X and anti-X share the top rank, the contradictories sit
# beneath the term they negate's contrary, so each contradiction runs on
# a diagonal and each implication climbs one column.
_TOP_RANK = (TermRole.X, TermRole.ANTI_X)
_BOTTOM_RANK = (TermRole.NON_ANTI_X, TermRole.NON_X)

_EDGE_ATTRS = {
    RelationKind.CONTRARIETY: 'label="contrariety", dir=both',
    RelationKind.CONTRADICTION: 'label="contradiction", dir=both, style=dashed',
    RelationKind.IMPLICATION: 'label="implication", constraint=false',
    RelationKind.SUBCONTRARIETY: 'label="subcontrariety", dir=both, style=dotted',
}


def _dot_quote(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{escaped}"'


def to_dot(square: SemioticSquare) -> str:
    """Render a valid square as a DOT digraph.

    Exactly four node statements and six edge statements, plus two
    rank groups that pin the square's layout.  Refuses invalid squares.
    """
    violations = validate_square(square)
    if violations:
        raise ValueError(
            "cannot render an invalid square: " + "; ".join(str(v) for v in violations)
        )
    lines = ["digraph semiotic_square {", "  rankdir=TB;", "  node [shape=box];"]
    for role in ROLE_ORDER:
        term = square.term(role)
        label = _dot_quote(f"{role.value}: {term.label}")
        lines.append(f"  {_NODE_IDS[role]} [label={label}];")
    for rank in (_TOP_RANK, _BOTTOM_RANK):
        members = " ".join(f"{_NODE_IDS[role]};" for role in rank)
        lines.append(f"  {{ rank=same; {members} }}")
    for kind, (tail, head) in canonical_relation_set():
        relation = relation_between(square, tail, head)
        assert relation is not None  # guaranteed by validation
        lines.append(
            f"  {_NODE_IDS[tail]} -> {_NODE_IDS[head]} [{_EDGE_ATTRS[kind]}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _markdown_report(analysis: WorkAnalysis, options: RenderOptions) -> str:
    meta = analysis.meta
    square = analysis.square
    lines = [f"# {meta.title}", ""]
    byline = f"{meta.author}, {meta.medium.value}"
    extras = ", ".join(part for part in (meta.culture, meta.era) if part)
    if extras:
        byline += f" ({extras})"
    lines += [f"_{byline}_", ""]

    lines += ["## Terms", ""]
    for role in ROLE_ORDER:
        term = square.term(role)
        lines += [f"### {role.value}: {term.label}", "", term.gloss, ""]
        if term.exemplars:
            lines += ["Exemplars: " + "; ".join(term.exemplars), ""]

    if options.include_relations:
        lines += ["## Relations", ""]
        for kind, (a, b) in canonical_relation_set():
            relation = relation_between(square, a, b)
            assert relation is not None
            joiner = " -> " if kind is RelationKind.IMPLICATION else " vs "
            lines.append(
                f"- **{kind.value}** ({a.value}{joiner}{b.value}): "
                f"{relation.explanation}"
            )
        lines.append("")

    if options.include_summary:
        lines += ["## Summary of Relationships", "", square.summary, ""]

    x = square.term(TermRole.X).label
    anti_x = square.term(TermRole.ANTI_X).label
    non_x = square.term(TermRole.NON_X).label
    non_anti_x = square.term(TermRole.NON_ANTI_X).label
    lines += [
        "## Conclusion",
        "",
        f"Read through this square, {meta.title} turns on the opposition "
        f"between {x} and {anti_x}, while {non_x} and {non_anti_x} complete "
        "the deep structure from which the narrative draws its meaning.",
        "",
    ]
    return "\n".join(lines)


def analysis_report(analysis: WorkAnalysis, options: RenderOptions) -> str:
    """Render one analysis in the requested format.

    Markdown refuses invalid squares the same way DOT does; JSON is the
    canonical corpus encoding of the single analysis.
    """
    if options.format is OutputFormat.JSON:
        return json.dumps(analysis_to_dict(analysis), ensure_ascii=False, indent=2) + "\n"
    if options.format is OutputFormat.DOT:
        return to_dot(analysis.square)
    violations = validate_square(analysis.square)
    if violations:
        raise ValueError(
            "cannot render an invalid analysis: "
            + "; ".join(str(v) for v in violations)
        )
    return _markdown_report(analysis, options)


def _framework_cell(cell: ComparisonCell) -> str:
    if cell.outcome is Outcome.HIGHER:
        return f"{cell.framework_score} ↑"
    if cell.outcome is Outcome.LOWER:
        return f"{cell.framework_score} ↓"
    return str(cell.framework_score)


def comparison_table(
    cells: list[ComparisonCell],
    works: list[str] | None = None,
    judges: list[str] | None = None,
) -> str:
    """Markdown table of expert versus pipeline scores.

    One row per judge, one expert/framework column pair per work, in
    first-appearance order unless explicit orders are given.  Missing
    pairings render as an em-dash placeholder; duplicate pairings are an
    error.
    """
    by_pair: dict[tuple[str, str], ComparisonCell] = {}
    for cell in cells:
        pair = (cell.judge_model, cell.work_id)
        if pair in by_pair:
            raise ValueError(
                f"duplicate comparison cell for judge {cell.judge_model!r} "
                f"and work {cell.work_id!r}"
            )
        by_pair[pair] = cell
    if works is None:
        works = list(dict.fromkeys(cell.work_id for cell in cells))
    if judges is None:
        judges = list(dict.fromkeys(cell.judge_model for cell in cells))

    header = ["Judge"]
    for work in works:
        header += [f"{work} expert", f"{work} framework"]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join(["---"] + ["---:"] * (2 * len(works))) + "|",
    ]
    for judge in judges:
        row = [judge]
        for work in works:
            cell = by_pair.get((judge, work))
            if cell is None:
                row += ["—", "—"]
            else:
                row += [str(cell.expert_score), _framework_cell(cell)]
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def _pct(value: float) -> str:
    return f"{value:.1f}%"


def comparison_report(
    cells: list[ComparisonCell],
    works: list[str] | None = None,
    judges: list[str] | None = None,
    reported: dict | None = None,
) -> str:
    """Full Markdown comparison: table, tallies, and, when a previously
    reported tally disagrees with the recount, a note stating both."""
    summary = summarize(cells)
    count = len(summary.cells)
    lines = [
        "# Expert versus framework comparison",
        "",
        comparison_table(cells, works, judges).rstrip("\n"),
        "",
        f"- Cells: {count}",
        f"- Framework higher: {summary.higher} ({_pct(summary.pct_higher)})",
        f"- On par: {summary.par}",
        f"- Framework lower: {summary.lower}",
        f"- At or above expert: {summary.higher + summary.par} "
        f"({_pct(summary.pct_higher_or_par)})",
    ]
    notes = _reported_notes(summary, reported or {})
    if notes:
        lines += ["", *notes]
    return "\n".join(lines) + "\n"


def _reported_notes(summary: ComparisonSummary, reported: dict) -> list[str]:
    notes = []
    count = len(summary.cells)
    rep_higher = reported.get("higher")
    if rep_higher is not None and rep_higher != summary.higher:
        notes.append(
            f"Note: the source of these cells reported {rep_higher}/{count} "
            f"wins for the framework; the recount above gives "
            f"{summary.higher}/{count}."
        )
    rep_at_or_above = reported.get("higher_or_par")
    recount = summary.higher + summary.par
    if rep_at_or_above is not None and rep_at_or_above != recount:
        rep_pct = reported.get("pct_higher_or_par")
        rep_pct_text = f" ({_pct(float(rep_pct))})" if rep_pct is not None else ""
        notes.append(
            f"Note: the source of these cells reported {rep_at_or_above}/{count}"
            f"{rep_pct_text} at or above the expert baseline; recounting the "
            f"cells in this table gives {recount}/{count} "
            f"({_pct(summary.pct_higher_or_par)}). The recount is what this "
            "report asserts."
        )
    return notes
