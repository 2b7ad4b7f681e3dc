"""Semiotic square analysis pipeline: two LLM stages, structural
validation, rubric judging, and expert-comparison reports."""

from .corpus import (
    Medium,
    Provenance,
    ProvenanceKind,
    WorkAnalysis,
    WorkMeta,
    load_corpus,
    parse_key_value,
    select_examples,
    serialize_key_value,
)
from .gateway import Cassette, GatewayMode, GenerationParams, ModelEndpoint
from .judging import (
    ComparisonCell,
    JudgeRubric,
    JudgeScore,
    Outcome,
    classify,
    default_rubric,
    judge_analysis,
    summarize,
)
from .pipeline import PipelineConfig, PipelineRun, analyze_work, batch_analyze
from .render import RenderOptions, analysis_report, comparison_report, to_dot
from .square import (
    Relation,
    RelationKind,
    SemioticSquare,
    Term,
    TermRole,
    canonical_relation_set,
    validate_square,
)

__version__ = "0.1.0"
