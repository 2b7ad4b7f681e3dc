"""Prompt assembly for the analysis stage.

The analyst prompt is an ordered bundle: background knowledge about the
work, the expert persona, the step-by-step instruction, then zero or
more worked examples rendered as Key: Value blocks.  Rendering the
bundle always yields exactly two messages, one system and one user.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .corpus import WorkAnalysis, serialize_key_value

__all__ = [
    "MessageRole",
    "Message",
    "MessageSequence",
    "PromptBundle",
    "EXAMPLE_DELIMITER",
    "default_context",
    "default_instruction",
    "build_prompt",
    "render_messages",
]


class MessageRole(Enum):
    SYSTEM = "system"
    USER = "user"


@dataclass(frozen=True)
class Message:
    role: MessageRole
    content: str


MessageSequence = tuple[Message, ...]

#: Line separating worked examples inside the user message.
EXAMPLE_DELIMITER = "---"

_DEFAULT_CONTEXT = (
    "You are a literary expert grounded in structuralist semiotics. You read "
    "narrative works through the Greimas semiotic square: a seme X set against "
    "its contrary anti-X, completed by the contradictories non-X and "
    "non-anti-X. You tie every claim to characters, motifs, and events of the "
    "work at hand, and you write with the care of published criticism."
)

_DEFAULT_INSTRUCTION = """\
Work through the analysis step by step:

1. Identify the seme X that anchors the work's deep structure and its contrary anti-X; together they form the core binary opposition.
2. Derive non-X, the contradictory that negates X without asserting anti-X.
3. Derive non-anti-X, the contradictory that negates anti-X and works in support of X.
4. Explain all six relations of the square: the contrariety X vs anti-X, the contradictions X vs non-X and anti-X vs non-anti-X, the implications non-anti-X -> X and non-X -> anti-X, and the subcontrariety non-X vs non-anti-X.
5. Summarize how the relationships interlock to generate the work's meaning.
6. Conclude with what the completed square reveals about the narrative as a whole.

Report the finished analysis in the Key: Value block format, one key per line, long values folded onto continuation lines indented by two spaces:

Work: <title>
X: <short concept phrase>
X-Gloss: <justification grounded in the work>
X-Exemplars: <character or motif>; <character or motif>
anti-X: <short concept phrase>
anti-X-Gloss: <justification grounded in the work>
anti-X-Exemplars: <character or motif>
non-X: <short concept phrase>
non-X-Gloss: <justification grounded in the work>
non-X-Exemplars: <character or motif>
non-anti-X: <short concept phrase>
non-anti-X-Gloss: <justification grounded in the work>
non-anti-X-Exemplars: <character or motif>
Relation[X vs anti-X]: <explanation>
Relation[X vs non-X]: <explanation>
Relation[anti-X vs non-anti-X]: <explanation>
Relation[non-anti-X -> X]: <explanation>
Relation[non-X -> anti-X]: <explanation>
Relation[non-X vs non-anti-X]: <explanation>
Summary: <summary of the relationships>"""

_TARGET_DIRECTIVE = (
    "Now apply the six steps to the work described under Background and reply "
    "with its completed Key: Value block only."
)


def default_context() -> str:
    """The analyst persona used as the system message."""
    return _DEFAULT_CONTEXT


def default_instruction() -> str:
    """The six-step instruction, ending with the output block template."""
    return _DEFAULT_INSTRUCTION


@dataclass(frozen=True)
class PromptBundle:
    """Ordered prompt components: knowledge, context, instruction, then
    the serialized example blocks."""

    knowledge: str
    context: str
    instruction: str
    examples: tuple[str, ...]


def build_prompt(
    knowledge: str,
    context: str,
    instruction: str,
    examples: Sequence[WorkAnalysis] = (),
) -> PromptBundle:
    """Assemble a bundle, serializing each example analysis.

    Every text component must be nonempty; examples must be valid, since
    serialization refuses anything else.
    """
    for name, value in (
        ("knowledge", knowledge),
        ("context", context),
        ("instruction", instruction),
    ):
        if not value.strip():
            raise ValueError(f"{name} empty")
    blocks = tuple(serialize_key_value(example) for example in examples)
    return PromptBundle(
        knowledge=knowledge,
        context=context,
        instruction=instruction,
        examples=blocks,
    )


def render_messages(bundle: PromptBundle) -> MessageSequence:
    """Render a bundle as exactly two messages.

    The context becomes the system message.  The user message carries
    the knowledge, the instruction, each example behind its own
    delimiter line, and the closing directive, in that order.
    """
    parts = [f"Background: {bundle.knowledge}", bundle.instruction]
    for block in bundle.examples:
        parts.append(EXAMPLE_DELIMITER + "\n" + block.rstrip("\n"))
    parts.append(_TARGET_DIRECTIVE)
    return (
        Message(role=MessageRole.SYSTEM, content=bundle.context),
        Message(role=MessageRole.USER, content="\n\n".join(parts)),
    )
