"""A small, independent parser for the DOT subset the renderer emits.

Deliberately written against the DOT language rules rather than against
the renderer's code, so it can serve as an oracle: a digraph with node
statements, edge statements, attribute lists, quoted strings with
backslash escapes, and anonymous ``{ ... }`` subgraphs used for rank
groups.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class DotParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (token {position})")
        self.position = position


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<string>"(?:\\.|[^"\\])*")
  | (?P<id>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<arrow>->)
  | (?P<punct>[{}\[\];,=])
    """,
    re.VERBOSE,
)

_ESCAPES = {"\\\\": "\\", '\\"': '"', "\\n": "\n"}


def _unquote(raw: str) -> str:
    body = raw[1:-1]
    out = []
    index = 0
    while index < len(body):
        if body[index] == "\\":
            pair = body[index : index + 2]
            if pair not in _ESCAPES:
                raise ValueError(f"unsupported escape {pair!r}")
            out.append(_ESCAPES[pair])
            index += 2
        else:
            out.append(body[index])
            index += 1
    return "".join(out)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise DotParseError(f"unexpected character {text[position]!r}", len(tokens))
        position = match.end()
        kind = match.lastgroup
        if kind == "ws":
            continue
        value = match.group()
        if kind == "string":
            value = _unquote(value)
        tokens.append((kind, value))
    return tokens


@dataclass
class DotGraph:
    name: str
    graph_attrs: dict[str, str] = field(default_factory=dict)
    node_defaults: dict[str, str] = field(default_factory=dict)
    nodes: dict[str, dict[str, str]] = field(default_factory=dict)
    edges: list[tuple[str, str, dict[str, str]]] = field(default_factory=list)
    rank_groups: list[list[str]] = field(default_factory=list)


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> tuple[str, str] | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def take(self, kind: str | None = None, value: str | None = None) -> str:
        token = self.peek()
        if token is None:
            raise DotParseError("unexpected end of input", self.index)
        if kind is not None and token[0] != kind:
            raise DotParseError(f"expected {kind}, got {token}", self.index)
        if value is not None and token[1] != value:
            raise DotParseError(f"expected {value!r}, got {token[1]!r}", self.index)
        self.index += 1
        return token[1]

    def at(self, kind: str, value: str | None = None) -> bool:
        token = self.peek()
        return (
            token is not None
            and token[0] == kind
            and (value is None or token[1] == value)
        )

    def parse(self) -> DotGraph:
        self.take("id", "digraph")
        graph = DotGraph(name=self.take("id"))
        self.take("punct", "{")
        while not self.at("punct", "}"):
            self.statement(graph)
        self.take("punct", "}")
        if self.peek() is not None:
            raise DotParseError("trailing input after graph", self.index)
        return graph

    def statement(self, graph: DotGraph) -> None:
        if self.at("punct", "{"):
            self.subgraph(graph)
            return
        name = self.take("id")
        if name in ("node", "edge", "graph") and self.at("punct", "["):
            attrs = self.attr_list()
            self.take("punct", ";")
            if name == "node":
                graph.node_defaults.update(attrs)
            elif name == "graph":
                graph.graph_attrs.update(attrs)
            return
        if self.at("punct", "="):
            self.take("punct", "=")
            graph.graph_attrs[name] = self.take()
            self.take("punct", ";")
            return
        if self.at("arrow"):
            self.take("arrow")
            head = self.take("id")
            attrs = self.attr_list() if self.at("punct", "[") else {}
            self.take("punct", ";")
            graph.edges.append((name, head, attrs))
            return
        attrs = self.attr_list() if self.at("punct", "[") else {}
        self.take("punct", ";")
        if name in graph.nodes:
            graph.nodes[name].update(attrs)
        else:
            graph.nodes[name] = attrs

    def subgraph(self, graph: DotGraph) -> None:
        self.take("punct", "{")
        attrs: dict[str, str] = {}
        members: list[str] = []
        while not self.at("punct", "}"):
            name = self.take("id")
            if self.at("punct", "="):
                self.take("punct", "=")
                attrs[name] = self.take()
            else:
                members.append(name)
            self.take("punct", ";")
        self.take("punct", "}")
        if attrs.get("rank") == "same":
            graph.rank_groups.append(members)

    def attr_list(self) -> dict[str, str]:
        self.take("punct", "[")
        attrs: dict[str, str] = {}
        while not self.at("punct", "]"):
            key = self.take("id")
            self.take("punct", "=")
            attrs[key] = self.take()
            if self.at("punct", ","):
                self.take("punct", ",")
        self.take("punct", "]")
        return attrs


def parse_dot(text: str) -> DotGraph:
    """Parse the renderer's DOT subset into a structured graph."""
    return _Parser(_tokenize(text)).parse()
