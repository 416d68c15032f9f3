"""Named resource-graph builders: ``path:N``, ``ring:N``, ``triangle``, ``custom:FILE``."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from mbqncompat.errors import LiteralParseError
from mbqncompat.graph import Graph, parse_graph_literal, path_graph, ring_graph, triangle_graph

BUILDERS = ("path", "ring", "triangle", "custom")


@dataclass(frozen=True)
class TopologySpec:
    builder: str
    size: int | None = None
    source: str | None = None

    def build(self) -> Graph:
        if self.builder == "path":
            return path_graph(self.size)
        if self.builder == "ring":
            return ring_graph(self.size)
        if self.builder == "triangle":
            return triangle_graph()
        if self.builder == "custom":
            return parse_graph_literal(Path(self.source).read_text())
        raise LiteralParseError(f"unknown topology builder {self.builder!r}")

    def __str__(self) -> str:
        if self.builder in ("path", "ring"):
            return f"{self.builder}:{self.size}"
        if self.builder == "custom":
            return f"custom:{self.source}"
        return self.builder


def parse_topology(text: str) -> TopologySpec:
    name, sep, arg = text.strip().partition(":")
    if name not in BUILDERS:
        raise LiteralParseError(f"unknown topology builder {name!r}; expected one of {', '.join(BUILDERS)}")
    if name == "triangle":
        if sep:
            raise LiteralParseError("triangle takes no argument", 1, len(name) + 1)
        return TopologySpec("triangle")
    if not arg:
        raise LiteralParseError(f"{name} requires an argument, e.g. {name}:7", 1, len(name) + 1)
    if name == "custom":
        return TopologySpec("custom", source=arg)
    try:
        size = int(arg)
    except ValueError:
        raise LiteralParseError(f"invalid size {arg!r}", 1, len(name) + 2) from None
    minimum = 3 if name == "ring" else 1
    if size < minimum:
        raise LiteralParseError(f"{name} needs at least {minimum} vertices", 1, len(name) + 2)
    return TopologySpec(name, size)


def sized_topology(builder: str, n: int) -> Graph:
    """Builder family instantiated at ``n`` vertices, for size sweeps."""
    if builder not in ("path", "ring"):
        raise ValueError(f"builder {builder!r} cannot be swept over sizes")
    return TopologySpec(builder, n).build()
