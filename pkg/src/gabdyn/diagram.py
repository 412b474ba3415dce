"""Coxeter-Dynkin diagrams: weighted graphs read off a Gram matrix, as DOT or JSON."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable

from .exact import BasisLabel, BilinearSpace


@dataclass(frozen=True)
class Vertex:
    id: str
    label: str
    self_intersection: Q


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    weight: Q


@dataclass(frozen=True)
class DynkinGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def vertex(self, id: str) -> Vertex:
        return next(v for v in self.vertices if v.id == id)

    def degree(self, id: str) -> int:
        return sum(1 for e in self.edges if id in (e.source, e.target))


def to_graph(space: BilinearSpace, drop: Iterable[BasisLabel] = ()) -> DynkinGraph:
    drop = set(drop)
    keep = [(n, b) for n, b in enumerate(space.basis) if b not in drop]
    vertices = tuple(
        Vertex(b.slug, space.name(b), space.gram[n][n]) for n, b in keep
    )
    edges = []
    for pos, (a, la) in enumerate(keep):
        for b, lb in keep[pos + 1:]:
            w = space.gram[a][b]
            if w != 0:
                edges.append(Edge(la.slug, lb.slug, w))
    return DynkinGraph(vertices, tuple(edges))


def _rational_text(x: Q) -> str:
    return str(Q(x))


def _rational_json(x: Q):
    x = Q(x)
    return x.numerator if x.denominator == 1 else str(x)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: DynkinGraph, name: str = "dynkin") -> str:
    lines = [f"graph {_dot_quote(name)} {{"]
    for v in g.vertices:
        label = f"{v.label} ({_rational_text(v.self_intersection)})"
        lines.append(f"  {v.id} [label={_dot_quote(label)}];")
    for e in g.edges:
        attrs = f"label={_dot_quote(_rational_text(e.weight))}"
        if e.weight < 0:
            attrs += ", style=dashed"
        lines.append(f"  {e.source} -- {e.target} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_json(g: DynkinGraph) -> str:
    doc = {
        "vertices": [
            {"id": v.id, "label": v.label, "self_intersection": _rational_json(v.self_intersection)}
            for v in g.vertices
        ],
        "edges": [
            {"source": e.source, "target": e.target, "weight": _rational_json(e.weight)}
            for e in g.edges
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def parse_json(text: str) -> DynkinGraph:
    doc = json.loads(text)
    return DynkinGraph(
        tuple(Vertex(v["id"], v["label"], Q(v["self_intersection"])) for v in doc["vertices"]),
        tuple(Edge(e["source"], e["target"], Q(e["weight"])) for e in doc["edges"]),
    )

