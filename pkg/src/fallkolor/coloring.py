"""Colorings, fall-coloring checks and type-II homomorphisms."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, NamedTuple, Sequence

from .combinatorics import parse_subset
from .graph import Graph, iter_bits

CHECKED = True  # re-verify the pullback contract on every call


class Verdict(NamedTuple):
    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True, eq=False)
class Coloring:
    """A map from vertices 0..V-1 to colors 1..k, with its color classes as bit rows."""

    k: int
    assignment: tuple[int, ...]
    classes: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("a coloring needs at least one color")
        if len(self.classes) != self.k:
            raise ValueError("need exactly k class rows")
        seen = 0
        for i, row in enumerate(self.classes, start=1):
            if row & seen:
                raise ValueError("color classes overlap")
            seen |= row
            for v in iter_bits(row):
                if v >= len(self.assignment) or self.assignment[v] != i:
                    raise ValueError(f"class {i} disagrees with assignment at vertex {v}")
        if seen != (1 << len(self.assignment)) - 1:
            raise ValueError("color classes do not cover every vertex")

    @classmethod
    def from_assignment(cls, assignment: Sequence[int], k: int | None = None) -> Coloring:
        assignment = tuple(assignment)
        if k is None:
            k = max(assignment, default=1)
        classes = [0] * k
        for v, c in enumerate(assignment):
            if not 1 <= c <= k:
                raise ValueError(f"vertex {v} has color {c} outside [1..{k}]")
            classes[c - 1] |= 1 << v
        return cls(k, assignment, tuple(classes))

    @classmethod
    def from_classes(cls, classes: Sequence[int], vertex_count: int) -> Coloring:
        assignment = [0] * vertex_count
        for i, row in enumerate(classes, start=1):
            for v in iter_bits(row):
                if assignment[v]:
                    raise ValueError(f"vertex {v} lies in two classes")
                assignment[v] = i
        if 0 in assignment:
            raise ValueError(f"vertex {assignment.index(0)} is uncolored")
        return cls(len(classes), tuple(assignment), tuple(classes))

    @property
    def vertex_count(self) -> int:
        return len(self.assignment)

    def color(self, v: int) -> int:
        return self.assignment[v]

    def canonical(self) -> Coloring:
        """Classes sorted by their least vertex, colors renumbered to match (empty classes last)."""
        order = sorted(self.classes, key=lambda r: (r == 0, (r & -r).bit_length()))
        return Coloring.from_classes(order, self.vertex_count)

    def class_members(self) -> list[list[int]]:
        return [list(iter_bits(r)) for r in self.classes]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.k == other.k and self.assignment == other.assignment

    def __hash__(self) -> int:
        return hash((self.k, self.assignment))


def _check_shape(g: Graph, c: Coloring) -> None:
    if c.vertex_count != g.vertex_count:
        raise ValueError(
            f"coloring covers {c.vertex_count} vertices but graph {g.name} has {g.vertex_count}"
        )


def is_proper(g: Graph, c: Coloring) -> Verdict:
    """Witness on failure: the least monochromatic edge (u, v) with u < v."""
    _check_shape(g, c)
    for u in range(g.vertex_count):
        clash = g.adjacency[u] & c.classes[c.assignment[u] - 1] & ~((2 << u) - 1)
        if clash:
            return Verdict(False, (u, (clash & -clash).bit_length() - 1))
    return Verdict(True)


def _missing_colors(g: Graph, c: Coloring, v: int) -> list[int]:
    nbhd = g.adjacency[v] | (1 << v)
    return [i for i, row in enumerate(c.classes, start=1) if not row & nbhd]


def colorful_vertices(g: Graph, c: Coloring) -> int:
    """Bit row of vertices whose closed neighborhood carries all k colors."""
    _check_shape(g, c)
    out = 0
    for v in range(g.vertex_count):
        nbhd = g.adjacency[v] | (1 << v)
        if all(row & nbhd for row in c.classes):
            out |= 1 << v
    return out


def is_fall(g: Graph, c: Coloring) -> Verdict:
    """Proper and every vertex colorful.

    Witness: ``("edge", (u, v))`` for a monochromatic edge, else
    ``("vertex", v, missing_color)`` for the least non-colorful vertex.
    """
    proper = is_proper(g, c)
    if not proper:
        return Verdict(False, ("edge", proper.witness))
    for v in range(g.vertex_count):
        missing = _missing_colors(g, c, v)
        if missing:
            return Verdict(False, ("vertex", v, missing[0]))
    return Verdict(True)


def is_fall_by_classes(g: Graph, c: Coloring) -> bool:
    """Independent class-by-class check: every class is a maximal independent set."""
    _check_shape(g, c)
    return all(g.is_maximal_independent(row) for row in c.classes)


def intersecting_classes(g: Graph, c: Coloring) -> list[tuple[int, frozenset[int]]]:
    """(color, common elements) for each class whose labels share an element."""
    labels = g.require_labels()
    out = []
    for i, row in enumerate(c.classes, start=1):
        members = list(iter_bits(row))
        if not members:
            continue
        common = labels[members[0]].as_set()
        for v in members[1:]:
            common &= labels[v].as_set()
        if common:
            out.append((i, common))
    return out


@dataclass(frozen=True, eq=False)
class VertexMap:
    source: Graph
    target: Graph
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        mapping = tuple(self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if len(mapping) != self.source.vertex_count:
            raise ValueError("map must be total over the source vertices")
        for v, t in enumerate(mapping):
            if not 0 <= t < self.target.vertex_count:
                raise ValueError(f"image {t} of source vertex {v} is not a target vertex")

    @classmethod
    def identity(cls, g: Graph) -> VertexMap:
        return cls(g, g, tuple(range(g.vertex_count)))

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def preimages(self) -> list[int]:
        rows = [0] * self.target.vertex_count
        for v, t in enumerate(self.mapping):
            rows[t] |= 1 << v
        return rows


def verify_type2_hom(h: VertexMap) -> Verdict:
    """Check edge preservation (1) and the preimage-neighbor condition (2).

    Witnesses: ``(1, (u, v))`` for a source edge whose image is not an edge;
    ``(2, (t1, t2), v)`` when source vertex v over t2 has no neighbor over t1.
    Empty preimages satisfy (2) vacuously.
    """
    src, tgt, f = h.source, h.target, h.mapping
    for u, v in src.edges():
        if not tgt.has_edge(f[u], f[v]):
            return Verdict(False, (1, (u, v)))
    pre = h.preimages()
    for t1 in range(tgt.vertex_count):
        for t2 in iter_bits(tgt.adjacency[t1]):
            for v in iter_bits(pre[t2]):
                if not src.adjacency[v] & pre[t1]:
                    return Verdict(False, (2, (t1, t2), v))
    return Verdict(True)


def pullback_coloring(h: VertexMap, c: Coloring) -> Coloring:
    if c.vertex_count != h.target.vertex_count:
        raise ValueError("coloring does not match the map's target graph")
    pulled = Coloring.from_assignment([c.assignment[t] for t in h.mapping], c.k)
    if CHECKED and verify_type2_hom(h) and is_fall(h.target, c):
        assert is_fall(h.source, pulled), "pullback of a fall coloring along a type-II map is not fall"
    return pulled


def compose_maps(f1: VertexMap, f2: VertexMap) -> VertexMap:
    """f2 after f1."""
    if f1.target is not f2.source and (
        f1.target.vertex_count != f2.source.vertex_count or f1.target.adjacency != f2.source.adjacency
    ):
        raise ValueError("cannot compose: first map's target is not second map's source")
    composite = VertexMap(f1.source, f2.target, tuple(f2.mapping[t] for t in f1.mapping))
    if CHECKED and verify_type2_hom(f1) and verify_type2_hom(f2):
        assert verify_type2_hom(composite), "composite of type-II maps is not type-II"
    return composite


def _vertex_name(g: Graph, v: int) -> str | int:
    return str(g.labels[v]) if g.labels is not None else v + 1


def coloring_to_dict(g: Graph, c: Coloring) -> dict:
    c = c.canonical()
    return {"k": c.k, "classes": [[_vertex_name(g, v) for v in iter_bits(r)] for r in c.classes]}


def format_coloring(g: Graph, c: Coloring, provenance: str | None = None) -> str:
    head = f"# provenance: {provenance}\n" if provenance else ""
    return head + json.dumps(coloring_to_dict(g, c), indent=1) + "\n"


def coloring_from_dict(g: Graph, data: dict) -> Coloring:
    k = int(data["k"])
    classes = data["classes"]
    if len(classes) != k:
        raise ValueError(f"coloring declares k={k} but lists {len(classes)} classes")
    rows = []
    for cls in classes:
        row = 0
        for name in cls:
            if isinstance(name, str):
                labels = g.require_labels()
                v = g.index_of(parse_subset(name, labels[0].n))
            else:
                v = int(name) - 1
                if not 0 <= v < g.vertex_count:
                    raise ValueError(f"vertex {name} out of range")
            row |= 1 << v
        rows.append(row)
    return Coloring.from_classes(rows, g.vertex_count)


def parse_coloring(g: Graph, text: str) -> tuple[Coloring, str | None]:
    """Read a coloring document; returns the coloring and its provenance line, if any."""
    provenance = None
    body = []
    for line in text.splitlines():
        if line.startswith("#"):
            if line.startswith("# provenance:"):
                provenance = line.split(":", 1)[1].strip()
            continue
        body.append(line)
    return coloring_from_dict(g, json.loads("\n".join(body))), provenance
