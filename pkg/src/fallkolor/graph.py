"""Simple graphs stored as one Python-int bit row per vertex."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .combinatorics import SubsetLabel, binomial, colex_subsets, parse_subset
from .errors import BudgetExceeded, UnlabeledGraphError

DEFAULT_VERTEX_BUDGET = 10**4


def iter_bits(row: int) -> Iterator[int]:
    while row:
        low = row & -row
        yield low.bit_length() - 1
        row ^= low


def bits_of(vertices: Iterable[int]) -> int:
    row = 0
    for v in vertices:
        row |= 1 << v
    return row


@dataclass(frozen=True, eq=False)
class Graph:
    """Finite simple graph on vertices 0..vertex_count-1.

    ``adjacency[v]`` is an int whose bit u is set iff u ~ v.  Kneser graphs
    carry one SubsetLabel per vertex, in colex order.
    """

    vertex_count: int
    adjacency: tuple[int, ...]
    labels: tuple[SubsetLabel, ...] | None = None
    name: str = "G"

    def __post_init__(self) -> None:
        adj = tuple(self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        if len(adj) != self.vertex_count:
            raise ValueError("adjacency row count differs from vertex_count")
        full = (1 << self.vertex_count) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} adjacent to out-of-range vertex")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.vertex_count:
                raise ValueError("label count differs from vertex_count")
            if len(set(labels)) != len(labels):
                raise ValueError("vertex labels are not pairwise distinct")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]], **kw) -> Graph:
        rows = [0] * vertex_count
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(vertex_count, tuple(rows), **kw)

    @property
    def full(self) -> int:
        return (1 << self.vertex_count) - 1

    def neighbors(self, v: int) -> int:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in iter_bits(self.adjacency[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adjacency) // 2

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.adjacency), default=0)

    def is_independent(self, row: int) -> bool:
        return all(not (self.adjacency[v] & row) for v in iter_bits(row))

    def is_maximal_independent(self, row: int) -> bool:
        if not row or not self.is_independent(row):
            return False
        dominated = row
        for v in iter_bits(row):
            dominated |= self.adjacency[v]
        return dominated == self.full

    def label_of(self, v: int) -> SubsetLabel:
        return self.require_labels()[v]

    def require_labels(self) -> tuple[SubsetLabel, ...]:
        if self.labels is None:
            raise UnlabeledGraphError(f"graph {self.name} carries no subset labels")
        return self.labels

    def index_of(self, label: SubsetLabel) -> int:
        index = self.__dict__.get("_label_index")
        if index is None:
            index = {lab: i for i, lab in enumerate(self.require_labels())}
            object.__setattr__(self, "_label_index", index)
        return index[label]


def closed_neighborhood(g: Graph, v: int) -> int:
    if not 0 <= v < g.vertex_count:
        raise IndexError(f"vertex {v} out of range for {g.vertex_count} vertices")
    return g.adjacency[v] | (1 << v)


def kneser(n: int, m: int, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> Graph:
    """KG(n, m): m-subsets of [n] in colex order, adjacent iff disjoint."""
    if m < 1 or n < 1:
        raise ValueError(f"kneser({n}, {m}): n and m must be positive")
    if m > n:
        raise ValueError(f"kneser({n}, {m}): m > n")
    size = binomial(n, m)
    if size > vertex_budget:
        raise BudgetExceeded(f"KG({n},{m}) has {size} vertices > vertex budget {vertex_budget}")
    labels = colex_subsets(n, m)
    masks = [bits_of(lab.elements) for lab in labels]
    rows = []
    for a in masks:
        row = 0
        for j, b in enumerate(masks):
            if not a & b:
                row |= 1 << j
        rows.append(row)
    return Graph(size, tuple(rows), tuple(labels), f"KG({n},{m})")


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)), name=f"K{n}")


def edgeless_graph(n: int) -> Graph:
    return Graph(n, (0,) * n, name=f"E{n}")


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def write_dimacs(g: Graph) -> str:
    lines = [f"c name {g.name}"]
    if g.labels is not None:
        lines += [f"c label {i + 1} {lab}" for i, lab in enumerate(g.labels)]
    edges = g.edges()
    lines.append(f"p edge {g.vertex_count} {len(edges)}")
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_dimacs(text: str, name: str | None = None) -> Graph:
    """Parse DIMACS edge format with the optional label sidecar comments.

    Edges may appear in any order; duplicates and self-loops are rejected.
    """
    vertex_count = None
    declared_edges = None
    edges: set[tuple[int, int]] = set()
    label_text: dict[int, str] = {}
    graph_name = name
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "c":
            if len(parts) >= 3 and parts[1] == "label":
                label_text[int(parts[2])] = "".join(parts[3:])
            elif len(parts) >= 3 and parts[1] == "name" and graph_name is None:
                graph_name = " ".join(parts[2:])
        elif parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ValueError(f"line {lineno}: bad problem line {line!r}")
            vertex_count, declared_edges = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if vertex_count is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise ValueError(f"line {lineno}: vertex out of range in {line!r}")
            if u == v:
                raise ValueError(f"line {lineno}: self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in edges:
                raise ValueError(f"line {lineno}: duplicate edge {key}")
            edges.add(key)
        else:
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if vertex_count is None:
        raise ValueError("missing problem line")
    if declared_edges != len(edges):
        raise ValueError(f"problem line declares {declared_edges} edges, found {len(edges)}")
    labels = None
    if label_text:
        if set(label_text) != set(range(1, vertex_count + 1)):
            raise ValueError("label sidecar must label every vertex exactly once")
        ground = max(max(parse_subset(t, 10**9).elements, default=0) for t in label_text.values())
        labels = tuple(parse_subset(label_text[i], ground) for i in range(1, vertex_count + 1))
    return Graph.from_edges(
        vertex_count, [(u - 1, v - 1) for u, v in sorted(edges)], labels=labels, name=graph_name or "G"
    )
