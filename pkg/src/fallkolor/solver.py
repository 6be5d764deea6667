"""Exhaustive fall-coloring search.

A coloring is fall iff each of its classes is a maximal independent set
(independent, and dominating the rest of the graph).  So fall k-colorings are
exactly the partitions of the vertex set into k maximal independent sets, and
the search below is an exact cover over the MIS catalog.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .coloring import Coloring, coloring_to_dict, format_coloring, is_fall
from .errors import BudgetExceeded
from .graph import Graph, iter_bits

DEFAULT_VERTEX_BUDGET = 200
DEFAULT_CATALOG_CAP = 10**6
DEFAULT_NODE_BUDGET = 10**8


class SearchInconclusive(BudgetExceeded):
    """The node budget ran out before the search for some k was complete."""

    def __init__(self, k: int, nodes: int):
        super().__init__(f"search for k={k} inconclusive after {nodes} nodes")
        self.k = k
        self.nodes = nodes


@dataclass(frozen=True, eq=False)
class MisCatalog:
    graph: Graph
    sets: tuple[int, ...]
    by_vertex: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> list[int]:
        return [s.bit_count() for s in self.sets]

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, row: object) -> bool:
        return row in self._index

    @property
    def _index(self) -> frozenset[int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = frozenset(self.sets)
            object.__setattr__(self, "_idx", idx)
        return idx


def _canonical_key(row: int) -> tuple[int, ...]:
    return tuple(iter_bits(row))


def enumerate_mis(
    g: Graph, vertex_budget: int = DEFAULT_VERTEX_BUDGET, cap: int = DEFAULT_CATALOG_CAP
) -> MisCatalog:
    """All maximal independent sets of g, via Bron-Kerbosch with pivoting on the complement."""
    if g.vertex_count > vertex_budget:
        raise BudgetExceeded(f"{g.name} has {g.vertex_count} vertices > MIS vertex budget {vertex_budget}")
    full = g.full
    # independent-set "neighbors" of v: non-adjacent vertices other than v
    comp = [full & ~row & ~(1 << v) for v, row in enumerate(g.adjacency)]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            if len(found) > cap:
                raise BudgetExceeded(f"MIS catalog of {g.name} exceeds cap {cap}")
            return
        px = p | x
        pivot = max(iter_bits(px), key=lambda u: (comp[u] & p).bit_count())
        for v in iter_bits(p & ~comp[pivot]):
            bit = 1 << v
            expand(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit

    if g.vertex_count:
        expand(0, full, 0)
    sets = sorted(found, key=_canonical_key)
    for s in sets:
        if not g.is_maximal_independent(s):
            raise AssertionError(f"enumerated set {_canonical_key(s)} is not maximal independent")
    by_vertex = [[] for _ in range(g.vertex_count)]
    for i, s in enumerate(sets):
        for v in iter_bits(s):
            by_vertex[v].append(i)
    return MisCatalog(g, tuple(sets), tuple(map(tuple, by_vertex)))


def k_window(catalog: MisCatalog) -> tuple[int, int]:
    """[ceil(V/alpha), min(delta + 1, floor(V/i_min))]; empty when lo > hi."""
    g = catalog.graph
    n = g.vertex_count
    if not catalog.sets:
        return 1, 0
    sizes = catalog.sizes
    alpha, i_min = max(sizes), min(sizes)
    return -(-n // alpha), min(g.min_degree() + 1, n // i_min)


class _Search:
    """Exact cover of the vertex set by exactly k catalog sets.

    Branches on the least uncovered vertex and tries its sets in catalog
    order, so the first cover found is the canonical witness.
    """

    def __init__(self, catalog: MisCatalog, k: int, budget: int):
        self.sets = catalog.sets
        self.by_vertex = catalog.by_vertex
        self.full = catalog.graph.full
        self.n = catalog.graph.vertex_count
        sizes = catalog.sizes or [1]
        self.smallest, self.largest = min(sizes), max(sizes)
        self.k = k
        self.budget = budget
        self.nodes = 0

    def children(self, covered: int) -> list[int]:
        free = self.full & ~covered
        v = (free & -free).bit_length() - 1
        return [i for i in self.by_vertex[v] if not self.sets[i] & covered]

    def run(self, covered: int, chosen: list[int]) -> list[int] | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchInconclusive(self.k, self.nodes)
        if covered == self.full:
            return list(chosen) if len(chosen) == self.k else None
        left = self.k - len(chosen)
        remaining = self.n - covered.bit_count()
        if left <= 0 or remaining < left * self.smallest or remaining > left * self.largest:
            return None
        sets = self.sets
        for i in self.children(covered):
            chosen.append(i)
            hit = self.run(covered | sets[i], chosen)
            if hit is not None:
                return hit
            chosen.pop()
        return None


# per-process state for worker pools
_WORKER_CATALOG: MisCatalog | None = None


def _init_worker(catalog: MisCatalog) -> None:
    global _WORKER_CATALOG
    _WORKER_CATALOG = catalog


def _search_child(args: tuple[int, int, int]) -> tuple[str, list[int] | None, int]:
    k, first, budget = args
    search = _Search(_WORKER_CATALOG, k, budget)
    try:
        hit = search.run(search.sets[first], [first])
    except SearchInconclusive:
        return "inconclusive", None, search.nodes
    return ("found" if hit is not None else "none"), hit, search.nodes


def _search_k(args: tuple[int, int]) -> tuple[int, str, list[int] | None, int]:
    k, budget = args
    search = _Search(_WORKER_CATALOG, k, budget)
    try:
        hit = search.run(0, [])
    except SearchInconclusive:
        return k, "inconclusive", None, search.nodes
    return k, ("found" if hit is not None else "none"), hit, search.nodes


def _to_coloring(catalog: MisCatalog, chosen: list[int]) -> Coloring:
    c = Coloring.from_classes([catalog.sets[i] for i in chosen], catalog.graph.vertex_count).canonical()
    verdict = is_fall(catalog.graph, c)
    if not verdict:
        raise AssertionError(f"solver produced a non-fall coloring: {verdict.witness}")
    return c


def _default_budget() -> int:
    env = os.environ.get("FALLKOLOR_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET


def find_fall_coloring(
    g: Graph,
    k: int,
    *,
    catalog: MisCatalog | None = None,
    node_budget: int | None = None,
    workers: int = 1,
) -> Coloring | None:
    """A fall k-coloring of g, or None when provably none exists.

    Raises SearchInconclusive if the node budget runs out first.  With
    workers > 1 the subtrees under the first branching vertex are searched
    in parallel; the witness is the one from the earliest subtree holding a
    solution, which is the same coloring a single worker finds.
    """
    if k < 1:
        raise ValueError("k must be positive")
    budget = _default_budget() if node_budget is None else node_budget
    catalog = catalog or enumerate_mis(g)
    lo, hi = k_window(catalog)
    if not lo <= k <= hi:
        return None
    if workers <= 1:
        search = _Search(catalog, k, budget)
        hit = search.run(0, [])
        return None if hit is None else _to_coloring(catalog, hit)

    firsts = _Search(catalog, k, budget).children(0)
    with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(catalog,)) as pool:
        outcomes = list(pool.map(_search_child, [(k, i, budget) for i in firsts]))
    for status, hit, nodes in outcomes:
        if status == "inconclusive":
            raise SearchInconclusive(k, nodes)
        if status == "found":
            return _to_coloring(catalog, hit)
    return None


@dataclass
class SpectrumResult:
    graph_name: str
    k_min: int
    k_max: int
    spectrum: tuple[int, ...]
    witnesses: dict[int, Coloring]
    unresolved: tuple[int, ...] = ()
    nodes: dict[int, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def partial(self) -> bool:
        return bool(self.unresolved)

    @property
    def fall_chromatic(self) -> int | None:
        return min(self.spectrum, default=None)

    @property
    def fall_achromatic(self) -> int | None:
        return max(self.spectrum, default=None)

    def to_dict(self, g: Graph) -> dict:
        """Serializable content; search statistics are left out so output is reproducible."""
        return {
            "graph": self.graph_name,
            "k_range": [self.k_min, self.k_max],
            "spectrum": list(self.spectrum),
            "partial": self.partial,
            "unresolved": list(self.unresolved),
            "witnesses": {str(k): coloring_to_dict(g, c) for k, c in sorted(self.witnesses.items())},
        }

    def dumps(self, g: Graph) -> str:
        return json.dumps(self.to_dict(g), indent=1) + "\n"

    def write(self, g: Graph, outdir: str | os.PathLike) -> list[Path]:
        """spectrum.json plus one coloring file per attained k."""
        out = Path(outdir)
        out.mkdir(parents=True, exist_ok=True)
        paths = [out / "spectrum.json"]
        paths[0].write_text(self.dumps(g))
        for k in self.spectrum:
            p = out / f"coloring_k{k}.json"
            p.write_text(format_coloring(g, self.witnesses[k], f"solver exact cover on {self.graph_name}"))
            paths.append(p)
        return paths


def fall_spectrum(
    g: Graph,
    k_min: int | None = None,
    k_max: int | None = None,
    *,
    node_budget: int | None = None,
    workers: int = 1,
    catalog: MisCatalog | None = None,
) -> SpectrumResult:
    """Fall(G) restricted to [k_min, k_max] (default: the pruning window).

    k values outside the window are settled by the bounds alone.  Values
    whose search runs out of budget are listed in ``unresolved``.
    """
    start = time.perf_counter()
    budget = _default_budget() if node_budget is None else node_budget
    catalog = catalog or enumerate_mis(g)
    lo, hi = k_window(catalog)
    k_min = lo if k_min is None else max(1, k_min)
    k_max = hi if k_max is None else k_max
    ks = [k for k in range(max(k_min, lo), min(k_max, hi) + 1)]

    if workers > 1 and len(ks) > 1:
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(catalog,)) as pool:
            outcomes = list(pool.map(_search_k, [(k, budget) for k in ks]))
    else:
        _init_worker(catalog)
        outcomes = [_search_k((k, budget)) for k in ks]

    spectrum, witnesses, unresolved, nodes = [], {}, [], {}
    for k, status, hit, count in sorted(outcomes, key=lambda o: o[0]):
        nodes[k] = count
        if status == "found":
            spectrum.append(k)
            witnesses[k] = _to_coloring(catalog, hit)
        elif status == "inconclusive":
            unresolved.append(k)
    return SpectrumResult(
        g.name, k_min, k_max, tuple(spectrum), witnesses, tuple(unresolved), nodes,
        time.perf_counter() - start,
    )
