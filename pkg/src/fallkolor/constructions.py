"""Explicit fall colorings of Kneser graphs.

Every function here verifies its output with ``is_fall`` before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coloring import Coloring, VertexMap, is_fall, pullback_coloring, verify_type2_hom
from .combinatorics import BlockDesign, SubsetLabel, construct_sts, verify_design
from .errors import ConstructionError, NoDesignError, RecipeUnverified
from .graph import Graph, bits_of, kneser


@dataclass(frozen=True)
class ConstructionResult:
    graph: Graph
    coloring: Coloring
    provenance: str
    verified: bool = True

    @property
    def k(self) -> int:
        return self.coloring.k


def _finish(g: Graph, classes: list[int], provenance: str, error=ConstructionError) -> ConstructionResult:
    c = Coloring.from_classes(classes, g.vertex_count).canonical()
    verdict = is_fall(g, c)
    if not verdict:
        raise error(f"{provenance}: result on {g.name} is not a fall coloring, witness {verdict.witness}", verdict.witness)
    return ConstructionResult(g, c, provenance)


def _check_design(d: BlockDesign, t: int, v: int, k: int) -> None:
    if (d.t, d.v, d.k, d.lam) != (t, v, k, 1):
        raise ValueError(
            f"design parameters {d.t}-({d.v},{d.k},{d.lam}) do not match required {t}-({v},{k},1)"
        )
    report = verify_design(d)
    if not report:
        raise ValueError(f"design fails verification: {report.witness} lies in {report.count} blocks")


def coloring_from_design(n: int, m: int, d: BlockDesign, g: Graph | None = None) -> ConstructionResult:
    """One color per block C of an m-(n, 2m-1, 1) design: all m-subsets of C."""
    if not 1 <= m <= n // 2:
        raise ValueError(f"need 1 <= m <= n/2, got n={n}, m={m}")
    _check_design(d, m, n, 2 * m - 1)
    g = g or kneser(n, m)
    classes = []
    for block in d.blocks:
        classes.append(bits_of(g.index_of(SubsetLabel(x, n)) for x in combinations(block.elements, m)))
    return _finish(g, classes, f"design coloring from a {m}-({n},{2 * m - 1},1) design")


def star_triangle_coloring(n: int) -> ConstructionResult:
    """KG(n, 2) for n = 2, 4 (mod 6): the star at n plus the triples of an STS(n-1)."""
    if n < 4 or n % 6 not in (2, 4):
        raise NoDesignError(
            f"no star-and-triangles partition of K_{n}: needs n >= 4 and n = 2 or 4 (mod 6)"
        )
    g = kneser(n, 2)
    star = bits_of(v for v, lab in enumerate(g.labels) if n in lab)
    classes = [star]
    for block in construct_sts(n - 1).blocks:
        classes.append(bits_of(g.index_of(SubsetLabel(p, n)) for p in combinations(block.elements, 2)))
    return _finish(g, classes, "star and triangles partition of K_n")


def thm1_image(A: SubsetLabel, n: int) -> SubsetLabel:
    """Image of an (m+1)-subset of [n+2] under the KG(n+2, m+1) -> KG(n, m) map."""
    top = {n + 1, n + 2}
    els = set(A.elements)
    if len(els & top) <= 1:
        return SubsetLabel.of(els - {max(els)}, n)
    rest = els - top
    return SubsetLabel.of(rest | {max(set(range(1, n + 1)) - els)}, n)


def thm1_map(
    n: int, m: int, source: Graph | None = None, target: Graph | None = None, check: bool = True
) -> VertexMap:
    """The two-case vertex map KG(n+2, m+1) -> KG(n, m), for n > 2m and m >= 2.

    With ``check`` the map must pass verify_type2_hom, else ConstructionError
    carries the witness.  ``check=False`` returns the raw map for inspection.
    """
    if m < 2:
        raise ValueError(f"hypothesis m >= 2 violated (m={m})")
    if n <= 2 * m:
        raise ValueError(f"hypothesis n > 2m violated (n={n}, m={m})")
    source = source or kneser(n + 2, m + 1)
    target = target or kneser(n, m)
    h = VertexMap(source, target, tuple(target.index_of(thm1_image(A, n)) for A in source.labels))
    if not check:
        return h
    verdict = verify_type2_hom(h)
    if not verdict:
        raise ConstructionError(f"map KG({n + 2},{m + 1}) -> KG({n},{m}) is not type-II: {verdict.witness}", verdict.witness)
    return h


def lift_coloring(n: int, m: int, c: Coloring, target: Graph | None = None) -> ConstructionResult:
    """Pull a fall coloring of KG(n, m) back to KG(n+2, m+1)."""
    target = target or kneser(n, m)
    verdict = is_fall(target, c)
    if not verdict:
        raise ValueError(f"input is not a fall coloring of KG({n},{m}): {verdict.witness}")
    h = thm1_map(n, m, target=target)
    lifted = pullback_coloring(h, c)
    return _finish(h.source, list(lifted.classes), f"lift KG({n},{m}) -> KG({n + 2},{m + 1})")


def _default_design(n: int, m: int) -> BlockDesign:
    if m == 3:
        return construct_sts(n)  # raises NoDesignError off the admissible residues
    raise NoDesignError(f"no {m - 1}-({n},{2 * m - 3},1) design available; supply one")


def prop4_coloring(n: int, m: int, d: BlockDesign | None = None) -> ConstructionResult:
    """Star extension: candidate (|B| + 1)-coloring of KG(n, m) from an (m-1)-(n, 2m-3, 1) design.

    Class 0 is the star of subsets containing n.  Each remaining m-subset A
    (so A lies in [n-1]) gets the color of the unique block containing
    A minus its largest element.  Raises RecipeUnverified when the result is
    not a fall coloring.
    """
    if not 2 <= m <= n // 2:
        raise ValueError(f"need 2 <= m <= n/2, got n={n}, m={m}")
    d = d or _default_design(n, m)
    _check_design(d, m - 1, n, 2 * m - 3)
    block_of = {}
    for i, block in enumerate(d.blocks):
        for x in combinations(block.elements, m - 1):
            block_of[x] = i
    g = kneser(n, m)
    classes = [0] * (d.b + 1)
    for v, lab in enumerate(g.labels):
        if n in lab:
            classes[0] |= 1 << v
        else:
            classes[1 + block_of[lab.elements[:-1]]] |= 1 << v
    if not all(classes):
        empty = classes.index(0)
        raise RecipeUnverified(f"star extension on {g.name}: class {empty} is empty", ("empty-class", empty))
    return _finish(g, classes, "star extension of a design coloring", RecipeUnverified)
