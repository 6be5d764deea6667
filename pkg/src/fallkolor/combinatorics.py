"""Subset arithmetic, colex ranking, block designs and Steiner triple systems."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, FallkolorError, NoDesignError

INT64_MAX = 2**63 - 1
DEFAULT_DESIGN_BUDGET = 10**7


def checked(value: int) -> int:
    """Reject integers outside the signed 64-bit range."""
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise OverflowError(f"integer {value} exceeds 64-bit range")
    return value


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError(f"binomial({n}, {k}): arguments must be nonnegative")
    if k > n:
        return 0
    return checked(math.comb(n, k))


@dataclass(frozen=True, order=True)
class SubsetLabel:
    """A sorted m-subset of [n] = {1..n}."""

    elements: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError(f"subset elements must be strictly increasing: {els}")
        if els and (els[0] < 1 or els[-1] > self.n):
            raise ValueError(f"subset {els} not contained in [1..{self.n}]")

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> SubsetLabel:
        return cls(tuple(sorted(elements)), n)

    @property
    def m(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)


def parse_subset(text: str, n: int) -> SubsetLabel:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"malformed subset literal {text!r}")
    body = text[1:-1].strip()
    els = [int(x) for x in body.split(",")] if body else []
    return SubsetLabel.of(els, n)


def colex_rank(s: SubsetLabel | Sequence[int]) -> int:
    """Colexicographic index (0-based) of a subset among all subsets of equal size.

    For sorted elements a_1 < ... < a_m (1-based) the rank is
    sum_i C(a_i - 1, i).
    """
    els = s.elements if isinstance(s, SubsetLabel) else tuple(s)
    if any(b <= a for a, b in zip(els, els[1:])) or (els and els[0] < 1):
        raise ValueError(f"malformed subset {els}")
    return sum(binomial(a - 1, i) for i, a in enumerate(els, start=1))


def colex_unrank(r: int, n: int, m: int) -> SubsetLabel:
    total = binomial(n, m)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range [0, {total}) for C({n},{m})")
    els = []
    x = n
    for i in range(m, 0, -1):
        # largest x with C(x-1, i) <= r
        while binomial(x - 1, i) > r:
            x -= 1
        els.append(x)
        r -= binomial(x - 1, i)
        x -= 1
    return SubsetLabel(tuple(reversed(els)), n)


def colex_subsets(n: int, m: int) -> list[SubsetLabel]:
    """All m-subsets of [n] in colex order."""
    subsets = [tuple(c) for c in combinations(range(1, n + 1), m)]
    subsets.sort(key=lambda c: c[::-1])
    return [SubsetLabel(c, n) for c in subsets]


@dataclass(frozen=True)
class BlockDesign:
    """A t-(v, k, lambda) design candidate: blocks of size k over [v]."""

    t: int
    v: int
    k: int
    lam: int
    blocks: tuple[SubsetLabel, ...]

    def __post_init__(self) -> None:
        if not (self.v >= self.k >= self.t >= 1) or self.lam < 1:
            raise ValueError(
                f"invalid design parameters t={self.t} v={self.v} k={self.k} lambda={self.lam}"
            )
        blocks = tuple(
            b if isinstance(b, SubsetLabel) else SubsetLabel.of(b, self.v) for b in self.blocks
        )
        object.__setattr__(self, "blocks", blocks)
        for b in blocks:
            if len(b) != self.k or b.n != self.v:
                raise ValueError(f"block {b} is not a {self.k}-subset of [{self.v}]")

    @property
    def b(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class DesignReport:
    ok: bool
    witness: tuple[int, ...] | None = None
    count: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_design(d: BlockDesign, budget: int = DEFAULT_DESIGN_BUDGET) -> DesignReport:
    """Check that every t-subset of [v] lies in exactly lambda blocks.

    On failure the report carries the colex-least offending t-subset and its count.
    """
    n_tsubsets = binomial(d.v, d.t)
    if n_tsubsets > budget:
        raise BudgetExceeded(
            f"design too large to verify: C({d.v},{d.t}) = {n_tsubsets} t-subsets > budget {budget}"
        )
    counts: dict[tuple[int, ...], int] = {}
    for block in d.blocks:
        for ts in combinations(block.elements, d.t):
            counts[ts] = counts.get(ts, 0) + 1
    for ts in colex_subsets(d.v, d.t):
        c = counts.get(ts.elements, 0)
        if c != d.lam:
            return DesignReport(False, ts.elements, c)
    return DesignReport(True)


def _idempotent_quasigroup(q: int):
    # q odd: x∘y = (x + y)(q + 1)/2 mod q
    half = (q + 1) // 2
    return lambda x, y: ((x + y) * half) % q


def _half_idempotent_quasigroup(q: int):
    # q even: addition table of Z_q with symbol 2a -> a, 2a+1 -> q/2 + a
    h = q // 2

    def op(x: int, y: int) -> int:
        s = (x + y) % q
        return s // 2 if s % 2 == 0 else h + s // 2

    return op


def construct_sts(v: int) -> BlockDesign:
    """Deterministic Steiner triple system of order v.

    Bose construction for v = 3 (mod 6), Skolem construction for v = 1 (mod 6).
    """
    if v < 3:
        raise ValueError(f"STS order must be at least 3, got {v}")
    if v % 6 not in (1, 3):
        raise NoDesignError(f"no STS({v}) exists: v must be 1 or 3 (mod 6)")

    triples: list[tuple[int, int, int]] = []
    if v % 6 == 3:
        q = v // 3
        op = _idempotent_quasigroup(q)
        pt = lambda x, i: x + (i % 3) * q + 1  # noqa: E731
        for x in range(q):
            triples.append((pt(x, 0), pt(x, 1), pt(x, 2)))
        for i in range(3):
            for x, y in combinations(range(q), 2):
                triples.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    else:
        q = (v - 1) // 3
        h = q // 2
        op = _half_idempotent_quasigroup(q)
        pt = lambda x, i: x + (i % 3) * q + 1  # noqa: E731
        inf = v
        for x in range(h):
            triples.append((pt(x, 0), pt(x, 1), pt(x, 2)))
        for x in range(h):
            for i in range(3):
                triples.append((inf, pt(h + x, i), pt(x, i + 1)))
        for i in range(3):
            for x, y in combinations(range(q), 2):
                triples.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))

    design = BlockDesign(2, v, 3, 1, tuple(SubsetLabel.of(t, v) for t in sorted(map(sorted, triples))))
    report = verify_design(design)
    if not report or design.b != v * (v - 1) // 6:
        raise FallkolorError(
            f"internal error: STS({v}) construction invalid, pair {report.witness} "
            f"covered {report.count} times, {design.b} blocks"
        )
    return design


def format_design(d: BlockDesign) -> str:
    lines = [f"{d.t} {d.v} {d.k} {d.lam} {d.b}"]
    lines += [" ".join(map(str, b.elements)) for b in d.blocks]
    return "\n".join(lines) + "\n"


def parse_design(text: str) -> BlockDesign:
    """Parse the "t v k lambda b" header followed by b block lines."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty design file")
    header = lines[0].split()
    if len(header) != 5:
        raise ValueError(f"design header must be 't v k lambda b', got {lines[0]!r}")
    t, v, k, lam, b = map(int, header)
    rows = lines[1:]
    if len(rows) != b:
        raise ValueError(f"design header declares {b} blocks, found {len(rows)}")
    blocks = []
    for row in rows:
        els = [int(x) for x in row.split()]
        if len(set(els)) != len(els):
            raise ValueError(f"block {row!r} has repeated elements")
        blocks.append(SubsetLabel.of(els, v))
    return BlockDesign(t, v, k, lam, tuple(blocks))
