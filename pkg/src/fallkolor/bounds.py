"""Closed-form fall spectra of Kneser graphs and the Hilton-Milner bounds."""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import binomial, checked

EXACT, BOUNDS_ONLY, EMPTY, UNKNOWN = "exact-set", "bounds-only", "empty", "unknown"


@dataclass(frozen=True)
class SpectrumFormula:
    n: int
    m: int
    kind: str
    exact: frozenset[int] | None = None
    lower: int | None = None
    upper: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (EXACT, BOUNDS_ONLY, EMPTY, UNKNOWN):
            raise ValueError(f"unknown kind {self.kind!r}")
        if (self.exact is not None) != (self.kind == EXACT):
            raise ValueError("exact set must be present iff kind is exact-set")

    @property
    def spectrum(self) -> frozenset[int] | None:
        """The known spectrum (possibly empty), or None when it is open."""
        if self.kind == EXACT:
            return self.exact
        if self.kind == EMPTY:
            return frozenset()
        return None


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check(n: int, m: int) -> None:
    if n < 1 or not 1 <= m <= n:
        raise ValueError(f"need n >= 1 and 1 <= m <= n, got n={n}, m={m}")


def _kg2_spectrum(n: int) -> frozenset[int]:
    if n in (2, 3):
        return frozenset({1})
    if n == 4:
        return frozenset({2})
    r = n % 6
    if r in (1, 3):
        return frozenset({n * (n - 1) // 6})
    if r in (2, 4):
        return frozenset({(n - 1) * (n - 2) // 6 + 1})
    return frozenset()


def closed_form_spectrum(n: int, m: int) -> SpectrumFormula:
    """Fall(KG(n, m)) where it is known in closed form, else kind "unknown".

    Known cases: m = 1, m > n/2 (edgeless), n = 2m (perfect matching) and m = 2.
    For n >= 2m the returned formula also carries fall_bounds(n, m).
    """
    _check(n, m)
    lower = upper = None
    if n >= 2 * m:
        lower, upper = fall_bounds(n, m)
    if 2 * m > n:
        exact = frozenset({1})
    elif m == 1:
        exact = frozenset({n})
    elif n == 2 * m:
        exact = frozenset({2})
    elif m == 2:
        exact = _kg2_spectrum(n)
    else:
        return SpectrumFormula(n, m, UNKNOWN, lower=lower, upper=upper)
    if not exact:
        return SpectrumFormula(n, m, EMPTY, lower=lower, upper=upper)
    return SpectrumFormula(n, m, EXACT, exact, lower, upper)


def hilton_milner(n: int, m: int) -> int:
    """1 + C(n-1, m-1) - C(n-m-1, m-1): largest non-intersecting independent set of KG(n, m)."""
    if m < 1 or n < 2 * m:
        raise ValueError(f"Hilton-Milner bound needs n >= 2m >= 2, got n={n}, m={m}")
    return checked(1 + binomial(n - 1, m - 1) - binomial(n - m - 1, m - 1))


def fall_bounds(n: int, m: int) -> tuple[int, int]:
    """(lower, upper) with lower = ceil(C(n-1, m) / h) + 1 and upper = C(n, m) - C(n-m, m).

    The upper value is the stated bound on the fall achromatic number; it is
    violated by KG(n, 1) for n >= 2 and by KG(n, 2) for n >= 13 (see tests).
    """
    if m < 1 or n < 2 * m:
        raise ValueError(f"fall bounds need n >= 2m, got n={n}, m={m}")
    h = hilton_milner(n, m)
    lower = _ceil_div(binomial(n - 1, m), h) + 1
    upper = binomial(n, m) - binomial(n - m, m)
    return lower, upper


def degree_upper_bound(n: int, m: int) -> int:
    """C(n-m, m) + 1: a fall k-coloring needs k - 1 distinct colors among any vertex's neighbors."""
    _check(n, m)
    return binomial(n - m, m) + 1
