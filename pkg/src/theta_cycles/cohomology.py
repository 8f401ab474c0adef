"""Hodge data of H*(g,K;A_q) from the Levi blocks of a level pattern.

The (m,m) part of H*(l, L cap K) is the Poincare polynomial of the compact
dual of the Levi, a product of Grassmannians Gr(x, x+y), each contributing
a Gaussian binomial.  The whole diagonal then moves to bidegree
(R+ + m, R- + m).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .parabolic import LevelPattern, invariants


@lru_cache(maxsize=None)
def _gauss(n: int, k: int) -> tuple[int, ...]:
    if k == 0 or k == n:
        return (1,)
    # [n,k] = [n-1,k-1] + t^k [n-1,k]
    left = _gauss(n - 1, k - 1)
    right = _gauss(n - 1, k)
    out = [0] * (k * (n - k) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + k] += c
    return tuple(out)


def gaussian_binomial(n: int, k: int) -> tuple[int, ...]:
    """Coefficients of the Gaussian binomial [n choose k], lowest degree first."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    return _gauss(n, k)


def convolve(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


@dataclass(frozen=True)
class PoincarePolynomial:
    shift: tuple[int, int]
    diag: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.diag)

    def bidegrees(self) -> dict[tuple[int, int], int]:
        a0, b0 = self.shift
        return {(a0 + m, b0 + m): c for m, c in enumerate(self.diag) if c}

    def by_total_degree(self) -> dict[int, int]:
        base = sum(self.shift)
        return {base + 2 * m: c for m, c in enumerate(self.diag) if c}

    def top_degree(self) -> int:
        return max(self.by_total_degree())

    def __str__(self):
        terms = [f"{c}*h^({a},{b})" for (a, b), c in self.bidegrees().items()]
        return " + ".join(terms)


def hodge_polynomial(pat: LevelPattern) -> PoincarePolynomial:
    inv = invariants(pat)
    diag: tuple[int, ...] = (1,)
    for x, y in pat.levels:
        diag = convolve(diag, gaussian_binomial(x + y, x))
    return PoincarePolynomial((inv.r_plus, inv.r_minus), diag)


def hodge_type_admissible(pat: LevelPattern, t: int) -> bool:
    """Whether the class can contribute in bidegree (d,d) with d <= t."""
    inv = invariants(pat)
    return inv.r_plus == inv.r_minus <= t
