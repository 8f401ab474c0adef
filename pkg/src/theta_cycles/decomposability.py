"""Discrete decomposability of A_q over the two su(p,q) symmetric pairs.

``row1`` is the pair (su(p,q), su(k)+su(p-k,q)+u(1)); ``row2`` is
(su(p,q), su(p,q-k)+su(k)+u(1)).  Both order conditions read only the
relative order of coordinates, so any integer representative of a level
pattern gives the same answer.  Holomorphic and anti-holomorphic classes
are decomposable for either pair.
"""
from __future__ import annotations

from dataclasses import dataclass

from .parabolic import LevelPattern, invariants
from .roots import Signature

FAMILIES = ("row1", "row2")


@dataclass(frozen=True)
class SymmetricPair:
    family: str
    k: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")

    def check(self, sig: Signature):
        bound = sig.p if self.family == "row1" else sig.q
        name = "p" if self.family == "row1" else "q"
        if self.k >= bound:
            raise ValueError(f"{self.family} with k={self.k} needs k < {name} for {sig}")

    def subalgebra(self, sig: Signature) -> str:
        p, q, k = sig.p, sig.q, self.k
        if self.family == "row1":
            return f"su({k})+su({p - k},{q})+u(1)"
        return f"su({p},{q - k})+su({k})+u(1)"

    def __str__(self):
        return f"{self.family}-k{self.k}"


def _row1_condition(a: tuple[int, ...], p: int, q: int) -> bool:
    # a is 0-based here: a[0] = a_1
    if a[p - 1] >= a[p]:
        return True
    for l in range(p + 1, p + q):
        if a[l - 1] >= a[0] and a[p - 1] >= a[l]:
            return True
    return a[p + q - 1] >= a[0]


def _row2_condition(a: tuple[int, ...], p: int, q: int) -> bool:
    if a[p + q - 1] >= a[0]:
        return True
    for l in range(1, p):
        if a[l - 1] >= a[p] and a[p + q - 1] >= a[l]:
            return True
    return a[p - 1] >= a[p]


def table_condition(pat: LevelPattern, family: str) -> bool:
    """The bare order condition for ``family``, without the holomorphy rule."""
    a = pat.representative().coords
    if family == "row1":
        return _row1_condition(a, pat.p, pat.q)
    if family == "row2":
        return _row2_condition(a, pat.p, pat.q)
    raise ValueError(f"unknown family {family!r}")


def _validate(pat: LevelPattern, pair: SymmetricPair, sig: Signature):
    if (pat.p, pat.q) != (sig.p, sig.q):
        raise ValueError(f"pattern {pat} does not belong to {sig}")
    pair.check(sig)


def is_discretely_decomposable(pat: LevelPattern, pair: SymmetricPair, sig: Signature) -> bool:
    _validate(pat, pair, sig)
    inv = invariants(pat)
    if inv.holomorphic or inv.antiholomorphic:
        return True
    return table_condition(pat, pair.family)


def non_decomposability_witness(pat: LevelPattern, pair: SymmetricPair, sig: Signature) -> int | None:
    """Smallest 1-based index ``s`` certifying that the condition fails.

    row1: ``p+1 <= s <= p+q`` with ``a_1 > a_s > a_p``.
    row2: ``1 <= s <= p`` with ``a_{p+1} > a_s > a_{p+q}``.
    """
    _validate(pat, pair, sig)
    a = pat.representative().coords
    p, q = sig.p, sig.q
    if pair.family == "row1":
        top, bottom, candidates = a[0], a[p - 1], range(p + 1, p + q + 1)
    else:
        top, bottom, candidates = a[p], a[p + q - 1], range(1, p + 1)
    for s in candidates:
        if top > a[s - 1] > bottom:
            return s
    return None
