"""theta-stable parabolic classes of su(p,q) as level patterns.

A dominant parameter ``lam`` only matters through the relative order of its
coordinates.  Group the coordinates by value, highest first, and record for
each value how many coordinates of each block take it: that sequence of
``(x, y)`` pairs is the level pattern, and it is the identity of the class.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .roots import Signature


class DominanceError(ValueError):
    """Raised when a parameter violates a_1 >= ... >= a_p or a_{p+1} >= ... >= a_{p+q}."""


@dataclass(frozen=True)
class Lambda:
    sig: Signature
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.sig.n:
            raise ValueError(f"{self.sig} needs {self.sig.n} coordinates, got {len(coords)}")
        if any(not isinstance(a, int) for a in coords):
            raise TypeError("coordinates must be integers")
        bad = first_dominance_violation(self.sig, coords)
        if bad is not None:
            i = bad
            raise DominanceError(
                f"dominance violated: a_{i} >= a_{i + 1} fails ({coords[i - 1]} < {coords[i]})"
            )

    def __getitem__(self, i: int) -> int:
        """1-based coordinate access, ``lam[1] == a_1``."""
        if not 1 <= i <= len(self.coords):
            raise IndexError(i)
        return self.coords[i - 1]


def first_dominance_violation(sig: Signature, coords: Sequence[int]) -> int | None:
    """Smallest ``i`` with ``a_i < a_{i+1}`` inside one block, else None."""
    for i in range(1, sig.n):
        if i == sig.p:
            continue
        if coords[i - 1] < coords[i]:
            return i
    return None


@dataclass(frozen=True, order=True)
class LevelPattern:
    levels: tuple[tuple[int, int], ...]

    def __post_init__(self):
        levels = tuple((int(x), int(y)) for x, y in self.levels)
        object.__setattr__(self, "levels", levels)
        if not levels:
            raise ValueError("a level pattern needs at least one level")
        for x, y in levels:
            if x < 0 or y < 0 or x + y < 1:
                raise ValueError(f"invalid level {x}|{y}")

    @property
    def p(self) -> int:
        return sum(x for x, _ in self.levels)

    @property
    def q(self) -> int:
        return sum(y for _, y in self.levels)

    @property
    def signature(self) -> Signature:
        return Signature(self.p, self.q)

    def __len__(self):
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)

    def __str__(self):
        return ">".join(f"{x}|{y}" for x, y in self.levels)

    @classmethod
    def parse(cls, text: str) -> "LevelPattern":
        """Inverse of ``str``; whitespace around tokens is ignored."""
        levels = []
        for chunk in text.split(">"):
            parts = chunk.split("|")
            if len(parts) != 2:
                raise ValueError(f"malformed level {chunk.strip()!r} in pattern {text!r}")
            try:
                levels.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ValueError(f"malformed level {chunk.strip()!r} in pattern {text!r}") from None
        return cls(tuple(levels))

    def representative(self) -> Lambda:
        """Integer parameter realizing the pattern; level ``k`` gets value ``r-1-k``."""
        r = len(self.levels)
        first = [r - 1 - k for k, (x, _) in enumerate(self.levels) for _ in range(x)]
        second = [r - 1 - k for k, (_, y) in enumerate(self.levels) for _ in range(y)]
        return Lambda(self.signature, tuple(first + second))

    def flat(self) -> tuple[int, ...]:
        return tuple(v for level in self.levels for v in level)


@dataclass(frozen=True)
class ParabolicInvariants:
    r_plus: int
    r_minus: int
    levi: LevelPattern

    @property
    def r_total(self) -> int:
        return self.r_plus + self.r_minus

    @property
    def holomorphic(self) -> bool:
        return self.r_minus == 0

    @property
    def antiholomorphic(self) -> bool:
        return self.r_plus == 0

    def levi_blocks(self) -> list[str]:
        return [f"u({x},{y})" for x, y in self.levi.levels]


def canonicalize(lam: Lambda) -> LevelPattern:
    p = lam.sig.p
    values = sorted(set(lam.coords), reverse=True)
    first, second = lam.coords[:p], lam.coords[p:]
    return LevelPattern(tuple((first.count(v), second.count(v)) for v in values))


def pattern_of(sig: Signature, coords: Iterable[int]) -> LevelPattern:
    return canonicalize(Lambda(sig, tuple(coords)))


def invariants(pat: LevelPattern) -> ParabolicInvariants:
    r_plus = r_minus = 0
    xs_above = ys_above = 0
    for x, y in pat.levels:
        r_plus += xs_above * y
        r_minus += ys_above * x
        xs_above += x
        ys_above += y
    return ParabolicInvariants(r_plus, r_minus, pat)


def aq_class(pat: LevelPattern) -> LevelPattern:
    """Coarsest pattern with the same u cap p as ``pat``.

    Adjacent levels lying entirely in one block are merged: the order among
    them is a compact-root condition and does not change which noncompact
    weights lie in u, hence does not change A_q.
    """
    merged: list[tuple[int, int]] = []
    for x, y in pat.levels:
        if merged:
            px, py = merged[-1]
            if (y == 0 and py == 0) or (x == 0 and px == 0):
                merged[-1] = (px + x, py + y)
                continue
        merged.append((x, y))
    return LevelPattern(tuple(merged))


def distinguished_class(sig: Signature, which: str) -> LevelPattern:
    """Class of eps_1 - eps_p (``row1``) or eps_{p+1} - eps_{p+q} (``row2``)."""
    p, q = sig.p, sig.q
    if which == "row1":
        if p < 2:
            raise ValueError(f"row1 class needs p >= 2, got {sig}")
        return LevelPattern(((1, 0), (p - 2, q), (1, 0)))
    if which == "row2":
        if q < 2:
            raise ValueError(f"row2 class needs q >= 2, got {sig}")
        return LevelPattern(((0, 1), (p, q - 2), (0, 1)))
    raise ValueError(f"unknown family {which!r}")
