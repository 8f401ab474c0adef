"""Enumeration of level patterns, exhaustive and pruned to the set Q.

Patterns come out in lexicographic order of their flattened level sequence.
Depth-first extension with level choices taken in increasing ``(x, y)``
order produces exactly that order, because a completed pattern is never a
proper prefix of another completed pattern with the same totals.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Callable, Iterator

from .parabolic import LevelPattern, ParabolicInvariants, invariants
from .roots import Signature

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "THETA_CYCLE_BUDGET"


class BudgetExceeded(RuntimeError):
    def __init__(self, visited: int, budget: int):
        super().__init__(f"search budget of {budget} nodes exceeded after visiting {visited}")
        self.visited = visited
        self.budget = budget


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


def _level_choices(p_left: int, q_left: int) -> Iterator[tuple[int, int]]:
    for x in range(p_left + 1):
        for y in range(q_left + 1):
            if x or y:
                yield x, y


def enumerate_all(sig: Signature) -> Iterator[LevelPattern]:
    """Every level pattern of ``sig``, lazily, in lexicographic order."""
    prefix: list[tuple[int, int]] = []

    def extend(p_left: int, q_left: int) -> Iterator[LevelPattern]:
        if not p_left and not q_left:
            yield LevelPattern(tuple(prefix))
            return
        for x, y in _level_choices(p_left, q_left):
            prefix.append((x, y))
            yield from extend(p_left - x, q_left - y)
            prefix.pop()

    yield from extend(sig.p, sig.q)


@lru_cache(maxsize=None)
def _count(p: int, q: int) -> int:
    if p == 0 and q == 0:
        return 1
    return sum(_count(p - x, q - y) for x, y in _level_choices(p, q))


def count_patterns(sig: Signature | tuple[int, int], limit: int | None = None) -> int:
    """Number of level patterns of ``sig``; ``(0, 0)`` counts the empty pattern.

    Python integers do not wrap, so overflow only means exceeding ``limit``
    (for consumers with fixed-width integers); that raises OverflowError.
    """
    p, q = (sig.p, sig.q) if isinstance(sig, Signature) else sig
    if p < 0 or q < 0:
        raise ValueError(f"counts need p, q >= 0, got ({p},{q})")
    value = _count(p, q)
    if limit is not None and value > limit:
        raise OverflowError(f"pattern count for ({p},{q}) exceeds {limit}")
    return value


class _PrunedSearch:
    """Branch and bound over level prefixes for r_plus == r_minus <= t.

    With ``X``/``Y`` coordinates of each block already placed and ``P``/``Q``
    still to place, every later block-2 coordinate sits below all placed
    block-1 coordinates, so the final r_plus is at least
    ``r_plus_so_far + X*Q``; symmetrically for r_minus.  Pairs among the
    unplaced coordinates add at most ``P*Q`` to either count.
    """

    def __init__(self, p: int, q: int, t: int, budget: int,
                 progress: Callable[[int], None] | None = None, progress_every: int = 1 << 16):
        self.p, self.q, self.t = p, q, t
        self.budget = budget
        self.progress = progress
        self.progress_every = progress_every
        self.visited = 0
        self.found: list[tuple[int, ...]] = []
        self._prefix: list[tuple[int, int]] = []

    def _viable(self, rp: int, rm: int, X: int, Y: int) -> bool:
        P, Q = self.p - X, self.q - Y
        lo_plus = rp + X * Q
        lo_minus = rm + Y * P
        if lo_plus > self.t or lo_minus > self.t:
            return False
        slack = P * Q
        return lo_plus <= lo_minus + slack and lo_minus <= lo_plus + slack

    def run(self, first: tuple[int, int] | None = None) -> list[tuple[tuple[int, int], ...]]:
        if first is None:
            self._extend(0, 0, 0, 0)
        else:
            x, y = first
            self._visit()
            if self._viable(0, 0, x, y):
                self._prefix.append(first)
                self._extend(0, 0, x, y)
                self._prefix.pop()
        return self.found

    def _visit(self):
        self.visited += 1
        if self.visited > self.budget:
            raise BudgetExceeded(self.visited, self.budget)
        if self.progress is not None and self.visited % self.progress_every == 0:
            self.progress(self.visited)

    def _extend(self, rp: int, rm: int, X: int, Y: int):
        P, Q = self.p - X, self.q - Y
        if not P and not Q:
            if rp == rm:
                self.found.append(tuple(self._prefix))
            return
        for x, y in _level_choices(P, Q):
            self._visit()
            nrp = rp + X * y
            nrm = rm + Y * x
            if not self._viable(nrp, nrm, X + x, Y + y):
                continue
            self._prefix.append((x, y))
            self._extend(nrp, nrm, X + x, Y + y)
            self._prefix.pop()


def _run_shard(args):
    p, q, t, budget, first = args
    search = _PrunedSearch(p, q, t, budget)
    levels = search.run(first)
    return levels, search.visited


def enumerate_Q(sig: Signature, t: int, *, budget: int | None = None, workers: int = 1,
                progress: Callable[[int], None] | None = None,
                stats: dict | None = None) -> list[tuple[LevelPattern, ParabolicInvariants]]:
    """Classes with r_plus == r_minus <= t, in lexicographic order.

    The tree is sharded by the first level; with ``workers > 1`` shards run
    in separate processes and are merged back in first-level order.  The
    node budget applies to the whole search.  ``stats`` (if given) receives
    the visited node count.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    budget = default_budget() if budget is None else budget
    if workers <= 1:
        search = _PrunedSearch(sig.p, sig.q, t, budget, progress)
        raw = search.run()
        visited = search.visited
    else:
        shards = [(sig.p, sig.q, t, budget, first) for first in _level_choices(sig.p, sig.q)]
        raw, visited = [], 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for levels, count in pool.map(_run_shard, shards):
                visited += count
                if visited > budget:
                    raise BudgetExceeded(visited, budget)
                raw.extend(levels)
    log.debug("enumerate_Q %s t=%d: %d nodes, %d classes", sig, t, visited, len(raw))
    if stats is not None:
        stats["visited"] = visited
    out = []
    for levels in raw:
        pat = LevelPattern(levels)
        out.append((pat, invariants(pat)))
    return out


def filter_Q(sig: Signature, t: int) -> list[tuple[LevelPattern, ParabolicInvariants]]:
    """Unpruned reference for ``enumerate_Q``: filter the full enumeration."""
    out = []
    for pat in enumerate_all(sig):
        inv = invariants(pat)
        if inv.r_plus == inv.r_minus <= t:
            out.append((pat, inv))
    return out
