"""Assemble Q, D cap Q and Q minus D for one signature and symmetric pair.

Also carries the counting lemmas the non-vanishing argument rests on:
block profiles around a witness level and the three lower bounds on
R+, R- and R that they imply.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

from .decomposability import SymmetricPair, is_discretely_decomposable, non_decomposability_witness
from .enumeration import enumerate_Q
from .parabolic import LevelPattern, ParabolicInvariants, aq_class, distinguished_class, invariants
from .roots import Signature, complex_dimension

log = logging.getLogger(__name__)


def cycle_dimensions(sig: Signature, pair: SymmetricPair) -> tuple[int, int]:
    """Complex dimensions of the fixed cycle and of its complementary cycle."""
    pair.check(sig)
    if pair.family == "row1":
        sub = Signature(sig.p - pair.k, sig.q)
    else:
        sub = Signature(sig.p, sig.q - pair.k)
    d = complex_dimension(sub)
    return d, complex_dimension(sig) - d


def compute_t(sig: Signature, pair: SymmetricPair) -> int:
    return min(cycle_dimensions(sig, pair))


def in_hypothesis(sig: Signature, pair: SymmetricPair) -> bool:
    """Whether the singleton claim is asserted for this configuration."""
    p, q = sig.p, sig.q
    if pair.k != 1:
        return False
    if (p, q) == (2, 2):
        return True
    if pair.family == "row1":
        return 5 <= p <= q <= 2 * p - 2
    return 5 <= p <= q and q != p + 1


@dataclass(frozen=True)
class QEntry:
    pattern: LevelPattern
    invariants: ParabolicInvariants
    decomposable: bool
    witness_s: int | None

    @property
    def aq_class(self) -> LevelPattern:
        return aq_class(self.pattern)

    def to_dict(self) -> dict:
        return {
            "pattern": str(self.pattern),
            "aq_class": str(self.aq_class),
            "r_plus": self.invariants.r_plus,
            "r_minus": self.invariants.r_minus,
            "decomposable": self.decomposable,
            "witness_s": self.witness_s,
        }


@dataclass
class VerificationReport:
    """Q, D cap Q and Q minus D for one configuration.

    ``d_cap_q`` and ``q_minus_d_entries`` are at level-pattern granularity.
    ``q_minus_d`` groups the surviving patterns by A_q class (equal u cap p),
    which is the granularity of the singleton question.
    """

    signature: Signature
    pair: SymmetricPair
    t: int
    q_set: list[QEntry]
    expected: LevelPattern | None
    in_hypothesis: bool
    visited: int = 0
    d_cap_q: list[QEntry] = field(init=False)
    q_minus_d_entries: list[QEntry] = field(init=False)
    q_minus_d: list[LevelPattern] = field(init=False)

    def __post_init__(self):
        self.d_cap_q = [e for e in self.q_set if e.decomposable]
        self.q_minus_d_entries = [e for e in self.q_set if not e.decomposable]
        self.q_minus_d = list(dict.fromkeys(e.aq_class for e in self.q_minus_d_entries))

    @property
    def singleton(self) -> bool:
        return len(self.q_minus_d) == 1

    @property
    def matches_expected(self) -> bool:
        return self.expected is not None and self.q_minus_d == [self.expected]

    def class_counts(self) -> dict[str, int]:
        """Sizes of Q, D cap Q and Q minus D counted in A_q classes."""
        return {
            "Q": len({e.aq_class for e in self.q_set}),
            "D_cap_Q": len({e.aq_class for e in self.d_cap_q}),
            "Q_minus_D": len(self.q_minus_d),
        }

    def to_dict(self) -> dict:
        return {
            "signature": {"p": self.signature.p, "q": self.signature.q},
            "pair": {"family": self.pair.family, "k": self.pair.k},
            "t": self.t,
            "Q": [e.to_dict() for e in self.q_set],
            "q_minus_d": [str(c) for c in self.q_minus_d],
            "singleton": self.singleton,
            "matches_expected": self.matches_expected,
            "expected": None if self.expected is None else str(self.expected),
            "in_hypothesis": self.in_hypothesis,
        }


def verify_theorem(sig: Signature, pair: SymmetricPair, *, budget: int | None = None,
                   workers: int = 1, progress: Callable[[int], None] | None = None) -> VerificationReport:
    pair.check(sig)
    t = compute_t(sig, pair)
    stats: dict = {}
    q_set = []
    for pat, inv in enumerate_Q(sig, t, budget=budget, workers=workers, progress=progress, stats=stats):
        witness = non_decomposability_witness(pat, pair, sig)
        decomposable = is_discretely_decomposable(pat, pair, sig)
        if decomposable == (witness is not None):
            raise AssertionError(f"witness and predicate disagree on {pat} for {pair}")
        q_set.append(QEntry(pat, inv, decomposable, witness))
    try:
        expected = distinguished_class(sig, pair.family)
    except ValueError:
        expected = None
    report = VerificationReport(sig, pair, t, q_set, expected, in_hypothesis(sig, pair),
                                visited=stats.get("visited", 0))
    if not report.in_hypothesis:
        log.info("%s %s lies outside the theorem's hypothesis", sig, pair)
    return report


@dataclass(frozen=True)
class BlockProfile:
    """Coordinates above / equal to / below a witness level, per block."""

    x: int
    y: int
    z: int
    l: int
    m: int
    n: int
    witness_s: int

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.x, self.y, self.z, self.l, self.m, self.n)


def block_profile(pat: LevelPattern, s_level: int, block: str = "second") -> BlockProfile:
    """Profile around level ``s_level`` (0-based); ``block`` holds the witness coordinate."""
    if not 0 <= s_level < len(pat.levels):
        raise IndexError(f"level {s_level} out of range for {pat}")
    if block not in ("first", "second"):
        raise ValueError(f"block must be 'first' or 'second', got {block!r}")
    above, at, below = pat.levels[:s_level], pat.levels[s_level], pat.levels[s_level + 1:]
    x, y, z = sum(a for a, _ in above), at[0], sum(a for a, _ in below)
    l, m, n = sum(b for _, b in above), at[1], sum(b for _, b in below)
    if block == "second":
        if m == 0:
            raise ValueError(f"level {s_level} of {pat} has no second-block coordinate")
        s = x + y + z + l + 1
    else:
        if y == 0:
            raise ValueError(f"level {s_level} of {pat} has no first-block coordinate")
        s = x + 1
    return BlockProfile(x, y, z, l, m, n, s)


def proof_bounds(profile: BlockProfile) -> tuple[int, int, int]:
    """Lower bounds on (R+, R-, R) implied by the profile."""
    x, y, z, l, m, n = profile.as_tuple()
    return (x * (m + n) + y * n,
            z * (l + m) + y * l,
            x * (m + n) + y * (n + l) + z * (l + m))


def check_proof_inequalities(pat: LevelPattern, profile: BlockProfile) -> bool:
    inv = invariants(pat)
    lo_plus, lo_minus, lo_total = proof_bounds(profile)
    return inv.r_plus >= lo_plus and inv.r_minus >= lo_minus and inv.r_total >= lo_total
