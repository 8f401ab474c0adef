"""Root data of su(p,q) in the coordinates eps_1, ..., eps_{p+q}.

Compact roots join two indices of the same block, noncompact weights join
index ``i <= p`` with index ``j > p``.  Indices are 1-based throughout to
match the usual eps_i notation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("signature entries must be integers")
        if self.p < 1 or self.q < 1:
            raise ValueError(f"signature needs p >= 1 and q >= 1, got ({self.p},{self.q})")

    @property
    def n(self) -> int:
        return self.p + self.q

    def in_first_block(self, i: int) -> bool:
        return 1 <= i <= self.p

    def __str__(self):
        return f"su({self.p},{self.q})"


@dataclass(frozen=True)
class Root:
    """``sign * (eps_i - eps_j)`` with ``i < j``."""

    i: int
    j: int
    sign: int = 1

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"root indices must satisfy 1 <= i < j, got ({self.i},{self.j})")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def __neg__(self) -> "Root":
        return Root(self.i, self.j, -self.sign)

    def is_compact(self, sig: Signature) -> bool:
        return sig.in_first_block(self.i) == sig.in_first_block(self.j)

    def __str__(self):
        body = f"e{self.i}-e{self.j}"
        return body if self.sign > 0 else f"-({body})"


def compact_positive_roots(sig: Signature) -> list[Root]:
    blocks = (range(1, sig.p + 1), range(sig.p + 1, sig.n + 1))
    return [Root(i, j) for block in blocks for i in block for j in block if i < j]


def noncompact_weights(sig: Signature, half: str = "plus") -> list[Root]:
    """Weights of p+ (``half="plus"``) or p- (``half="minus"``)."""
    if half not in ("plus", "minus"):
        raise ValueError(f"half must be 'plus' or 'minus', got {half!r}")
    sign = 1 if half == "plus" else -1
    return [Root(i, j, sign) for i in range(1, sig.p + 1) for j in range(sig.p + 1, sig.n + 1)]


def complex_dimension(sig: Signature) -> int:
    """Complex dimension of the Hermitian symmetric space of ``sig``."""
    return len(noncompact_weights(sig, "plus"))


def pairing(lam, alpha: Root) -> int:
    """<lam, alpha> for a parameter given as a ``Lambda`` or a plain integer sequence."""
    coords: Sequence[int] = getattr(lam, "coords", lam)
    if alpha.j > len(coords):
        raise IndexError(f"root {alpha} out of range for {len(coords)} coordinates")
    return alpha.sign * (coords[alpha.i - 1] - coords[alpha.j - 1])
