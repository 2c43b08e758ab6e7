"""Exhaustive generation of unlabeled cographs as canonical cotrees."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cotree import Cotree, Internal, JOIN, Leaf, UNION, canonical_string

__all__ = ["ENUMERATION_CAP", "EnumerationIndex", "enumerate_cographs", "enumerate_cotrees"]

ENUMERATION_CAP = 11


@dataclass(frozen=True)
class EnumerationIndex:
    n: int
    strings: tuple[str, ...]  # canonical cotree strings, sorted, deduplicated

    @property
    def count(self) -> int:
        return len(self.strings)


@lru_cache(maxsize=None)
def _subtrees(n: int, parent_kind: str) -> tuple[Cotree, ...]:
    """All canonical cotrees on n leaves whose root may sit under parent_kind
    ('' for no constraint): a leaf, or an internal node of the other kind."""
    if n == 1:
        return (Leaf(),)
    out: list[Cotree] = []
    for kind in (JOIN, UNION):
        if kind != parent_kind:
            out.extend(_nodes(n, kind))
    return tuple(out)


@lru_cache(maxsize=None)
def _nodes(n: int, kind: str) -> tuple[Internal, ...]:
    """All canonical internal nodes of the given kind with n leaves below.

    Children form a multiset: enumerated with nondecreasing (leaf count,
    pool index) so each multiset appears once.
    """
    out: list[Internal] = []

    def rec(remaining: int, min_m: int, min_idx: int, chosen: list[Cotree]) -> None:
        if remaining == 0:
            if len(chosen) >= 2:
                out.append(Internal(kind, tuple(chosen)))
            return
        for m in range(min_m, remaining + 1):
            if m == remaining and not chosen:
                continue  # a single child covering everything is not a valid node
            pool = _subtrees(m, kind)
            start = min_idx if m == min_m else 0
            for i in range(start, len(pool)):
                chosen.append(pool[i])
                rec(remaining - m, m, i, chosen)
                chosen.pop()

    rec(n, 1, 0, [])
    return tuple(out)


def enumerate_cotrees(n: int) -> tuple[Cotree, ...]:
    """All unlabeled cographs on n vertices as canonical cotrees."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"n must be in 1..{ENUMERATION_CAP}, got {n}")
    return _subtrees(n, "")


def enumerate_cographs(n: int) -> EnumerationIndex:
    """Canonical-string index of all unlabeled cographs on n vertices.

    Generation already yields one tree per isomorphism class; deduplication by
    canonical string is kept as a safety net.
    """
    strings = sorted({canonical_string(t) for t in enumerate_cotrees(n)})
    return EnumerationIndex(n=n, strings=tuple(strings))
