"""Independent census of unlabeled P4-free graphs, used as the enumeration oracle.

Self-contained on purpose: nothing here touches the package under test. The
count of isomorphism classes comes from Burnside's lemma over S_n acting on
labeled graphs: average, over permutation cycle types, the number of P4-free
graphs fixed by a permutation of that type. Fixed graphs of a permutation are
exactly the unions of its edge orbits.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np


def _partitions(n: int, max_part: int | None = None):
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for part in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def _perm_count(n: int, cycle_type: tuple[int, ...]) -> int:
    """Number of permutations in S_n with the given cycle type."""
    count = math.factorial(n)
    mult: dict[int, int] = {}
    for length in cycle_type:
        count //= length
        mult[length] = mult.get(length, 0) + 1
    for m in mult.values():
        count //= math.factorial(m)
    return count


def _representative(cycle_type: tuple[int, ...]) -> list[int]:
    perm = []
    start = 0
    for length in cycle_type:
        perm.extend([start + (i + 1) % length for i in range(length)])
        start += length
    return perm


def _edge_orbits(n: int, perm: list[int]) -> list[list[tuple[int, int]]]:
    pairs = list(combinations(range(n), 2))
    index = {pair: i for i, pair in enumerate(pairs)}
    seen = [False] * len(pairs)
    orbits = []
    for start_pair in pairs:
        if seen[index[start_pair]]:
            continue
        orbit = []
        pair = start_pair
        while not seen[index[pair]]:
            seen[index[pair]] = True
            orbit.append(pair)
            u, v = perm[pair[0]], perm[pair[1]]
            pair = (u, v) if u < v else (v, u)
        orbits.append(orbit)
    return orbits


def _has_induced_p4(n: int, adj: list[list[bool]]) -> bool:
    for quad in combinations(range(n), 4):
        degs = [sum(adj[u][v] for v in quad if v != u) for u in quad]
        if sorted(degs) == [1, 1, 2, 2]:
            return True
    return False


def _count_fixed_p4_free(n: int, orbits: list[list[tuple[int, int]]]) -> int:
    k = len(orbits)
    count = 0
    for mask in range(1 << k):
        adj = [[False] * n for _ in range(n)]
        for i in range(k):
            if mask >> i & 1:
                for u, v in orbits[i]:
                    adj[u][v] = adj[v][u] = True
        if not _has_induced_p4(n, adj):
            count += 1
    return count


def count_labeled_p4_free(n: int) -> int:
    """Labeled P4-free graphs on n vertices, vectorized over all edge masks."""
    if n < 4:
        return 2 ** (n * (n - 1) // 2)
    pairs = list(combinations(range(n), 2))
    index = {pair: i for i, pair in enumerate(pairs)}
    total = 1 << len(pairs)
    bad = np.zeros(total, dtype=bool)
    masks = np.arange(total, dtype=np.uint32)
    # 6-bit patterns on 4 labeled vertices that are exactly a path
    p4_patterns = set()
    quad_pairs = list(combinations(range(4), 2))
    import itertools

    for order in itertools.permutations(range(4)):
        edges = {tuple(sorted((order[i], order[i + 1]))) for i in range(3)}
        p4_patterns.add(sum(1 << i for i, pr in enumerate(quad_pairs) if pr in edges))
    lut = np.zeros(64, dtype=bool)
    for pat in p4_patterns:
        lut[pat] = True
    for quad in combinations(range(n), 4):
        local = np.zeros(total, dtype=np.uint8)
        for bit, (i, j) in enumerate(quad_pairs):
            pos = index[(quad[i], quad[j])]
            local |= ((masks >> pos) & 1).astype(np.uint8) << bit
        bad |= lut[local]
    return int(np.count_nonzero(~bad))


def count_unlabeled_p4_free(n: int) -> int:
    """Isomorphism classes of P4-free graphs on n vertices (Burnside)."""
    if n == 0:
        return 1
    total = 0
    for cycle_type in _partitions(n):
        perms = _perm_count(n, cycle_type)
        if all(length == 1 for length in cycle_type):
            fixed = count_labeled_p4_free(n)
        else:
            rep = _representative(cycle_type)
            fixed = _count_fixed_p4_free(n, _edge_orbits(n, rep))
        total += perms * fixed
    assert total % math.factorial(n) == 0
    return total // math.factorial(n)
