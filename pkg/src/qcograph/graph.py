"""Dense simple undirected graphs and the union/join/complement algebra."""

from __future__ import annotations

import numpy as np

__all__ = [
    "Graph",
    "union",
    "join",
    "complement",
    "induced_subgraph",
    "components",
    "bipartition",
    "parse_edge_list",
    "format_edge_list",
]


class Graph:
    """Immutable simple graph on vertices 0..n-1 with a boolean adjacency matrix.

    The adjacency matrix is symmetric with a false diagonal; the edge count
    ``m`` is derived from it. ``n == 0`` is permitted as the empty graph used
    internally by decompositions.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, adj: np.ndarray):
        a = np.asarray(adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {a.shape}")
        if a.size and not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if a.size and a.diagonal().any():
            raise ValueError("self-loops are not allowed")
        a = a.copy()
        a.flags.writeable = False
        self.n = a.shape[0]
        self.adj = a
        self.m = int(np.count_nonzero(a)) // 2

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Edgeless graph on n vertices."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        return cls(np.zeros((n, n), dtype=bool))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        a = np.ones((n, n), dtype=bool)
        if n:
            np.fill_diagonal(a, False)
        return cls(a)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            a[u, v] = a[v, u] = True
        return cls(a)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v."""
        iu, iv = np.nonzero(np.triu(self.adj, 1))
        return list(zip(iu.tolist(), iv.tolist()))

    def degree(self, v: int) -> int:
        return int(np.count_nonzero(self.adj[v]))

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=0, dtype=np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def neighbors(self, v: int) -> list[int]:
        return np.nonzero(self.adj[v])[0].tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# list of blocks, each a sorted list of vertex indices
VertexPartition = list[list[int]]


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; g1's vertices keep their labels, g2's are shifted by g1.n."""
    n1, n2 = g1.n, g2.n
    a = np.zeros((n1 + n2, n1 + n2), dtype=bool)
    a[:n1, :n1] = g1.adj
    a[n1:, n1:] = g2.adj
    return Graph(a)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all n1*n2 cross edges."""
    n1, n2 = g1.n, g2.n
    a = np.zeros((n1 + n2, n1 + n2), dtype=bool)
    a[:n1, :n1] = g1.adj
    a[n1:, n1:] = g2.adj
    a[:n1, n1:] = True
    a[n1:, :n1] = True
    return Graph(a)


def complement(g: Graph) -> Graph:
    """Invert the edge set off the diagonal."""
    a = ~g.adj
    if g.n:
        a = a.copy()
        np.fill_diagonal(a, False)
    return Graph(a)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced by the given vertex indices, relabeled in the given order."""
    idx = list(vertices)
    for v in idx:
        if not (0 <= v < g.n):
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    if len(set(idx)) != len(idx):
        raise ValueError("duplicate vertices in selection")
    sel = np.asarray(idx, dtype=np.intp)
    return Graph(g.adj[np.ix_(sel, sel)])


def components(g: Graph) -> VertexPartition:
    """Connected components as blocks of sorted vertex indices, ordered by smallest member."""
    if g.n < 1:
        raise ValueError("components requires at least one vertex")
    seen = np.zeros(g.n, dtype=bool)
    blocks: VertexPartition = []
    for start in range(g.n):
        if seen[start]:
            continue
        queue = [start]
        seen[start] = True
        block = []
        while queue:
            v = queue.pop()
            block.append(v)
            for w in np.nonzero(g.adj[v] & ~seen)[0]:
                seen[w] = True
                queue.append(int(w))
        blocks.append(sorted(block))
    return blocks


def bipartition(g: Graph) -> VertexPartition | None:
    """Two color classes from a 2-coloring, or None if some component has an odd cycle.

    Colors are assigned per component, with each component's smallest vertex
    in class 0. Edgeless graphs are bipartite with an empty second class.
    """
    color = np.full(g.n, -1, dtype=np.int8)
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            cv = color[v]
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - cv
                    queue.append(w)
                elif color[w] == cv:
                    return None
    return [np.nonzero(color == 0)[0].tolist(), np.nonzero(color == 1)[0].tolist()]


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line "n m", then m lines "u v" with u < v.

    Rejects self-loops, duplicate edges, reversed or out-of-range endpoints.
    """
    lines = [ln for ln in text.splitlines()]
    stripped = [(i, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not stripped:
        raise ValueError("empty edge-list input")
    header = stripped[0][1].split()
    if len(header) != 2:
        raise ValueError(f"line {stripped[0][0] + 1}: header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"line {stripped[0][0] + 1}: header must be two integers") from None
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    body = stripped[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} edge lines, found {len(body)}")
    a = np.zeros((n, n), dtype=bool)
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno + 1}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno + 1}: endpoints must be integers") from None
        if u == v:
            raise ValueError(f"line {lineno + 1}: self-loop at {u}")
        if not (0 <= u < v < n):
            raise ValueError(f"line {lineno + 1}: edge ({u}, {v}) violates 0 <= u < v < n")
        if a[u, v]:
            raise ValueError(f"line {lineno + 1}: duplicate edge ({u}, {v})")
        a[u, v] = a[v, u] = True
    return Graph(a)


def format_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format with LF line endings."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"
