"""Simple undirected graphs and their standard matrices.

Vertices are the integers ``0..n-1``. Edges are stored as a sorted tuple of
``(u, v)`` pairs with ``u < v``; that order also fixes the columns of the
incidence matrix and the labels of the line graph.

All matrices are dense ``int64`` arrays so that identities such as
``M @ M.T == signless_laplacian(g)`` can be checked exactly.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from os import PathLike
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import numpy as np

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A finite simple graph in canonical form.

    Use :meth:`from_edges` to build one from an arbitrary edge iterable; the
    constructor itself only accepts already-canonical data and rejects
    anything else.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        prev: Optional[Edge] = None
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"invalid edge {e} for {self.vertex_count} vertices")
            if prev is not None and e <= prev:
                raise ValueError("edges must be sorted and free of duplicates")
            prev = e

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Canonicalize ``edges`` (orient, sort, dedupe) and build a graph.

        Self-loops are rejected; a repeated edge is a parallel edge and is
        rejected as well.
        """
        canon = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"parallel edge {a}")
        return cls(vertex_count, tuple(canon))

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.vertex_count, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``i`` renamed to ``perm[i]``."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise ValueError("perm must be a permutation of the vertices")
        return Graph.from_edges(self.vertex_count, ((perm[u], perm[v]) for u, v in self.edges))

    def shifted_edges(self, offset: int) -> list[Edge]:
        return [(u + offset, v + offset) for u, v in self.edges]

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(range(self.vertex_count))
        h.add_edges_from(self.edges)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.m})"


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[Edge] = []
    offset = 0
    for g in graphs:
        edges.extend(g.shifted_edges(offset))
        offset += g.n
    return Graph.from_edges(offset, edges)


# ---------------------------------------------------------------------------
# matrices


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(g.degrees())


def laplacian(g: Graph) -> np.ndarray:
    """``D(G) - A(G)``."""
    return degree_matrix(g) - adjacency_matrix(g)


def signless_laplacian(g: Graph) -> np.ndarray:
    """``D(G) + A(G)``."""
    return degree_matrix(g) + adjacency_matrix(g)


def incidence_matrix(g: Graph) -> np.ndarray:
    """Vertex-edge incidence matrix, ``n x m``, columns in canonical edge order."""
    mat = np.zeros((g.n, g.m), dtype=np.int64)
    for j, (u, v) in enumerate(g.edges):
        mat[u, j] = 1
        mat[v, j] = 1
    return mat


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``j`` is edge ``g.edges[j]``."""
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for j, (u, v) in enumerate(g.edges):
        incident[u].append(j)
        incident[v].append(j)
    # a simple graph has at most one shared endpoint per edge pair, so no duplicates
    pairs = [pair for edge_ids in incident for pair in combinations(edge_ids, 2)]
    return Graph.from_edges(g.m, pairs)


def regularity(g: Graph) -> Optional[int]:
    """Common degree ``k`` if ``g`` is regular, else ``None``.

    The graph on zero vertices has no degree and is reported as non-regular.
    """
    if g.n == 0:
        return None
    deg = g.degrees()
    return int(deg[0]) if np.all(deg == deg[0]) else None


def components(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has at most one component (the empty graph counts as connected)."""
    return len(components(g)) <= 1


# ---------------------------------------------------------------------------
# builtin families


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star ``K_{1,n-1}`` on ``n`` vertices with centre 0."""
    return Graph(n, tuple((0, i) for i in range(1, n)))


def null_graph(n: int) -> Graph:
    return Graph(n)


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


_FAMILY_MIN = {"k": 0, "p": 0, "c": 3, "star": 1, "null": 0}
_FAMILY_BUILD = {
    "k": complete_graph,
    "p": path_graph,
    "c": cycle_graph,
    "star": star_graph,
    "null": null_graph,
}
_FAMILY_RE = re.compile(r"^(k|p|c|star|null)(\d+)$")
_BIPARTITE_RE = re.compile(r"^k(\d+),(\d+)$")


def family(name: str) -> Graph:
    """Build a named graph: ``K<n>``, ``P<n>``, ``C<n>``, ``star<n>``,
    ``null<n>``, ``K<a>,<b>`` or ``petersen`` (case-insensitive).

    ``star<n>`` has ``n`` vertices in total.
    """
    key = name.strip().lower()
    if key == "petersen":
        return petersen_graph()
    match = _BIPARTITE_RE.match(key)
    if match:
        return complete_bipartite_graph(int(match.group(1)), int(match.group(2)))
    match = _FAMILY_RE.match(key)
    if not match:
        raise ValueError(f"unknown graph family {name!r}")
    kind, size = match.group(1), int(match.group(2))
    if size < _FAMILY_MIN[kind]:
        raise ValueError(f"{name!r}: size must be at least {_FAMILY_MIN[kind]}")
    return _FAMILY_BUILD[kind](size)


# ---------------------------------------------------------------------------
# edge-list format


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format.

    Blank lines and ``#`` comments are skipped. Edges may appear in any
    order; the result is canonical.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ValueError("missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise ValueError(f"header declares {m} edges, found {len(edges)}")
    for u, v in edges:
        if not (0 <= u < v < n):
            raise ValueError(f"edge ({u}, {v}) must satisfy 0 <= u < v < {n}")
    return Graph.from_edges(n, edges)


def read_edge_list(path: Union[str, PathLike]) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: Graph, path: Union[str, PathLike]) -> None:
    Path(path).write_text(format_edge_list(g), encoding="utf-8")
