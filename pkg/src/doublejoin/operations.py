"""Subdivision, Q-, R- and total graphs and the four double joins built on them.

Every construction keeps the original vertices at ``0..n-1`` and puts the
vertex inserted on edge ``j`` at ``n + j``. A double join appends ``G1``
and then ``G2``, so its Laplacian splits into the blocks
``[V(G) | I(G) | V(G1) | V(G2)]``.
"""

from __future__ import annotations

import enum

from .errors import PreconditionError
from .graph import Edge, Graph, is_connected, line_graph


class Variant(str, enum.Enum):
    """Which graph the double join is built on."""

    S = "S"
    Q = "Q"
    R = "R"
    T = "T"

    @classmethod
    def parse(cls, tag: "str | Variant") -> "Variant":
        try:
            return cls(str(tag.value if isinstance(tag, Variant) else tag).upper())
        except ValueError:
            raise ValueError(f"unknown variant {tag!r}; expected one of S, Q, R, T") from None

    @property
    def has_graph_edges(self) -> bool:
        """Whether the edges of ``G`` itself survive (R and T)."""
        return self in (Variant.R, Variant.T)

    @property
    def has_line_edges(self) -> bool:
        """Whether the inserted vertices follow the line graph (Q and T)."""
        return self in (Variant.Q, Variant.T)


def _incidence_edges(g: Graph) -> list[Edge]:
    n = g.n
    out = []
    for j, (u, v) in enumerate(g.edges):
        out.append((u, n + j))
        out.append((v, n + j))
    return out


def _variant_edges(variant: Variant, g: Graph) -> list[Edge]:
    edges = _incidence_edges(g)
    if variant.has_graph_edges:
        edges.extend(g.edges)
    if variant.has_line_edges:
        edges.extend(line_graph(g).shifted_edges(g.n))
    return edges


def variant_graph(variant: "Variant | str", g: Graph) -> Graph:
    variant = Variant.parse(variant)
    return Graph.from_edges(g.n + g.m, _variant_edges(variant, g))


def subdivision(g: Graph) -> Graph:
    return variant_graph(Variant.S, g)


def q_graph(g: Graph) -> Graph:
    return variant_graph(Variant.Q, g)


def r_graph(g: Graph) -> Graph:
    return variant_graph(Variant.R, g)


def total_graph(g: Graph) -> Graph:
    return variant_graph(Variant.T, g)


def double_join(variant: "Variant | str", g: Graph, g1: Graph, g2: Graph) -> Graph:
    """Join ``V(G)`` completely to ``G1`` and the inserted vertices ``I(G)``
    completely to ``G2``, on top of the chosen variant graph of ``g``.

    ``g`` must be connected; ``g1`` and ``g2`` may be anything, including
    graphs with no vertices (which drops the corresponding join).
    """
    variant = Variant.parse(variant)
    if not is_connected(g):
        raise PreconditionError("G must be connected")
    n, m = g.n, g.m
    off1 = n + m
    off2 = off1 + g1.n
    edges = _variant_edges(variant, g)
    edges.extend(g1.shifted_edges(off1))
    edges.extend(g2.shifted_edges(off2))
    edges.extend((u, off1 + w) for u in range(n) for w in range(g1.n))
    edges.extend((n + j, off2 + w) for j in range(m) for w in range(g2.n))
    return Graph.from_edges(off2 + g2.n, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """Classical join: disjoint union plus every edge between ``g1`` and ``g2``."""
    off = g1.n
    edges = list(g1.edges) + g2.shifted_edges(off)
    edges.extend((u, off + w) for u in range(g1.n) for w in range(g2.n))
    return Graph.from_edges(g1.n + g2.n, edges)


def block_sizes(g: Graph, g1: Graph, g2: Graph) -> tuple[int, int, int, int]:
    """Sizes of the four vertex blocks of ``double_join(., g, g1, g2)``."""
    return g.n, g.m, g1.n, g2.n
