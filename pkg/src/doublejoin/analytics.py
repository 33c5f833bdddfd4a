"""Spanning-tree counts, Kirchhoff index and Laplacian-cospectral double joins."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Optional

import mpmath
import networkx as nx
import numpy as np
import sympy

from .errors import ConsistencyError, PreconditionError
from .graph import Graph, is_connected, laplacian, regularity
from .oracle import SPECTRUM_TOL, SpectralMultiset, SpectrumLike, laplacian_spectrum, spectra_equal
from .operations import Variant, double_join

MAX_SEARCH_VERTICES = 7
FLOAT_REL_TOL = 1e-6
# digits for the high-precision spectral product; products reach ~1e30 at 31 vertices
_MP_DIGITS = 60


@dataclass(frozen=True)
class TreeCount:
    """Spanning-tree count from both computation paths."""

    value: int
    determinant: int
    spectral_rounded: int
    spectral_float: float

    @property
    def agree(self) -> bool:
        return self.determinant == self.spectral_rounded


def reduced_laplacian_determinant(g: Graph) -> int:
    """Exact integer determinant of ``L(g)`` with row and column 0 removed."""
    if g.n <= 1:
        return 1
    reduced = laplacian(g)[1:, 1:]
    return int(sympy.Matrix(reduced.tolist()).det(method="bareiss"))


def _nonzero_product(values: list, count: int):
    """Product of the ``count`` largest-magnitude values, dropping the near-zero ones."""
    ordered = sorted(values, key=abs)
    prod = 1
    for v in ordered[len(ordered) - count :]:
        prod *= v
    return prod


def spectral_tree_count(spectrum: SpectrumLike, vertex_count: int) -> float:
    """``(1/N) * prod(nonzero eigenvalues)`` in floating point, for a connected graph."""
    values = [float(v) for v in spectrum]
    if len(values) != vertex_count:
        raise ValueError("spectrum length must equal the vertex count")
    if vertex_count <= 1:
        return 1.0
    # log-sum avoids overflow for large spectra
    ordered = sorted(values, key=abs)[1:]
    return math.exp(sum(math.log(v) for v in ordered) - math.log(vertex_count))


def _high_precision_tree_count(g: Graph) -> int:
    with mpmath.workdps(_MP_DIGITS):
        mat = mpmath.matrix(laplacian(g).tolist())
        ev = mpmath.mp.eigsy(mat, eigvals_only=True)
        prod = _nonzero_product([ev[i] for i in range(g.n)], g.n - 1)
        return int(mpmath.nint(prod / g.n))


def spanning_tree_count(g: Graph) -> TreeCount:
    """Spanning trees by the reduced-Laplacian determinant and by the spectrum.

    The determinant is exact. The spectral path uses eigenvalues computed
    to 60 digits so the rounded product can be compared exactly; the plain
    double-precision product is also reported and must agree to relative
    1e-6. Any disagreement raises :class:`ConsistencyError`.
    """
    if g.n == 0:
        raise PreconditionError("spanning trees of the empty graph are undefined")
    if not is_connected(g):
        return TreeCount(0, 0, 0, 0.0)
    det = reduced_laplacian_determinant(g)
    rounded = _high_precision_tree_count(g) if g.n > 1 else 1
    approx = spectral_tree_count(laplacian_spectrum(g), g.n)
    if det != rounded:
        raise ConsistencyError(f"determinant {det} != rounded spectral product {rounded}")
    if abs(approx - det) > FLOAT_REL_TOL * det:
        raise ConsistencyError(f"float spectral product {approx} too far from {det}")
    return TreeCount(det, det, rounded, approx)


def spanning_trees(g: Graph) -> int:
    return spanning_tree_count(g).value


def kirchhoff_from_spectrum(spectrum: SpectrumLike, tol: float = SPECTRUM_TOL) -> float:
    """``N * sum(1/lambda)`` over the nonzero eigenvalues of a connected graph."""
    values = np.sort(np.asarray(list(spectrum), dtype=float))
    if len(values) < 2:
        raise PreconditionError("Kirchhoff index needs at least 2 vertices")
    if abs(values[0]) > tol or values[1] <= tol:
        raise PreconditionError("Kirchhoff index needs a connected graph (exactly one zero eigenvalue)")
    return float(len(values) * np.sum(1.0 / values[1:]))


def kirchhoff_index(g: Graph) -> float:
    if g.n < 2:
        raise PreconditionError("Kirchhoff index needs at least 2 vertices")
    if not is_connected(g):
        raise PreconditionError("Kirchhoff index is undefined for a disconnected graph")
    return kirchhoff_from_spectrum(laplacian_spectrum(g))


# ---------------------------------------------------------------------------
# cospectral graphs


def from_networkx(h) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in h.edges()))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def cospectral_mate_search(
    max_vertices: int, tol: float = SPECTRUM_TOL, budget_seconds: Optional[float] = 60.0
) -> list[tuple[Graph, Graph]]:
    """All non-isomorphic Laplacian-cospectral pairs on at most ``max_vertices`` vertices.

    Candidates are the isomorphism classes of the networkx graph atlas (every
    graph on up to 7 vertices, one per class). Pairs are reported ordered by
    vertex count, edge count, then atlas order; each pair is re-checked for
    non-isomorphism.
    """
    if max_vertices > MAX_SEARCH_VERTICES:
        raise PreconditionError(f"exhaustive search is limited to {MAX_SEARCH_VERTICES} vertices")
    start = time.monotonic()
    # cospectral graphs share the trace 2m, so only same (n, m) buckets are compared
    buckets: dict[tuple[int, int], list[tuple[Graph, np.ndarray]]] = {}
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n > max_vertices:
            break
        g = from_networkx(h)
        buckets.setdefault((n, g.m), []).append((g, laplacian_spectrum(g).as_array()))
    pairs = []
    for key in sorted(buckets):
        entries = buckets[key]
        for i in range(len(entries)):
            if budget_seconds is not None and time.monotonic() - start > budget_seconds:
                raise TimeoutError(f"cospectral search exceeded {budget_seconds} s")
            gi, si = entries[i]
            for j in range(i + 1, len(entries)):
                gj, sj = entries[j]
                if spectra_equal(si, sj, tol) and not are_isomorphic(gi, gj):
                    pairs.append((gi, gj))
    return pairs


@dataclass(frozen=True)
class CospectralCertificate:
    graph_a: Graph
    graph_b: Graph
    shared_spectrum: SpectralMultiset
    isomorphic: bool
    tolerance: float
    max_abs_difference: float = 0.0


def cospectral_double_join(
    variant: "Variant | str",
    g: Graph,
    h: Graph,
    g1: Graph,
    h1: Graph,
    g2: Graph,
    h2: Graph,
    tol: float = SPECTRUM_TOL,
) -> CospectralCertificate:
    """Build both double joins from cospectral factor pairs and certify their spectra agree.

    ``isomorphic`` is decided on the two constructed graphs with a VF2 check.
    """
    kg, kh = regularity(g), regularity(h)
    if kg is None or kh is None or not is_connected(g) or not is_connected(h):
        raise PreconditionError("G and H must be connected regular graphs")
    if (g.n, g.m, kg) != (h.n, h.m, kh):
        raise PreconditionError("G and H must share vertex count, edge count and degree")
    for label, x, y in (("G/H", g, h), ("G1/H1", g1, h1), ("G2/H2", g2, h2)):
        if not spectra_equal(laplacian_spectrum(x), laplacian_spectrum(y), tol):
            raise PreconditionError(f"factor pair {label} is not Laplacian cospectral")
    join_a = double_join(variant, g, g1, g2)
    join_b = double_join(variant, h, h1, h2)
    if join_a.n != join_b.n or join_a.m != join_b.m:
        raise ConsistencyError("cospectral factors produced joins of different size")
    spec_a, spec_b = laplacian_spectrum(join_a, tol), laplacian_spectrum(join_b, tol)
    gap = float(np.max(np.abs(spec_a.as_array() - spec_b.as_array())))
    if gap > tol:
        raise ConsistencyError(f"double joins are not cospectral (max difference {gap:.3g})")
    return CospectralCertificate(join_a, join_b, spec_a, are_isomorphic(join_a, join_b), tol, gap)
