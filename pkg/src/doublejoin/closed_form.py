"""Laplacian spectra of the four double joins from the factor spectra alone.

For a connected ``k``-regular ``G`` the Laplacian of every double join is a
double join matrix with ``p = n``, ``q = m``, ``r = n1``, ``s = n2``,
``c = -1`` and ``B = -M``. Since ``M M^T = 2k I - L(G)``, the singular
values of ``B`` are ``sqrt(2k - lambda_i(G))``, and each variant only
changes how ``lambda_i(G)`` enters the diagonal blocks:

====  ======================  =============================================
tag   a_i                     c_i (i <= n) / c_j (j > n)
====  ======================  =============================================
S     n1 + k                  n2 + 2            / n2 + 2
Q     n1 + k                  n2 + lambda_i + 2 / n2 + 2k + 2
R     n1 + k + lambda_i       n2 + 2            / n2 + 2
T     n1 + k + lambda_i       n2 + lambda_i + 2 / n2 + 2k + 2
====  ======================  =============================================

with ``d_i = lambda_i(G1) + n`` and ``e_i = lambda_i(G2) + m``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError
from .graph import Graph, incidence_matrix, is_connected, laplacian, line_graph, regularity
from .oracle import SPECTRUM_TOL, SpectralMultiset, laplacian_spectrum
from .operations import Variant
from .solver import (
    DoubleJoinBlocks,
    DoubleJoinScalars,
    spectrum_from_scalars,
    spectrum_reduced,
)

_TOP_SNAP = 1e-10


@dataclass(frozen=True)
class ClosedFormInstance:
    variant: Variant
    k: int
    n: int
    m: int
    spectrum_g: SpectralMultiset
    n1: int
    n2: int
    spectrum_g1: SpectralMultiset
    spectrum_g2: SpectralMultiset

    def __post_init__(self) -> None:
        object.__setattr__(self, "variant", Variant.parse(self.variant))
        if 2 * self.m != self.n * self.k:
            raise PreconditionError(f"m = {self.m} is not n*k/2 for n={self.n}, k={self.k}")
        if self.m < self.n:
            raise PreconditionError(f"need m >= n (k >= 2), got n={self.n}, m={self.m}")
        lengths = ((self.spectrum_g, self.n), (self.spectrum_g1, self.n1), (self.spectrum_g2, self.n2))
        for spec, size in lengths:
            if len(spec) != size:
                raise PreconditionError(f"spectrum has {len(spec)} values, expected {size}")
        lam = self.spectrum_g.values
        if abs(lam[0]) > SPECTRUM_TOL or lam[-1] > 2 * self.k + SPECTRUM_TOL:
            raise PreconditionError("spectrum of G is not that of a k-regular Laplacian")
        if len(lam) > 1 and lam[1] <= SPECTRUM_TOL:
            raise PreconditionError("G is not connected (repeated zero Laplacian eigenvalue)")

    @classmethod
    def from_graphs(cls, variant: "Variant | str", g: Graph, g1: Graph, g2: Graph) -> "ClosedFormInstance":
        """Collect the factor data, checking the regular and connected hypotheses on ``g``."""
        if not is_connected(g) or g.n == 0:
            raise PreconditionError("G must be connected")
        k = regularity(g)
        if k is None:
            raise PreconditionError("G must be regular")
        return cls(
            Variant.parse(variant),
            k,
            g.n,
            g.m,
            laplacian_spectrum(g),
            g1.n,
            g2.n,
            laplacian_spectrum(g1),
            laplacian_spectrum(g2),
        )


def scalars_for(inst: ClosedFormInstance) -> DoubleJoinScalars:
    """Scalar data of the double join matrix, pairing ``lambda_i(G)`` in ascending order."""
    v, k, n, m, n1, n2 = inst.variant, inst.k, inst.n, inst.m, inst.n1, inst.n2
    lam = np.asarray(inst.spectrum_g.values)
    lam[0] = 0.0
    # b_i = sqrt(2k - lambda_i) amplifies roundoff near 2k (bipartite G) to ~1e-8
    lam[np.abs(2 * k - lam) <= _TOP_SNAP] = 2 * k
    a = n1 + k + (lam if v.has_graph_edges else 0.0) + np.zeros(n)
    c_head = n2 + 2 + (lam if v.has_line_edges else 0.0) + np.zeros(n)
    tail_value = n2 + 2 * k + 2 if v.has_line_edges else n2 + 2
    return DoubleJoinScalars(
        p=n,
        q=m,
        r=n1,
        s=n2,
        c=-1,
        a=a,
        b=np.sqrt(np.maximum(0.0, 2 * k - lam)),
        c_head=c_head,
        c_tail=[tail_value] * (m - n),
        d=np.asarray(inst.spectrum_g1.values) + n,
        e=np.asarray(inst.spectrum_g2.values) + m,
    )


def closed_form_spectrum(inst: ClosedFormInstance, tolerance: float = SPECTRUM_TOL) -> SpectralMultiset:
    """Laplacian spectrum of the double join when both ``G1`` and ``G2`` are nonempty."""
    if inst.n1 < 1 or inst.n2 < 1:
        raise PreconditionError("G1 or G2 is empty; use reduced_spectrum")
    return spectrum_from_scalars(scalars_for(inst), tolerance)


def reduced_spectrum(inst: ClosedFormInstance, tolerance: float = SPECTRUM_TOL) -> SpectralMultiset:
    """Laplacian spectrum when ``G1`` and/or ``G2`` has no vertices.

    With ``G2`` empty this is the vertex join of the variant graph with
    ``G1``; with ``G1`` empty it is the edge join with ``G2``.
    """
    if inst.n1 >= 1 and inst.n2 >= 1:
        raise PreconditionError("both G1 and G2 are nonempty; use closed_form_spectrum")
    return spectrum_reduced(scalars_for(inst), tolerance)


def double_join_laplacian_spectrum(
    variant: "Variant | str", g: Graph, g1: Graph, g2: Graph, tolerance: float = SPECTRUM_TOL
) -> SpectralMultiset:
    """Closed-form spectrum of ``double_join(variant, g, g1, g2)``, either case."""
    inst = ClosedFormInstance.from_graphs(variant, g, g1, g2)
    if inst.n1 and inst.n2:
        return closed_form_spectrum(inst, tolerance)
    return reduced_spectrum(inst, tolerance)


def laplacian_blocks(variant: "Variant | str", g: Graph, g1: Graph, g2: Graph) -> DoubleJoinBlocks:
    """The block Laplacian written in terms of ``M``, ``L(G)`` and ``L(l(G))``.

    Built from factor matrices only, so comparing it with the Laplacian of
    the constructed graph checks the construction and the block formulas
    against each other.
    """
    variant = Variant.parse(variant)
    k = regularity(g)
    if k is None:
        raise PreconditionError("G must be regular")
    n, m, n1, n2 = g.n, g.m, g1.n, g2.n
    inc = incidence_matrix(g)
    A = (n1 + k) * np.eye(n, dtype=np.int64)
    C = (n2 + 2) * np.eye(m, dtype=np.int64)
    if variant.has_graph_edges:
        A = A + laplacian(g)
    if variant.has_line_edges:
        C = C + laplacian(line_graph(g))
    D = laplacian(g1) + n * np.eye(n1, dtype=np.int64)
    E = laplacian(g2) + m * np.eye(n2, dtype=np.int64)
    return DoubleJoinBlocks(A, -inc, C, D, E, c=-1)


def all_ones_cubic(n: int, m: int, k: int, n1: int, n2: int) -> np.ndarray:
    """Cubic factor of the all-ones quartic for a Laplacian double join, highest degree first.

    The quartic is ``x`` times this cubic for all four variants.
    """
    return np.array(
        [
            1.0,
            -(m + n + n1 + k + n2 + 2),
            2 * m + (n1 + k + n) * (m + n2 + 2) + n * k - 2 * k,
            2 * (n + m) * k - 2 * (n1 + k + n) * m - n * k * (m + n2 + 2),
        ],
        dtype=float,
    )


def classical_join_scalars(spectrum_g1: SpectralMultiset, spectrum_g2: SpectralMultiset) -> DoubleJoinScalars:
    """Scalars for the Laplacian of the join ``G1 v G2`` as a double join matrix.

    ``A = L(G1) + n2 I``, ``B = 0``, ``C = 0`` of order ``n1``,
    ``D = L(G2) + n1 I`` and no ``E`` block. The ``C`` block only adds
    ``n1`` zero eigenvalues, which :func:`classical_join_spectrum` removes.
    """
    n1, n2 = len(spectrum_g1), len(spectrum_g2)
    if n1 < 1 or n2 < 1:
        raise PreconditionError("both join factors need at least one vertex")
    lam1 = np.asarray(spectrum_g1.values)
    lam2 = np.asarray(spectrum_g2.values)
    lam1[0] = lam2[0] = 0.0
    return DoubleJoinScalars(
        p=n1,
        q=n1,
        r=n2,
        s=0,
        c=-1,
        a=lam1 + n2,
        b=np.zeros(n1),
        c_head=np.zeros(n1),
        d=lam2 + n1,
    )


def classical_join_spectrum(g1: Graph, g2: Graph, tolerance: float = SPECTRUM_TOL) -> SpectralMultiset:
    """Laplacian spectrum of the join of ``g1`` and ``g2`` through the double join solver."""
    sc = classical_join_scalars(laplacian_spectrum(g1), laplacian_spectrum(g2))
    values = sorted(spectrum_reduced(sc, tolerance).values, key=abs)
    # the n1 smallest in magnitude are the padding zeros from C (plus the true zero, kept once)
    return SpectralMultiset(values[g1.n :], tolerance)
