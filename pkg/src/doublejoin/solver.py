"""Eigenvalues and eigenvectors of double join matrices.

A double join matrix has the block form::

    [ A    B    cJ   0  ]
    [ B^T  C    0    cJ ]
    [ cJ   0    D    0  ]
    [ 0    cJ   0    E  ]

with orders ``p, q, r, s`` and ``c = +-1``, where the singular vector pairs
of ``B`` are eigenvectors of ``A`` and ``C``, the kernel of ``B`` is spanned
by eigenvectors of ``C``, and the all-ones vectors are eigenvectors of
``A``, ``C``, ``D`` and ``E``.

Such a matrix splits into invariant subspaces:

* ``(0, 0, Z_i, 0)`` and ``(0, 0, 0, W_i)`` for the non-constant
  eigenvectors of ``D`` and ``E``;
* ``(k X_i, Y_i, 0, 0)`` for each non-constant singular pair of ``B``,
  giving the two roots of ``x^2 - (a_i + c_i) x + a_i c_i - b_i^2``;
* ``(0, Y_j, 0, 0)`` for the remaining kernel directions of ``B``;
* the span of the four blockwise-constant vectors, on which the matrix acts
  as a 4x4 quotient matrix whose eigenvalues are the roots of a quartic.

When ``r = 0`` or ``s = 0`` the corresponding block disappears and the
quotient shrinks to 3x3 (or 2x2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.linalg import null_space

from .errors import ConditionViolation, ConsistencyError, PreconditionError
from .oracle import SPECTRUM_TOL, SYMMETRY_TOL, EigenPair, SpectralMultiset

POLY_TOL = 1e-6
IMAG_TOL = 1e-8
# mixing weight for simultaneous diagonalization inside repeated singular values
_MIX = 0.6180339887498949


@dataclass(frozen=True)
class DoubleJoinScalars:
    """Scalar data that determines the spectrum of a double join matrix.

    ``a[0]``, ``c_head[0]``, ``d[0]`` and ``e[0]`` belong to the all-ones
    eigenvectors and ``b[0]`` to the all-ones singular pair of ``B``.
    ``c_tail`` holds the eigenvalues of ``C`` on the ``q - p`` kernel
    directions of ``B``.
    """

    p: int
    q: int
    r: int
    s: int
    c: int
    a: tuple[float, ...]
    b: tuple[float, ...]
    c_head: tuple[float, ...]
    c_tail: tuple[float, ...] = ()
    d: tuple[float, ...] = ()
    e: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        for name in ("a", "b", "c_head", "c_tail", "d", "e"):
            object.__setattr__(self, name, tuple(float(x) for x in getattr(self, name)))
        if min(self.p, self.q, self.r, self.s) < 0:
            raise ValueError("block orders must be nonnegative")
        if self.p < 1:
            raise ValueError("p must be at least 1")
        if self.p > self.q:
            raise ValueError(f"need p <= q, got p={self.p}, q={self.q}")
        if self.c not in (1, -1):
            raise ValueError("c must be +1 or -1")
        expected = {
            "a": self.p,
            "b": self.p,
            "c_head": self.p,
            "c_tail": self.q - self.p,
            "d": self.r,
            "e": self.s,
        }
        for name, length in expected.items():
            if len(getattr(self, name)) != length:
                raise ValueError(f"{name} must have length {length}, got {len(getattr(self, name))}")
        if any(x < 0 for x in self.b):
            raise ValueError("singular values b must be nonnegative")

    @property
    def order(self) -> int:
        return self.p + self.q + self.r + self.s


@dataclass(frozen=True)
class DoubleJoinBlocks:
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray
    E: np.ndarray
    c: int = -1

    def __post_init__(self) -> None:
        for name in "ABCDE":
            arr = np.asarray(getattr(self, name), dtype=float)
            object.__setattr__(self, name, arr)
        p, q = self.B.shape
        r, s = self.D.shape[0], self.E.shape[0]
        if self.A.shape != (p, p) or self.C.shape != (q, q):
            raise ValueError("A, B, C have inconsistent shapes")
        if self.D.shape != (r, r) or self.E.shape != (s, s):
            raise ValueError("D and E must be square")
        for name in "ACDE":
            mat = getattr(self, name)
            if mat.size and np.max(np.abs(mat - mat.T)) > SYMMETRY_TOL:
                raise ValueError(f"block {name} is not symmetric")
        if self.c not in (1, -1):
            raise ValueError("c must be +1 or -1")

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        return self.B.shape[0], self.B.shape[1], self.D.shape[0], self.E.shape[0]

    def assemble(self) -> np.ndarray:
        p, q, r, s = self.sizes
        n = p + q + r + s
        out = np.zeros((n, n))
        o1, o2, o3 = p, p + q, p + q + r
        out[:o1, :o1] = self.A
        out[:o1, o1:o2] = self.B
        out[o1:o2, :o1] = self.B.T
        out[o1:o2, o1:o2] = self.C
        out[o2:o3, o2:o3] = self.D
        out[o3:, o3:] = self.E
        out[:o1, o2:o3] = self.c
        out[o2:o3, :o1] = self.c
        out[o1:o2, o3:] = self.c
        out[o3:, o1:o2] = self.c
        return out

    @classmethod
    def from_matrix(
        cls, mat: np.ndarray, sizes: Sequence[int], c: int = -1, tol: float = SYMMETRY_TOL
    ) -> "DoubleJoinBlocks":
        """Cut a full matrix into blocks, checking the ``cJ`` and zero couplings."""
        mat = np.asarray(mat, dtype=float)
        p, q, r, s = sizes
        bounds = np.cumsum([0, p, q, r, s])
        if mat.shape != (bounds[-1], bounds[-1]):
            raise ValueError(f"matrix shape {mat.shape} does not match block sizes {tuple(sizes)}")

        def blk(i: int, j: int) -> np.ndarray:
            return mat[bounds[i] : bounds[i + 1], bounds[j] : bounds[j + 1]]

        couplings = {(0, 2): c, (1, 3): c, (0, 3): 0, (1, 2): 0, (2, 3): 0}
        for (i, j), value in couplings.items():
            for x, y in ((i, j), (j, i)):
                part = blk(x, y)
                if part.size and np.max(np.abs(part - value)) > tol:
                    raise ConditionViolation("structure", f"block ({x + 1},{y + 1}) is not {value}*J")
        if blk(0, 1).size and np.max(np.abs(blk(0, 1) - blk(1, 0).T)) > tol:
            raise ConditionViolation("structure", "off-diagonal block B is not mirrored by B^T")
        return cls(blk(0, 0), blk(0, 1), blk(1, 1), blk(2, 2), blk(3, 3), c)


@dataclass
class _Basis:
    """Orthonormal vectors behind the scalars of :func:`scalars_from_blocks`."""

    X: np.ndarray  # p x p, column i pairs with b[i]
    Y: np.ndarray  # q x q, first p columns paired with X, rest span ker B
    Z: np.ndarray  # r x r
    W: np.ndarray  # s x s
    b_signed: float  # X_1^T B Y_1, carries the sign of B on the all-ones pair
    scalars: DoubleJoinScalars = field(repr=False)


# ---------------------------------------------------------------------------
# scalar extraction


def _ones_unit(n: int) -> np.ndarray:
    return np.full(n, 1.0 / np.sqrt(n)) if n else np.zeros(0)


def _complement(n: int) -> np.ndarray:
    """Orthonormal basis of the complement of the all-ones vector."""
    if n <= 1:
        return np.zeros((n, 0))
    return null_space(np.ones((1, n)))


def _ones_eigenvalue(mat: np.ndarray, label: str, condition: str, tol: float) -> float:
    n = mat.shape[0]
    u = _ones_unit(n)
    value = float(u @ mat @ u)
    if np.linalg.norm(mat @ u - value * u) > tol:
        raise ConditionViolation(condition, f"all-ones vector is not an eigenvector of {label}")
    return value


def _eig_on(mat: np.ndarray, basis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if basis.shape[1] == 0:
        return np.zeros(0), basis
    w, v = np.linalg.eigh(basis.T @ mat @ basis)
    return w, basis @ v


def _clusters(values: np.ndarray, tol: float) -> list[list[int]]:
    """Group consecutive indices of a sorted array whose values are within ``tol``."""
    groups: list[list[int]] = []
    for i, x in enumerate(values):
        if groups and abs(x - values[groups[-1][-1]]) <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def _decompose(blocks: DoubleJoinBlocks, tol: Optional[float] = None) -> _Basis:
    A, B, C, D, E = blocks.A, blocks.B, blocks.C, blocks.D, blocks.E
    p, q, r, s = blocks.sizes
    if p < 1 or p > q:
        raise PreconditionError(f"need 1 <= p <= q, got p={p}, q={q}")
    scale = max(1.0, float(np.linalg.norm(blocks.assemble())))
    tol = SPECTRUM_TOL * scale if tol is None else tol

    # all-ones vectors: (ii) for A, C and the B coupling, (iv) for D, E
    a1 = _ones_eigenvalue(A, "A", "ii", tol)
    c1 = _ones_eigenvalue(C, "C", "ii", tol)
    x1, y1 = _ones_unit(p), _ones_unit(q)
    b_signed = float(x1 @ B @ y1)
    if np.linalg.norm(B @ y1 - b_signed * x1) > tol or np.linalg.norm(B.T @ x1 - b_signed * y1) > tol:
        raise ConditionViolation("ii", "all-ones vectors are not a singular pair of B")
    d = [_ones_eigenvalue(D, "D", "iv", tol)] if r else []
    e = [_ones_eigenvalue(E, "E", "iv", tol)] if s else []

    Pp, Pq = _complement(p), _complement(q)
    B_red = Pp.T @ B @ Pq
    xs: list[np.ndarray] = []
    ys: list[np.ndarray] = []
    a_vals: list[float] = []
    b_vals: list[float] = []
    c_vals: list[float] = []

    if p > 1:
        U, sig, Vt = np.linalg.svd(B_red)
        V = Vt.T
    else:
        U, sig, V = np.zeros((0, 0)), np.zeros(0), np.eye(q - 1)
    nonzero = [i for i in range(len(sig)) if sig[i] > tol]
    # sig is descending, so clustering it as-is keeps equal values together
    for group in _clusters(sig[nonzero], tol):
        idx = [nonzero[i] for i in group]
        Uc, Vc = Pp @ U[:, idx], Pq @ V[:, idx]
        a_blk, c_blk = Uc.T @ A @ Uc, Vc.T @ C @ Vc
        _, rot = np.linalg.eigh(a_blk + _MIX * c_blk)
        a_diag, c_diag = rot.T @ a_blk @ rot, rot.T @ c_blk @ rot
        off = max(
            np.max(np.abs(a_diag - np.diag(np.diag(a_diag)))),
            np.max(np.abs(c_diag - np.diag(np.diag(c_diag)))),
        )
        if off > tol:
            raise ConditionViolation("i", "singular vectors of B cannot be chosen as eigenvectors of A and C")
        sigma = float(np.mean(sig[idx]))
        for j in range(len(idx)):
            xs.append(Uc @ rot[:, j])
            ys.append(Vc @ rot[:, j])
            a_vals.append(float(a_diag[j, j]))
            b_vals.append(sigma)
            c_vals.append(float(c_diag[j, j]))

    # zero singular values: left kernel pairs with part of the right kernel
    zero_left = Pp @ U[:, len(nonzero) :] if p > 1 else np.zeros((p, 0))
    zero_right = Pq @ V[:, len(nonzero) :]
    a_zero, x_zero = _eig_on(A, zero_left)
    c_zero, y_zero = _eig_on(C, zero_right)
    for j in range(x_zero.shape[1]):
        xs.append(x_zero[:, j])
        ys.append(y_zero[:, j])
        a_vals.append(float(a_zero[j]))
        b_vals.append(0.0)
        c_vals.append(float(c_zero[j]))
    tail_vecs = [y_zero[:, j] for j in range(x_zero.shape[1], y_zero.shape[1])]
    c_tail = [float(c_zero[j]) for j in range(x_zero.shape[1], y_zero.shape[1])]

    X = np.column_stack([x1] + xs) if p else np.zeros((0, 0))
    Y = np.column_stack([y1] + ys + tail_vecs)
    for i in range(1, p):
        if np.linalg.norm(A @ X[:, i] - a_vals[i - 1] * X[:, i]) > tol:
            raise ConditionViolation("i", f"singular vector X_{i + 1} is not an eigenvector of A")
        if np.linalg.norm(C @ Y[:, i] - c_vals[i - 1] * Y[:, i]) > tol:
            raise ConditionViolation("i", f"singular vector Y_{i + 1} is not an eigenvector of C")
    for j, value in enumerate(c_tail):
        y = tail_vecs[j]
        if np.linalg.norm(C @ y - value * y) > tol:
            raise ConditionViolation("iii", "kernel of B is not spanned by eigenvectors of C")

    d_rest, z_rest = _eig_on(D, _complement(r))
    e_rest, w_rest = _eig_on(E, _complement(s))
    Z = np.column_stack([_ones_unit(r), z_rest]) if r else np.zeros((0, 0))
    W = np.column_stack([_ones_unit(s), w_rest]) if s else np.zeros((0, 0))

    scalars = DoubleJoinScalars(
        p=p,
        q=q,
        r=r,
        s=s,
        c=blocks.c,
        a=[a1] + a_vals,
        b=[abs(b_signed)] + b_vals,
        c_head=[c1] + c_vals,
        c_tail=c_tail,
        d=d + list(d_rest),
        e=e + list(e_rest),
    )
    return _Basis(X, Y, Z, W, b_signed, scalars)


def scalars_from_blocks(blocks: DoubleJoinBlocks, tol: Optional[float] = None) -> DoubleJoinScalars:
    """Read off ``a_i, b_i, c_i, d_i, e_i`` from block data.

    Raises :class:`ConditionViolation` naming the failed condition when the
    blocks are not a double join matrix.
    """
    return _decompose(blocks, tol).scalars


# ---------------------------------------------------------------------------
# spectrum from scalars


def pair_roots(a: float, b: float, c: float) -> tuple[float, float]:
    """Both roots of ``x^2 - (a + c) x + a c - b^2``."""
    disc = np.sqrt((a - c) ** 2 + 4.0 * b * b)
    return (a + c - disc) / 2.0, (a + c + disc) / 2.0


def quotient_matrix(
    a1: float, b1: float, c1: float, d1: float, e1: float, p: int, q: int, r: int, s: int, c: int
) -> np.ndarray:
    """Action on the blockwise-constant vectors ``(k1 1_p, k2 1_q, k3 1_r, k4 1_s)``.

    Rows and columns for an empty ``D`` (``r = 0``) or ``E`` (``s = 0``)
    block are dropped.
    """
    full = np.array(
        [
            [a1, b1 * np.sqrt(q / p), c * r, 0.0],
            [b1 * np.sqrt(p / q), c1, 0.0, c * s],
            [c * p, 0.0, d1, 0.0],
            [0.0, c * q, 0.0, e1],
        ]
    )
    keep = [0, 1] + ([2] if r else []) + ([3] if s else [])
    return full[np.ix_(keep, keep)]


def quartic_coefficients(
    a1: float, b1: float, c1: float, d1: float, e1: float, p: int, q: int, r: int, s: int
) -> np.ndarray:
    """Coefficients (highest degree first) of the quartic for the all-ones subspace."""
    b2 = b1 * b1
    ad = a1 * d1 - p * r
    ec = e1 * c1 - q * s
    return np.array(
        [
            1.0,
            -(e1 + c1 + a1 + d1),
            ec + (a1 + d1) * (e1 + c1) + ad - b2,
            (d1 + e1) * b2 - (a1 + d1) * ec - ad * (e1 + c1),
            ad * ec - d1 * e1 * b2,
        ]
    )


def reduced_coefficients(
    a1: float, b1: float, c1: float, d1: float, e1: float, p: int, q: int, r: int, s: int
) -> np.ndarray:
    """Characteristic polynomial of the quotient when ``r`` or ``s`` is zero.

    From ``(x - a1 - pr/(x - d1)) (x - c1 - qs/(x - e1)) = b1^2`` with the
    fraction of the missing block removed before clearing denominators.
    """
    x = np.polynomial.Polynomial([0.0, 1.0])
    b2 = b1 * b1
    left = (x - a1) * (x - d1) - p * r if r else x - a1
    right = (x - c1) * (x - e1) - q * s if s else x - c1
    lhs = left * right - b2 * ((x - d1) if r else 1) * ((x - e1) if s else 1)
    return lhs.coef[::-1]


def _checked_quotient_roots(mat: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    roots = np.linalg.eigvals(mat)
    imag_bound = IMAG_TOL * max(1.0, float(np.linalg.norm(mat)))
    if np.max(np.abs(roots.imag)) > imag_bound:
        raise ConsistencyError(f"quotient matrix has non-real eigenvalues {roots}")
    roots = np.sort(roots.real)
    for lam in roots:
        value = np.polyval(coeffs, lam)
        if abs(value) > POLY_TOL * (1.0 + abs(lam)) ** len(roots):
            raise ConsistencyError(f"root {lam} leaves polynomial residual {value}")
    return roots


def quartic_eigenvalues(
    a1: float, b1: float, c1: float, d1: float, e1: float, p: int, q: int, r: int, s: int, c: int
) -> np.ndarray:
    """The four eigenvalues on the blockwise-constant subspace, ascending.

    Computed as eigenvalues of :func:`quotient_matrix` and checked against
    the explicit quartic polynomial.
    """
    if min(p, q, r, s) < 1:
        raise PreconditionError("quartic_eigenvalues needs p, q, r, s >= 1")
    mat = quotient_matrix(a1, b1, c1, d1, e1, p, q, r, s, c)
    return _checked_quotient_roots(mat, quartic_coefficients(a1, b1, c1, d1, e1, p, q, r, s))


def _quotient_roots(sc: DoubleJoinScalars) -> np.ndarray:
    d1 = sc.d[0] if sc.r else 0.0
    e1 = sc.e[0] if sc.s else 0.0
    args = (sc.a[0], sc.b[0], sc.c_head[0], d1, e1, sc.p, sc.q, sc.r, sc.s)
    if sc.r and sc.s:
        return quartic_eigenvalues(*args, sc.c)
    return _checked_quotient_roots(quotient_matrix(*args, sc.c), reduced_coefficients(*args))


def _families(sc: DoubleJoinScalars) -> list[float]:
    values = list(sc.d[1:]) + list(sc.e[1:])
    for i in range(1, sc.p):
        values.extend(pair_roots(sc.a[i], sc.b[i], sc.c_head[i]))
    values.extend(sc.c_tail)
    values.extend(_quotient_roots(sc))
    return values


def spectrum_from_scalars(sc: DoubleJoinScalars, tolerance: float = SPECTRUM_TOL) -> SpectralMultiset:
    """Full spectrum of a double join matrix with nonempty ``D`` and ``E``."""
    if sc.r < 1 or sc.s < 1:
        raise PreconditionError("spectrum_from_scalars needs r >= 1 and s >= 1; use spectrum_reduced")
    return SpectralMultiset(_families(sc), tolerance)


def spectrum_reduced(sc: DoubleJoinScalars, tolerance: float = SPECTRUM_TOL) -> SpectralMultiset:
    """Spectrum when ``D`` and/or ``E`` is empty; the quartic drops to a cubic or quadratic."""
    if sc.r >= 1 and sc.s >= 1:
        raise PreconditionError("spectrum_reduced needs r = 0 or s = 0; use spectrum_from_scalars")
    return SpectralMultiset(_families(sc), tolerance)


def double_join_spectrum(sc: DoubleJoinScalars, tolerance: float = SPECTRUM_TOL) -> SpectralMultiset:
    """Dispatch to the general or the reduced case."""
    if sc.r and sc.s:
        return spectrum_from_scalars(sc, tolerance)
    return spectrum_reduced(sc, tolerance)


# ---------------------------------------------------------------------------
# eigenvectors


def _embed(sizes: Sequence[int], parts: dict[int, np.ndarray]) -> np.ndarray:
    out = np.zeros(sum(sizes))
    offsets = np.cumsum([0, *sizes])
    for k, vec in parts.items():
        out[offsets[k] : offsets[k + 1]] = vec
    return out


def _constant_block_vectors(
    basis: _Basis, blocks: DoubleJoinBlocks, tol: float
) -> list[tuple[float, np.ndarray]]:
    """Eigenvectors ``(k1 1_p, k2 1_q, k3 1_r, k4 1_s)`` of the quotient.

    For a simple root the unknowns follow from the first equations with
    the last coefficient fixed to 1. When that system is singular, or the
    root is repeated, the eigenvectors come from the null space of the
    orthonormalised quotient minus the root.
    """
    sc = basis.scalars
    p, q, r, s = blocks.sizes
    c = blocks.c
    present = [0, 1] + ([2] if r else []) + ([3] if s else [])
    dims = [p, q, r, s]
    # in the orthonormal basis (X_1, Y_1, Z_1, W_1) the quotient is symmetric
    sym = np.array(
        [
            [sc.a[0], basis.b_signed, c * np.sqrt(p * r), 0.0],
            [basis.b_signed, sc.c_head[0], 0.0, c * np.sqrt(q * s)],
            [c * np.sqrt(p * r), 0.0, sc.d[0] if r else 0.0, 0.0],
            [0.0, c * np.sqrt(q * s), 0.0, sc.e[0] if s else 0.0],
        ]
    )[np.ix_(present, present)]
    unscale = np.array([1.0 / np.sqrt(dims[k]) for k in present])
    # same matrix in the unnormalised unknowns k1..k4
    plain = sym * np.outer(unscale, 1.0 / unscale)
    roots = _quotient_roots(sc)

    out: list[tuple[float, np.ndarray]] = []
    for group in _clusters(roots, tol):
        lam = float(np.mean(roots[group]))
        coeffs_list: list[np.ndarray] = []
        if len(group) == 1:
            shifted = plain - lam * np.eye(len(present))
            sub = shifted[:-1, :-1]
            if np.linalg.cond(sub) < 1e8:
                k = np.append(np.linalg.solve(sub, -shifted[:-1, -1]), 1.0)
                if np.linalg.norm(shifted @ k) <= tol * max(1.0, np.linalg.norm(k)):
                    coeffs_list.append(k)
        if not coeffs_list:
            _, _, vt = np.linalg.svd(sym - lam * np.eye(len(present)))
            for row in vt[len(present) - len(group) :]:
                coeffs_list.append(row * unscale)
        for k in coeffs_list:
            parts = {blk: k[i] * np.ones(dims[blk]) for i, blk in enumerate(present)}
            out.append((lam, _embed(dims, parts)))
    return out


def eigenvectors_from_blocks(blocks: DoubleJoinBlocks, tol: Optional[float] = None) -> list[EigenPair]:
    """All ``p + q + r + s`` eigenpairs, built family by family.

    Every vector is normalised to unit length and certified against the
    assembled matrix; a residual above ``1e-8 max(1, ||M||_F)`` raises
    :class:`ConsistencyError`.
    """
    mat = blocks.assemble()
    scale = max(1.0, float(np.linalg.norm(mat)))
    bound = SPECTRUM_TOL * scale
    basis = _decompose(blocks, tol)
    sc = basis.scalars
    sizes = blocks.sizes
    p, q = sc.p, sc.q

    raw: list[tuple[str, float, np.ndarray]] = []
    for i in range(1, sc.r):
        raw.append(("D", sc.d[i], _embed(sizes, {2: basis.Z[:, i]})))
    for i in range(1, sc.s):
        raw.append(("E", sc.e[i], _embed(sizes, {3: basis.W[:, i]})))
    for i in range(1, p):
        x, y = basis.X[:, i], basis.Y[:, i]
        a, b, c = sc.a[i], sc.b[i], sc.c_head[i]
        if b > bound:
            for lam in pair_roots(a, b, c):
                raw.append(("pair", lam, _embed(sizes, {0: (lam - c) / b * x, 1: y})))
        else:
            raw.append(("pair", a, _embed(sizes, {0: x})))
            raw.append(("pair", c, _embed(sizes, {1: y})))
    for j in range(p, q):
        raw.append(("kernel", sc.c_tail[j - p], _embed(sizes, {1: basis.Y[:, j]})))
    for lam, vec in _constant_block_vectors(basis, blocks, bound):
        raw.append(("constant", lam, vec))

    pairs = []
    for family, lam, vec in raw:
        vec = vec / np.linalg.norm(vec)
        residual = float(np.linalg.norm(mat @ vec - lam * vec))
        if residual > bound:
            raise ConsistencyError(f"{family} eigenpair at {lam:.6g} has residual {residual:.3g}")
        pairs.append(EigenPair(float(lam), vec, residual, family))
    return pairs
