"""Tensor (G_{r,n}) vector structures on a dimension-rn space.

A structure is stored through its distinguished dual basis, the rn
functionals m_{j,alpha} laid out as the rows of an invertible matrix
with row index j*n + alpha.  Two bases define the same structure exactly
when their transition matrix factors as a Kronecker product C (x) A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionMismatchError, GeneralPositionError
from .linalg import QMatrix, nullspace, rank


@dataclass(frozen=True)
class TensorStructure:
    """Distinguished dual basis (m_{j,alpha}) of a type-(r, n) structure."""

    r: int
    n: int
    m: QMatrix  # rows are the functionals, row index j*n + alpha

    def row(self, j: int, alpha: int) -> tuple:
        return self.m.entries[j * self.n + alpha]

    def type_subspace_rows(self, t) -> list:
        """Basis of the annihilator of the type-(r, n-1) space with parameter t."""
        t = [Fraction(x) for x in t]
        if len(t) != self.n:
            raise DimensionMismatchError("parameter must have n coordinates")
        rows = []
        for j in range(self.r):
            acc = [Fraction(0)] * (self.r * self.n)
            for alpha in range(self.n):
                if t[alpha]:
                    row = self.row(j, alpha)
                    acc = [x + t[alpha] * y for x, y in zip(acc, row)]
            rows.append(tuple(acc))
        return rows

    def type_subspace(self, t) -> list:
        """Basis vectors of the type-(r, n-1) subspace cut out by t."""
        return nullspace(self.type_subspace_rows(t), self.r * self.n)

    def left_type_subspace(self, u) -> list:
        """Basis of the type-(r-1, n) subspace cut out by a covector u on C^r."""
        u = [Fraction(x) for x in u]
        if len(u) != self.r:
            raise DimensionMismatchError("parameter must have r coordinates")
        rows = []
        for alpha in range(self.n):
            acc = [Fraction(0)] * (self.r * self.n)
            for j in range(self.r):
                if u[j]:
                    row = self.row(j, alpha)
                    acc = [x + u[j] * y for x, y in zip(acc, row)]
            rows.append(tuple(acc))
        return rows


def _annihilator(basis_rows, dim: int) -> list:
    return nullspace(basis_rows, dim)


def construct_structure(subspaces: Sequence, rng=None) -> TensorStructure:
    """The unique structure making n+1 general codim-r subspaces type (r, n-1).

    ``subspaces`` are bases (row lists) of F_0, ..., F_n inside Q^{rn}.
    A basis phi_1..phi_r of the annihilator of F_0 is decomposed along
    the direct sum of the annihilators of F_1..F_n; the components form
    the distinguished dual basis.  Passing ``rng`` remixes the basis of
    the first annihilator, which changes the output only by a G_{r,n}
    transition.
    """
    count = len(subspaces)
    if count < 3:
        raise DimensionMismatchError("need n+1 >= 3 subspaces")
    n = count - 1
    first = [tuple(Fraction(x) for x in row) for row in subspaces[0]]
    dim = len(first[0])
    if dim % n:
        raise DimensionMismatchError(f"ambient dimension {dim} not divisible by n={n}")
    r = dim // n

    annihilators = []
    for idx, sub in enumerate(subspaces):
        rows = [tuple(Fraction(x) for x in row) for row in sub]
        if rank(rows, dim) != dim - r:
            raise DimensionMismatchError(
                f"subspace {idx} does not have codimension r={r}"
            )
        ann = _annihilator(rows, dim)
        annihilators.append(ann)

    for omitted in range(n + 1):
        stacked = [
            row for idx, ann in enumerate(annihilators) if idx != omitted for row in ann
        ]
        if rank(stacked, dim) != dim:
            witness = tuple(i for i in range(n + 1) if i != omitted)
            raise GeneralPositionError(
                f"annihilators {witness} do not span the dual", witness=witness
            )

    phis = annihilators[0]
    if rng is not None:
        from .sampling import rand_invertible_matrix

        mix = rand_invertible_matrix(rng, r)
        phis = [
            tuple(
                sum(mix.entries[i][j] * phis[j][c] for j in range(r))
                for c in range(dim)
            )
            for i in range(r)
        ]

    basis_rows = [row for ann in annihilators[1:] for row in ann]
    change = QMatrix(basis_rows).transpose().inverse()
    m_rows = [[Fraction(0)] * dim for _ in range(dim)]
    for j, phi in enumerate(phis):
        coords = change.matvec(phi)
        for alpha in range(n):
            block = coords[alpha * r : (alpha + 1) * r]
            component = [Fraction(0)] * dim
            for coeff, base_row in zip(block, annihilators[1 + alpha]):
                if coeff:
                    component = [
                        x + coeff * y for x, y in zip(component, base_row)
                    ]
            m_rows[j * n + alpha] = component
    m = QMatrix(m_rows)
    if not m.is_invertible():
        raise GeneralPositionError("decomposition did not produce a basis")
    return TensorStructure(r, n, m)


def is_type_subspace(structure: TensorStructure, subspace_rows) -> Optional[tuple]:
    """Parameter [t_1 : ... : t_n] of a type-(r, n-1) subspace, if it is one.

    The subspace is given by a basis of rn - r vectors.  Its annihilator
    is expressed in the distinguished dual basis and must be spanned by
    rank-one coefficient matrices u t^T with a common row direction t.
    """
    r, n = structure.r, structure.n
    dim = r * n
    rows = [tuple(Fraction(x) for x in row) for row in subspace_rows]
    if rank(rows, dim) != dim - r:
        raise DimensionMismatchError("subspace must have codimension r")
    ann = _annihilator(rows, dim)
    minv = structure.m.inverse()
    coefficient_mats = []
    for psi in ann:
        coords = [
            sum(psi[c] * minv.entries[c][row_idx] for c in range(dim))
            for row_idx in range(dim)
        ]
        coefficient_mats.append([coords[j * n : (j + 1) * n] for j in range(r)])

    t = None
    for mat in coefficient_mats:
        for row in mat:
            if any(row):
                if t is None:
                    t = row
                elif rank([t, row], n) != 1:
                    return None
    if t is None:
        return None
    us = []
    for mat in coefficient_mats:
        pivot = next(i for i, x in enumerate(t) if x != 0)
        u = [row[pivot] / t[pivot] for row in mat]
        # every row must be the predicted multiple of t
        for uj, row in zip(u, mat):
            if any(row[i] != uj * t[i] for i in range(n)):
                return None
        us.append(u)
    if rank(us, r) != r:
        return None
    pivot = next(i for i, x in enumerate(t) if x != 0)
    return tuple(x / t[pivot] for x in t)


def grn_relation(ma, mb, r: int = None, n: int = None) -> Optional[tuple]:
    """Kronecker factorization of the transition between two dual bases.

    Accepts TensorStructure values (carrying their own r, n) or plain
    QMatrix bases together with explicit r, n.  Returns (C, A) with
    mb = (C (x) A) ma when the transition matrix has the block rank-one
    structure of the group G_{r,n}; None otherwise.  The factors are
    normalized so the first nonzero entry of A is 1.
    """
    if isinstance(ma, TensorStructure):
        r, n, ma = ma.r, ma.n, ma.m
    if isinstance(mb, TensorStructure):
        if (r, n) != (mb.r, mb.n):
            raise DimensionMismatchError("structures disagree on (r, n)")
        mb = mb.m
    if r is None or n is None:
        raise DimensionMismatchError("plain matrices need explicit r and n")
    if ma.nrows != r * n or mb.nrows != r * n:
        raise DimensionMismatchError("matrix size is not rn")
    transition = mb @ ma.inverse()
    blocks = {}
    for j in range(r):
        for k in range(r):
            block = [
                [transition.entries[j * n + alpha][k * n + beta] for beta in range(n)]
                for alpha in range(n)
            ]
            blocks[j, k] = block
    flat = {key: [x for row in b for x in row] for key, b in blocks.items()}
    reference = None
    for key in sorted(flat):
        if any(flat[key]):
            reference = key
            break
    if reference is None:
        return None
    a_flat = flat[reference]
    pivot = next(i for i, x in enumerate(a_flat) if x != 0)
    scale = a_flat[pivot]
    a_flat = [x / scale for x in a_flat]
    c_entries = [[Fraction(0)] * r for _ in range(r)]
    for (j, k), values in flat.items():
        coeff = values[pivot]
        if any(values[i] != coeff * a_flat[i] for i in range(n * n)):
            return None
        c_entries[j][k] = coeff
    a = QMatrix([a_flat[i * n : (i + 1) * n] for i in range(n)])
    c = QMatrix(c_entries)
    if not a.is_invertible() or not c.is_invertible():
        return None
    return c, a
