"""Exact dense linear algebra over Q and Q(i).

Grids are numpy object arrays; elimination runs on sympy DomainMatrix.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

import numpy as np
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from src.models.scalar import Scalar, domain_for, from_domain_element, to_domain_element, to_scalar
from src.types.errors import DimensionMismatchError, SingularFormError

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


def exact_array(data) -> np.ndarray:
    """Object array with every entry converted to an exact scalar."""
    arr = np.array(data, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, value in np.ndenumerate(arr):
        out[idx] = to_scalar(value)
    return out


def zeros(*shape: int) -> np.ndarray:
    return np.full(shape, ZERO, dtype=object)


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[-1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    if a.shape[-1] == 0:
        return zeros(*(a.shape[:-1] + b.shape[1:]))
    return np.dot(a, b)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; basis order is row-major on (a-index, b-index)."""
    r1, c1 = a.shape
    r2, c2 = b.shape
    out = zeros(r1 * r2, c1 * c2)
    for i in range(r1):
        for j in range(c1):
            if a[i, j] != 0:
                out[i * r2:(i + 1) * r2, j * c2:(j + 1) * c2] = a[i, j] * b
    return out


def block_diag(*blocks: np.ndarray) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def grids_equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


# ------------------------------------------------------------------
# Elimination over QQ / QQ_I
# ------------------------------------------------------------------

def to_domain_matrix(a: np.ndarray, domain=None) -> DomainMatrix:
    """Object grid -> sympy ``DomainMatrix`` over ``QQ``, or ``QQ_I`` when any entry is Gaussian."""
    a = np.asarray(a, dtype=object)
    if domain is None:
        domain = domain_for(a.flat)
    rows = [[to_domain_element(to_scalar(x), domain) for x in row] for row in a]
    return DomainMatrix(rows, a.shape, domain)


def from_domain_matrix(dm: DomainMatrix) -> np.ndarray:
    out = zeros(*dm.shape)
    for i, row in enumerate(dm.to_list()):
        for j, element in enumerate(row):
            out[i, j] = from_domain_element(element, dm.domain)
    return out


def rank(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return to_domain_matrix(a).rank()


def det(a: np.ndarray) -> Scalar:
    n, n_cols = a.shape
    if n != n_cols:
        raise DimensionMismatchError(f"determinant of non-square {a.shape} matrix")
    if n == 0:
        return ONE
    dm = to_domain_matrix(a)
    return from_domain_element(dm.det(), dm.domain)


def solve(a: np.ndarray, b: Sequence[Scalar]) -> Optional[np.ndarray]:
    """One exact solution of ``a x = b`` (free variables set to 0), or None."""
    n_rows, n_cols = a.shape
    if len(b) != n_rows:
        raise DimensionMismatchError(f"right-hand side of length {len(b)} for {a.shape} system")
    if n_cols == 0:
        return zeros(0) if all(v == 0 for v in b) else None
    if n_rows == 0:
        return zeros(n_cols)
    augmented = np.empty((n_rows, n_cols + 1), dtype=object)
    augmented[:, :n_cols] = a
    augmented[:, n_cols] = list(b)
    reduced, pivots = to_domain_matrix(augmented).rref()
    if n_cols in pivots:
        return None
    rows = reduced.to_list()
    sol = zeros(n_cols)
    for r, c in enumerate(pivots):
        sol[c] = from_domain_element(rows[r][n_cols], reduced.domain)
    return sol


def inverse(a: np.ndarray) -> np.ndarray:
    """Exact inverse; raises SingularFormError when ``a`` is singular."""
    n, n_cols = a.shape
    if n != n_cols:
        raise DimensionMismatchError(f"cannot invert non-square {a.shape} matrix")
    if n == 0:
        return zeros(0, 0)
    try:
        return from_domain_matrix(to_domain_matrix(a).inv())
    except DMNonInvertibleMatrixError as exc:
        raise SingularFormError("matrix is singular") from exc


def independent_subset(vectors: Iterable[np.ndarray]) -> List[int]:
    """Positions of a first-come maximal linearly independent subfamily.

    These are the pivot columns of the matrix whose columns are the vectors.
    """
    columns = [list(vec) for vec in vectors]
    if not columns or not columns[0]:
        return []
    _, pivots = to_domain_matrix(np.array(columns, dtype=object).T).rref()
    logger.debug("%d independent among %d vectors", len(pivots), len(columns))
    return list(pivots)


def coordinates(basis: Sequence[np.ndarray], vec: np.ndarray) -> Optional[np.ndarray]:
    """Coordinates of ``vec`` in the span of ``basis`` (columns), or None."""
    if not basis:
        return zeros(0) if is_zero(vec) else None
    cols = np.array([list(b) for b in basis], dtype=object).T
    return solve(cols, list(vec))


def coordinates_many(basis: Sequence[np.ndarray], vectors: Sequence[np.ndarray]) -> List[Optional[np.ndarray]]:
    """``coordinates`` of each vector in the span of an independent ``basis``, from one rref."""
    if not basis or not vectors:
        return [coordinates(basis, vec) for vec in vectors]
    k = len(basis)
    grid = np.array([list(b) for b in basis] + [list(v) for v in vectors], dtype=object).T
    reduced, pivots = to_domain_matrix(grid).rref()
    if tuple(pivots[:k]) != tuple(range(k)):
        raise SingularFormError("basis vectors are linearly dependent")
    rows = reduced.to_list()
    domain = reduced.domain
    out: List[Optional[np.ndarray]] = []
    for j in range(k, k + len(vectors)):
        if any(rows[r][j] != domain.zero for r in range(k, len(rows))):
            out.append(None)
            continue
        out.append(np.array([from_domain_element(rows[r][j], domain) for r in range(k)], dtype=object))
    return out
