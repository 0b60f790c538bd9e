"""Parity signs, determinants, permanents and their hybrids, dual maps."""
from __future__ import annotations

import logging
from itertools import permutations
from typing import Sequence

import numpy as np

from src.models.scalar import Scalar
from src.types.enums import Parity
from src.types.errors import DimensionMismatchError, IndexRangeError, NotEvenError
from src.utils.linalg import ONE, ZERO, det, exact_array

logger = logging.getLogger(__name__)

# Naive permutation sums above this order fall back to Ryser's formula
MAX_PERMANENT_ORDER = 8


def eta(x: int, y: int) -> int:
    """(-1)^(xy) for parities x, y."""
    return -1 if (int(x) & 1) and (int(y) & 1) else 1


def eta3(x: int, y: int, z: int) -> int:
    x, y, z = int(x) & 1, int(y) & 1, int(z) & 1
    return -1 if (x * y + y * z + z * x) % 2 else 1


def omega(k: int) -> int:
    """(-1)^(k(k-1)/2)."""
    return -1 if (k * (k - 1) // 2) % 2 else 1


def parity_sum(parities: Sequence[int]) -> Parity:
    return Parity(sum(int(p) for p in parities) % 2)


def sigma_sign(alpha: Sequence[int]) -> int:
    """Sign of the shortest adjacent-transposition sort of ``alpha`` to evens-first.

    Counts the pairs j < i with alpha_j odd and alpha_i even.
    """
    odd_seen = 0
    exponent = 0
    for a in alpha:
        if int(a) & 1:
            odd_seen += 1
        else:
            exponent += odd_seen
    return -1 if exponent % 2 else 1


def _square(a) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    if a.size == 0:
        return a.reshape(0, 0)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square grid, got shape {a.shape}")
    return a


def determinant(a) -> Scalar:
    return det(_square(a))


def _permanent_naive(a: np.ndarray) -> Scalar:
    n = a.shape[0]
    total: Scalar = ZERO
    for cols in permutations(range(n)):
        term: Scalar = ONE
        for r, c in enumerate(cols):
            term = term * a[r, c]
            if term == 0:
                break
        total += term
    return total


def _permanent_ryser(a: np.ndarray) -> Scalar:
    n = a.shape[0]
    total: Scalar = ZERO
    for subset in range(1, 1 << n):
        cols = [j for j in range(n) if subset >> j & 1]
        prod: Scalar = ONE
        for i in range(n):
            prod = prod * sum((a[i, j] for j in cols), ZERO)
        total += -prod if (n - len(cols)) % 2 else prod
    return total


def permanent(a) -> Scalar:
    a = _square(a)
    n = a.shape[0]
    if n == 0:
        return ONE
    if n > MAX_PERMANENT_ORDER:
        logger.debug("permanent of order %d via Ryser", n)
        return _permanent_ryser(a)
    return _permanent_naive(a)


def _split(k: int, a) -> tuple[np.ndarray, np.ndarray]:
    a = _square(a)
    n = a.shape[0]
    if not 0 <= k <= n:
        raise IndexRangeError(f"split {k} outside 0..{n}")
    return a[:k, :k], a[k:, k:]


def detper(k: int, a) -> Scalar:
    """det of the leading k x k block times per of the trailing block."""
    lead, trail = _split(k, a)
    return determinant(lead) * permanent(trail)


def perdet(k: int, a) -> Scalar:
    lead, trail = _split(k, a)
    return permanent(lead) * determinant(trail)


def is_even(a: np.ndarray, row_parities: Sequence[int], col_parities: Sequence[int]) -> bool:
    for (r, c), value in np.ndenumerate(a):
        if value != 0 and int(row_parities[r]) != int(col_parities[c]):
            return False
    return True


def is_homogeneous_operator(a: np.ndarray, parities: Sequence[int], degree: int) -> bool:
    for (r, c), value in np.ndenumerate(a):
        if value != 0 and (int(parities[r]) + int(parities[c]) + degree) % 2:
            return False
    return True


def dual_map(h: np.ndarray, row_parities: Sequence[int], col_parities: Sequence[int]) -> np.ndarray:
    """Left-dual of an even map in dual coordinates: the transpose."""
    if not is_even(h, row_parities, col_parities):
        raise NotEvenError("dual_map is defined here for even maps only")
    return exact_array(h).T.copy()
