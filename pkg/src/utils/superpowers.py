"""Alternating and symmetric superpowers of parity-ordered superspaces.

Canonical bases are enumerated sector by sector (decreasing even count),
lexicographically inside a sector. ALT bases are strict on the even block and
allow repetition on the odd block; SYM bases are the mirror image.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from src.models.scalar import Scalar
from src.models.superspace import IndexTuple, PowerVector, SuperMatrix, SuperSpace, SuperVector
from src.types.enums import KernelVerdict, PowerKind
from src.types.errors import (
    DegeneratePowerError,
    DimensionMismatchError,
    IndexRangeError,
    NotEvenError,
)
from src.utils.linalg import ONE, ZERO, exact_array, grids_equal, identity, zeros
from src.utils.superlinear import determinant, eta, omega, permanent

logger = logging.getLogger(__name__)

Entries = Tuple[int, ...]


def _check_kind(kind: PowerKind) -> None:
    if kind not in (PowerKind.ALT, PowerKind.SYM):
        raise ValueError(f"expected ALT or SYM, got {kind}")


def multichoose(d: int, m: int) -> int:
    return 1 if m == 0 else comb(d + m - 1, m)


def _check_request(kind: PowerKind, d0: int, d1: int, n: int) -> None:
    _check_kind(kind)
    if n < 1:
        raise DegeneratePowerError(f"power degree must be positive, got {n}")
    if d0 + d1 == 0:
        raise DegeneratePowerError("power of the zero space")
    if kind is PowerKind.ALT and d1 == 0 and n > d0:
        raise DegeneratePowerError(f"alternating power {n} of an even space of dimension {d0} is zero")
    if kind is PowerKind.SYM and d0 == 0 and n > d1:
        raise DegeneratePowerError(f"symmetric power {n} of an odd space of dimension {d1} is zero")


@lru_cache(maxsize=None)
def _enum_entries(kind: PowerKind, d0: int, d1: int, n: int) -> Tuple[Entries, ...]:
    evens = range(d0)
    odds = range(d0, d0 + d1)
    even_choice, odd_choice = (
        (combinations, combinations_with_replacement) if kind is PowerKind.ALT
        else (combinations_with_replacement, combinations)
    )
    out: List[Entries] = []
    for k in range(n, -1, -1):
        for ev in even_choice(evens, k):
            for od in odd_choice(odds, n - k):
                out.append(tuple(ev) + tuple(od))
    return tuple(out)


def enum_indices(kind: PowerKind, d0: int, d1: int, n: int) -> List[IndexTuple]:
    _check_request(kind, d0, d1, n)
    return [IndexTuple(kind, e, d0) for e in _enum_entries(kind, d0, d1, n)]


def enum_entries(kind: PowerKind, space: SuperSpace, n: int) -> Tuple[Entries, ...]:
    _check_request(kind, space.d0, space.d1, n)
    return _enum_entries(kind, space.d0, space.d1, n)


def dim_power(kind: PowerKind, d0: int, d1: int, n: int) -> int:
    _check_request(kind, d0, d1, n)
    if kind is PowerKind.ALT:
        return sum(comb(d0, k) * multichoose(d1, n - k) for k in range(n + 1))
    return sum(multichoose(d0, k) * comb(d1, n - k) for k in range(n + 1))


def is_canonical(kind: PowerKind, entries: Sequence[int], d0: int) -> bool:
    evens = [e for e in entries if e < d0]
    odds = [e for e in entries if e >= d0]
    if list(entries) != evens + odds:
        return False
    strict, loose = (evens, odds) if kind is PowerKind.ALT else (odds, evens)
    return all(a < b for a, b in zip(strict, strict[1:])) and \
        all(a <= b for a, b in zip(loose, loose[1:]))


def repeated_block(kind: PowerKind, entries: Sequence[int], d0: int) -> List[int]:
    """Entries of the block where repetition is allowed (odd for ALT, even for SYM)."""
    if kind is PowerKind.ALT:
        return [e for e in entries if e >= d0]
    return [e for e in entries if e < d0]


def multiplicity_factorial(kind: PowerKind, entries: Sequence[int], d0: int) -> int:
    block = repeated_block(kind, entries, d0)
    out = 1
    for value in set(block):
        out *= factorial(block.count(value))
    return out


# ------------------------------------------------------------------
# Transversals and superminors
# ------------------------------------------------------------------

def transversal(kind: PowerKind, entries: Sequence[int], d0: int) -> List[Tuple[Entries, int]]:
    """Distinct rearrangements of ``entries`` in lexicographic order with their sign.

    The sign counts inversions among entries of the strict block (even indices
    for ALT, odd indices for SYM).
    """
    _check_kind(kind)
    out = []
    for perm in sorted(set(permutations(entries))):
        strict = [e for e in perm if (e < d0) == (kind is PowerKind.ALT)]
        inversions = sum(1 for a in range(len(strict)) for b in range(a + 1, len(strict))
                         if strict[a] > strict[b])
        out.append((perm, -1 if inversions % 2 else 1))
    return out


def _entries_of(idx: Union[IndexTuple, Sequence[int]]) -> Entries:
    return idx.entries if isinstance(idx, IndexTuple) else tuple(idx)


def _check_bounds(entries: Entries, dim: int) -> None:
    for e in entries:
        if not 0 <= e < dim:
            raise IndexRangeError(f"index {e + 1} outside 1..{dim}")


def multiset_permanent(a: np.ndarray, row_entries: Sequence[int]) -> Scalar:
    """per(a) divided by the factorials of the row multiplicities."""
    value = permanent(a)
    for r in set(row_entries):
        value = value / factorial(list(row_entries).count(r))
    return value


def superminor(kind: PowerKind, a: SuperMatrix, rows: Union[IndexTuple, Sequence[int]],
               cols: Union[IndexTuple, Sequence[int]]) -> Scalar:
    """(I, J)-superminor of an even supermatrix in factored form."""
    _check_kind(kind)
    I, J = _entries_of(rows), _entries_of(cols)
    if len(I) != len(J):
        raise DimensionMismatchError(f"index tuples of lengths {len(I)} and {len(J)}")
    _check_bounds(I, a.rows.dim)
    _check_bounds(J, a.cols.dim)
    ie = [e for e in I if e < a.rows.d0]
    io = [e for e in I if e >= a.rows.d0]
    je = [e for e in J if e < a.cols.d0]
    jo = [e for e in J if e >= a.cols.d0]
    if len(ie) != len(je):
        return ZERO
    even_block = a.entries[np.ix_(ie, je)] if ie else zeros(0, 0)
    odd_block = a.entries[np.ix_(io, jo)] if io else zeros(0, 0)
    if kind is PowerKind.ALT:
        return determinant(even_block) * multiset_permanent(odd_block, io)
    return multiset_permanent(even_block, ie) * determinant(odd_block)


def superminor_by_transversal(kind: PowerKind, a: SuperMatrix, rows: Sequence[int],
                              cols: Sequence[int]) -> Scalar:
    """Superminor as the signed sum over a transversal of the row multiset."""
    I, J = _entries_of(rows), _entries_of(cols)
    total: Scalar = ZERO
    for perm, sign in transversal(kind, I, a.rows.d0):
        term: Scalar = ONE * sign
        for r, c in zip(perm, J):
            term = term * a.entries[r, c]
            if term == 0:
                break
        total += term
    return total


def matrix_power(kind: PowerKind, a: SuperMatrix, n: int) -> np.ndarray:
    """Coordinate grid of the n-th superpower of an even map.

    Rows and columns follow the canonical bases of the row and column spaces.
    """
    _check_kind(kind)
    if not a.is_even:
        raise NotEvenError("matrix_power needs an even supermatrix")
    row_basis = enum_entries(kind, a.rows, n)
    col_basis = enum_entries(kind, a.cols, n)
    out = zeros(len(row_basis), len(col_basis))
    for r, I in enumerate(row_basis):
        for c, J in enumerate(col_basis):
            out[r, c] = superminor(kind, a, I, J)
    return out


def power_parities(kind: PowerKind, space: SuperSpace, n: int) -> Tuple[int, ...]:
    """Parities of the canonical power basis, which is not parity-ordered in general."""
    return tuple(sum(1 for e in I if e >= space.d0) % 2 for I in enum_entries(kind, space, n))


# ------------------------------------------------------------------
# Pure tensors
# ------------------------------------------------------------------

def normalize_pure(kind: PowerKind, factors: Sequence[int],
                   parities: Sequence[int]) -> Optional[Tuple[int, Entries]]:
    """Sort a pure wedge/vee of basis vectors into canonical order.

    Returns (sign, entries), or None when the element vanishes.
    """
    _check_kind(kind)
    items = list(factors)
    sign = 1
    for end in range(len(items) - 1, 0, -1):
        for pos in range(end):
            a, b = items[pos], items[pos + 1]
            if a > b:
                items[pos], items[pos + 1] = b, a
                swap = eta(parities[a], parities[b])
                sign *= -swap if kind is PowerKind.ALT else swap
    vanishing_parity = 0 if kind is PowerKind.ALT else 1
    for a, b in zip(items, items[1:]):
        if a == b and int(parities[a]) == vanishing_parity:
            return None
    return sign, tuple(items)


def expand_pure(kind: PowerKind, vectors: Sequence[SuperVector]) -> PowerVector:
    """Canonical coordinates of v_1 ^ ... ^ v_n (or the vee product)."""
    _check_kind(kind)
    if not vectors:
        raise DegeneratePowerError("empty product")
    space = vectors[0].space
    parities = space.parities
    out = PowerVector(kind, space, len(vectors))
    supports = [[(i, c) for i, c in enumerate(v.coords) if c != 0] for v in vectors]

    def walk(pos: int, chosen: List[int], coef: Scalar) -> None:
        if pos == len(supports):
            normal = normalize_pure(kind, chosen, parities)
            if normal is not None:
                sign, key = normal
                out.add(key, coef * sign)
            return
        for i, c in supports[pos]:
            walk(pos + 1, chosen + [i], coef * c)

    walk(0, [], ONE)
    return out


# ------------------------------------------------------------------
# Pairings
# ------------------------------------------------------------------

def pure_pairing(kind: PowerKind, gram: np.ndarray, I: Sequence[int], J: Sequence[int],
                 d0: int, weighted: bool = False) -> Scalar:
    """Pairing of two canonical pure elements through detper / perdet of the Gram grid."""
    p = sum(1 for e in I if e < d0)
    q = sum(1 for e in J if e < d0)
    if p != q:
        return ZERO
    block = gram[np.ix_(list(I), list(J))] if I else zeros(0, 0)
    if kind is PowerKind.ALT:
        value = determinant(block[:p, :p]) * permanent(block[p:, p:])
    else:
        value = permanent(block[:p, :p]) * determinant(block[p:, p:])
    return value * omega(len(I) - p) if weighted else value


def power_gram(kind: PowerKind, gram: np.ndarray, space: SuperSpace, n: int,
               weighted: bool = False) -> np.ndarray:
    """Gram grid of the canonical power bases of dual and primal spaces."""
    _check_kind(kind)
    basis = enum_entries(kind, space, n)
    out = zeros(len(basis), len(basis))
    for r, I in enumerate(basis):
        for c, J in enumerate(basis):
            out[r, c] = pure_pairing(kind, gram, I, J, space.d0, weighted)
    return out


def pairing_F(kind: PowerKind, fvec: PowerVector, vvec: PowerVector,
              gram: Optional[np.ndarray] = None) -> Scalar:
    """Unweighted power pairing of an element over the dual space with one over the space."""
    if fvec.n != vvec.n:
        raise DimensionMismatchError(f"degrees {fvec.n} and {vvec.n} differ")
    if fvec.space != vvec.space:
        raise DimensionMismatchError(f"spaces {fvec.space} and {vvec.space} are not dual")
    space = vvec.space
    g = identity(space.dim) if gram is None else gram
    total: Scalar = ZERO
    for I, a in fvec.coords.items():
        for J, b in vvec.coords.items():
            total += a * b * pure_pairing(kind, g, I, J, space.d0)
    return total


def basis_vector(kind: PowerKind, space: SuperSpace, entries: Sequence[int]) -> PowerVector:
    return PowerVector(kind, space, len(entries), {tuple(entries): ONE})


def dual_basis(kind: PowerKind, space: SuperSpace, n: int) -> List[PowerVector]:
    """Basis of the power of the dual space that pairs to the Kronecker delta."""
    out = []
    for I in enum_entries(kind, space, n):
        scale = multiplicity_factorial(kind, I, space.d0)
        out.append(PowerVector(kind, space, n, {I: ONE / scale}))
    return out


# ------------------------------------------------------------------
# Lie lift of homogeneous operators
# ------------------------------------------------------------------

def lift_on_slots(kind: Optional[PowerKind], op: np.ndarray, degree: int,
                  basis: Sequence[Entries], parities: Sequence[int]) -> np.ndarray:
    """Leibniz lift of a homogeneous operator to a power basis.

    ``kind=None`` lifts to the tensor power with basis ``basis`` of plain tuples.
    """
    position = {key: i for i, key in enumerate(basis)}
    out = zeros(len(basis), len(basis))
    for col, I in enumerate(basis):
        prefix = 1
        for k, slot in enumerate(I):
            for target in range(op.shape[0]):
                coef = op[target, slot]
                if coef == 0:
                    continue
                factors = I[:k] + (target,) + I[k + 1:]
                if kind is None:
                    sign, key = 1, factors
                else:
                    normal = normalize_pure(kind, factors, parities)
                    if normal is None:
                        continue
                    sign, key = normal
                out[position[key], col] += prefix * sign * coef
            prefix *= eta(degree, parities[slot])
    return out


def power_operator(kind: PowerKind, op: np.ndarray, degree: int, space: SuperSpace, n: int) -> np.ndarray:
    _check_kind(kind)
    return lift_on_slots(kind, exact_array(op), degree, enum_entries(kind, space, n), space.parities)


# ------------------------------------------------------------------
# Kernel of the power map
# ------------------------------------------------------------------

@dataclass(frozen=True)
class KernelResult:
    verdict: KernelVerdict
    root: Optional[Scalar] = None


def kernel_check(kind: PowerKind, a: SuperMatrix, n: int) -> KernelResult:
    """Classify an even automorphism by whether its n-th power is the identity."""
    _check_kind(kind)
    if a.rows != a.cols:
        raise DimensionMismatchError("kernel_check needs an endomorphism")
    powered = matrix_power(kind, a, n)
    if not grids_equal(powered, identity(powered.shape[0])):
        return KernelResult(KernelVerdict.NOT_KERNEL)
    space = a.rows
    exceptional = (
        (kind is PowerKind.ALT and space.d1 == 0 and space.d0 == n)
        or (kind is PowerKind.SYM and space.d0 == 0 and space.d1 == n)
    )
    if exceptional:
        if determinant(a.entries) == 1:
            return KernelResult(KernelVerdict.SL_CASE)
        return KernelResult(KernelVerdict.NOT_KERNEL)
    r = a.entries[0, 0] if space.dim else ONE
    if grids_equal(a.entries, identity(space.dim) * r) and r ** n == 1:
        return KernelResult(KernelVerdict.SCALAR_ROOT, r)
    logger.warning("power %d of a non-scalar map is the identity on %s", n, space)
    return KernelResult(KernelVerdict.NOT_KERNEL)


def dual_compatible(kind: PowerKind, a: SuperMatrix, n: int) -> bool:
    """(A^T)^{power n} equals the transpose of A^{power n} with respect to the pure Gram."""
    transposed = SuperMatrix(a.cols, a.rows, a.entries.T.copy())
    lhs = matrix_power(kind, transposed, n)
    rhs = matrix_power(kind, a, n).T
    left = [multiplicity_factorial(kind, I, a.cols.d0) for I in enum_entries(kind, a.cols, n)]
    right = [multiplicity_factorial(kind, I, a.rows.d0) for I in enum_entries(kind, a.rows, n)]
    # P_cols^{-1} (A^n)^T P_rows
    for r in range(lhs.shape[0]):
        for c in range(lhs.shape[1]):
            if lhs[r, c] * left[r] != rhs[r, c] * right[c]:
                return False
    return True
