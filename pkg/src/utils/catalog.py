"""Simple Jordan pairs of types I, II and III, their maps, and the two
identifications of II and III with shifted second powers of type I."""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import List, Optional, Tuple

import numpy as np

from src.models.pair import MetricPair, PairMap, ShiftParam
from src.models.report import Report
from src.models.scalar import Scalar, gaussian_i, to_scalar
from src.types.enums import Parity, PowerKind, JordanType
from src.types.errors import DimensionMismatchError
from src.utils.handlers import power_pair
from src.utils.jordan import check_hom, check_similarity, tensor_shift
from src.utils.linalg import exact_array, identity, inverse, kron, rank, zeros

logger = logging.getLogger(__name__)

__all__ = [
    "type_I", "type_II", "type_III", "type_I_automorphism", "scaling_map",
    "example_map_II", "example_map_III", "verify_example_II", "verify_example_III",
    "product_sign_relation", "matrix_basis", "check_hom", "check_similarity",
]

Unit = Tuple[int, int]

EXAMPLE_SHIFT = ShiftParam(-4, Parity.EVEN)


def _even_pair(dim: int, prod: np.ndarray, gram: np.ndarray, labels: Tuple[str, ...]) -> MetricPair:
    pars = (Parity.EVEN,) * dim
    return MetricPair(pars, pars, prod, prod.copy(), labels, labels, gram=gram)


def type_I(p: int, q: int) -> MetricPair:
    """M_{p,q} with {x, y, z} = x y^T z + z y^T x and t(x, y) = tr(x y^T)."""
    if p < 1 or q < 1:
        raise DimensionMismatchError(f"type I needs positive sizes, got ({p}, {q})")
    units = list(product(range(p), range(q)))
    index = {u: i for i, u in enumerate(units)}
    d = len(units)
    prod = zeros(d, d, d, d)
    for (x, (a, b)), (y, (c, e)), (z, (g, h)) in product(enumerate(units), repeat=3):
        if b == e and c == g:
            prod[x, y, z, index[(a, h)]] += 1
        if h == e and c == a:
            prod[x, y, z, index[(g, b)]] += 1
    labels = tuple(f"E{a + 1}{b + 1}" for a, b in units)
    return _even_pair(d, prod, identity(d), labels)


def matrix_basis(jtype: JordanType, n: int) -> List[Unit]:
    if jtype is JordanType.II:
        return list(combinations(range(n), 2))
    if jtype is JordanType.III:
        return list(combinations_with_replacement(range(n), 2))
    raise ValueError(f"no hatted basis for type {jtype.value}")


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def _place(jtype: JordanType, a: int, b: int) -> Optional[Tuple[int, Unit]]:
    """E^_{ab} = -E^_{ba}, E^_{aa} = 0; the checked basis is symmetric."""
    if a < b:
        return 1, (a, b)
    if a > b:
        return (-1, (b, a)) if jtype is JordanType.II else (1, (b, a))
    return None if jtype is JordanType.II else (1, (a, a))


def _hatted_pair(jtype: JordanType, n: int) -> MetricPair:
    units = matrix_basis(jtype, n)
    index = {u: i for i, u in enumerate(units)}
    d = len(units)
    s = -1 if jtype is JordanType.II else 1
    prod = zeros(d, d, d, d)
    for (x, (i1, i2)), (y, (j1, j2)), (z, (k1, k2)) in product(enumerate(units), repeat=3):
        terms = (
            (_delta(i2, j2) * _delta(j1, k2) + s * _delta(i2, j1) * _delta(j2, k2), i1, k1),
            (_delta(i2, j1) * _delta(j2, k1) + s * _delta(i2, j2) * _delta(j1, k1), i1, k2),
            (_delta(i1, j1) * _delta(j2, k2) + s * _delta(i1, j2) * _delta(j1, k2), i2, k1),
            (_delta(i1, j2) * _delta(j1, k1) + s * _delta(i1, j1) * _delta(j2, k1), i2, k2),
        )
        for coef, a, b in terms:
            placed = _place(jtype, a, b) if coef else None
            if placed is not None:
                prod[x, y, z, index[placed[1]]] += placed[0] * coef
    gram = zeros(d, d)
    for (x, (a, b)), (y, (c, e)) in product(enumerate(units), repeat=2):
        if jtype is JordanType.II:
            gram[x, y] = _delta(a, c) * _delta(b, e)
        else:
            gram[x, y] = 2 * (_delta(a, e) * _delta(b, c) + _delta(a, c) * _delta(b, e))
    mark = "A" if jtype is JordanType.II else "S"
    labels = tuple(f"{mark}{a + 1}{b + 1}" for a, b in units)
    logger.debug("type %s pair of size %d: dimension %d", jtype.value, n, d)
    return _even_pair(d, prod, gram, labels)


def type_II(n: int) -> MetricPair:
    """Antisymmetric n x n matrices on the basis E_ij - E_ji, i < j."""
    if n < 2:
        raise DimensionMismatchError(f"type II needs n >= 2, got {n}")
    return _hatted_pair(JordanType.II, n)


def type_III(n: int) -> MetricPair:
    """Symmetric n x n matrices on the basis E_ij + E_ji, i <= j."""
    if n < 1:
        raise DimensionMismatchError(f"type III needs n >= 1, got {n}")
    return _hatted_pair(JordanType.III, n)


def _as_matrix(jtype: JordanType, n: int, unit: Unit) -> np.ndarray:
    a, b = unit
    m = zeros(n, n)
    m[a, b] += 1
    m[b, a] += -1 if jtype is JordanType.II else 1
    return m


def product_sign_relation(jtype: JordanType, n: int) -> Optional[int]:
    """Global sign s with installed product = s (x y^T z + z y^T x), or None."""
    pair = type_II(n) if jtype is JordanType.II else type_III(n)
    units = matrix_basis(jtype, n)
    mats = [_as_matrix(jtype, n, u) for u in units]
    candidates = [1, -1]
    for x, y, z in product(range(len(units)), repeat=3):
        value = mats[x].dot(mats[y].T).dot(mats[z]) + mats[z].dot(mats[y].T).dot(mats[x])
        coords = [value[a, b] if a != b else Fraction(value[a, a]) / 2 for a, b in units]
        installed = pair.prod_minus[x, y, z]
        candidates = [s for s in candidates if all(s * c == i for c, i in zip(coords, installed))]
        if not candidates:
            logger.warning("type %s, n = %d: no global sign relates the products", jtype.value, n)
            return None
    logger.info("type %s, n = %d: installed products are %+d times the matrix products",
                jtype.value, n, candidates[0])
    return candidates[0]


def scaling_map(lam: Scalar, pair: MetricPair) -> PairMap:
    """c_lam: lam^-1 on V-, lam on V+."""
    lam = to_scalar(lam)
    return PairMap(identity(pair.dim_minus) * (Fraction(1) / lam),
                   identity(pair.dim_plus) * lam)


def type_I_automorphism(p: int, a: np.ndarray, b: Optional[np.ndarray] = None) -> PairMap:
    """x -> B x A on V+, y -> B^-T y A^-T on V- for type I (p, q)."""
    a = exact_array(a)
    b = identity(p) if b is None else exact_array(b)
    a_inv, b_inv = inverse(a), inverse(b)
    return PairMap(kron(b_inv.T, a_inv), kron(b, a.T))


def _example_map(jtype: JordanType, n: int, scale: Scalar) -> PairMap:
    kind = PowerKind.ALT if jtype is JordanType.II else PowerKind.SYM
    source = matrix_basis(jtype, n)
    target = list(combinations(range(n), 2)) if kind is PowerKind.ALT \
        else list(combinations_with_replacement(range(n), 2))
    position = {u: r for r, u in enumerate(target)}
    f = zeros(len(target), len(source))
    for c, u in enumerate(source):
        f[position[u], c] = scale
    return PairMap(f, f.copy())


def example_map_II(n: int) -> PairMap:
    """E_ij - E_ji -> i e_i ^ e_j on both sides."""
    return _example_map(JordanType.II, n, gaussian_i())


def example_map_III(n: int) -> PairMap:
    """E_ij + E_ji -> e_i v e_j on both sides."""
    return _example_map(JordanType.III, n, 1)


def _verify_example(jtype: JordanType, n: int, expected: Scalar) -> Report:
    source = type_II(n) if jtype is JordanType.II else type_III(n)
    kind = PowerKind.ALT if jtype is JordanType.II else PowerKind.SYM
    f = example_map_II(n) if jtype is JordanType.II else example_map_III(n)
    target = tensor_shift(power_pair(kind, type_I(1, n), 2), EXAMPLE_SHIFT)
    report = Report(f"verify_example_{jtype.value}")
    for side, m in (("MINUS", f.minus), ("PLUS", f.plus)):
        report.tick()
        if m.shape[0] != m.shape[1] or rank(m) != m.shape[0]:
            report.fail("invertible", (side,))
    report.merge(check_hom(f, source, target))
    mu = check_similarity(f, source, target)
    report.tick()
    if mu != expected:
        report.fail("similarity", (), f"multiplier {mu}, expected {expected}")
    report.details.update({"multiplier": mu, "shift": (EXAMPLE_SHIFT.lam, int(EXAMPLE_SHIFT.a)), "n": n})
    if report.ok:
        logger.info("type %s, n = %d: isomorphism with the shifted power verified", jtype.value, n)
    else:
        logger.warning("type %s, n = %d: %d failures", jtype.value, n, report.failures)
    return report


def verify_example_II(n: int) -> Report:
    return _verify_example(JordanType.II, n, -1)


def verify_example_III(n: int) -> Report:
    return _verify_example(JordanType.III, n, Fraction(1, 2))
