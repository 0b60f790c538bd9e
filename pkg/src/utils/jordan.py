"""Generalized Jordan superpairs: products, axioms, inner derivations, the
tensor shift and the Faulkner construction in both directions."""
from __future__ import annotations

import logging
from itertools import product
from typing import Dict, List, Optional, Sequence

import numpy as np

from src.models.lie import LieSuperAlgebra, MetricLieSupermodule, SuperModule
from src.models.pair import InnerDerivation, MetricPair, PairMap, ShiftParam, TriplePair
from src.models.report import Report
from src.models.scalar import Scalar, to_scalar
from src.types.enums import Parity, Side
from src.types.errors import ConsistencyFailure, DimensionMismatchError, SideError
from src.utils.linalg import (
    ONE,
    ZERO,
    coordinates_many,
    grids_equal,
    identity,
    independent_subset,
    inverse,
    matmul,
    rank,
    zeros,
)
from src.utils.liesuper import check_metric, dual_module, operators
from src.utils.superlinear import eta, eta3, is_even

logger = logging.getLogger(__name__)


def _p(x) -> int:
    return int(x) & 1


def vector_parity(vec: np.ndarray, parities: Sequence[int]) -> Parity:
    """Parity of a homogeneous coordinate vector (EVEN for zero)."""
    support = {_p(parities[i]) for i, c in enumerate(vec) if c != 0}
    if len(support) > 1:
        raise ValueError("vector is not homogeneous")
    return Parity(support.pop()) if support else Parity.EVEN


def basis_vector(dim: int, index: int) -> np.ndarray:
    out = zeros(dim)
    out[index] = ONE
    return out


# ------------------------------------------------------------------
# Products
# ------------------------------------------------------------------

def _check_args(pair: TriplePair, side: Side, *vectors: np.ndarray) -> None:
    same = len(pair.parities(side))
    other = len(pair.parities(side.opposite))
    for pos, (vec, expected) in enumerate(zip(vectors, (same, other, same))):
        if len(vec) != expected:
            raise SideError(
                f"argument {pos + 1} of the {side.name.lower()} product has length {len(vec)}, "
                f"expected {expected}")


def triple(pair: TriplePair, side: Side, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
    """{x, y, z}^side with x, z in V^side and y in V^-side."""
    _check_args(pair, side, x, y, z)
    prod = pair.product(side)
    if prod.size == 0:
        return zeros(prod.shape[-1])
    t = np.tensordot(x, prod, axes=1)
    t = np.tensordot(y, t, axes=1)
    return np.dot(z, t)


def D_op(pair: TriplePair, side: Side, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Matrix of z -> {x, y, z}^side."""
    _check_args(pair, side, x, y)
    ops = d_operators(pair, side)
    if ops.size == 0:
        d = len(pair.parities(side))
        return zeros(d, d)
    return np.tensordot(y, np.tensordot(x, ops, axes=1), axes=1)


def d_operators(pair: TriplePair, side: Side) -> np.ndarray:
    """D[a, b] = matrix of D^side_{a, b} on basis elements."""
    return pair.product(side).transpose(0, 1, 3, 2)


# ------------------------------------------------------------------
# Axioms
# ------------------------------------------------------------------

def _check_parity(pair: TriplePair, side: Side, report: Report) -> None:
    prod = pair.product(side)
    ps, po = pair.parities(side), pair.parities(side.opposite)
    for (x, y, z, w), value in np.ndenumerate(prod):
        if value != 0 and (_p(ps[x]) + _p(po[y]) + _p(ps[z])) % 2 != _p(ps[w]):
            report.fail(f"parity{side.name.lower()}", (x, y, z, w))


def _check_gjsp(pair: TriplePair, side: Side, report: Report) -> None:
    D = d_operators(pair, side)
    Dopp = d_operators(pair, side.opposite)
    ps, po = pair.parities(side), pair.parities(side.opposite)
    ds, do = len(ps), len(po)
    for x, y in product(range(ds), range(do)):
        A = D[x, y]
        pa = _p(ps[x]) + _p(po[y])
        for z, w in product(range(ds), range(do)):
            report.tick()
            B = D[z, w]
            lhs = matmul(A, B) - eta(pa, _p(ps[z]) + _p(po[w])) * matmul(B, A)
            first = np.tensordot(A[:, z], D[:, w], axes=1)
            second = np.tensordot(Dopp[y, x][:, w], D[z], axes=1)
            rhs = first - eta3(ps[x], po[y], ps[z]) * second
            if not grids_equal(lhs, rhs):
                report.fail(f"gjsp{side.name.lower()}", (x, y, z, w))


def _check_metric_pair(pair: MetricPair, report: Report) -> None:
    G = pair.gram
    pm, pp = pair.minus_parities, pair.plus_parities
    dm, dp = len(pm), len(pp)
    for a, b in product(range(dm), range(dp)):
        if G[a, b] != 0 and _p(pm[a]) != _p(pp[b]):
            report.fail("even_pairing", (a, b))
    if dm != dp or rank(G) != dm:
        report.fail("nondegenerate", (), f"pairing of shape {G.shape} has rank {rank(G)}")
    Pm, Pp = pair.prod_minus, pair.prod_plus
    for x, y, z, w in product(range(dm), range(dp), range(dm), range(dp)):
        report.tick()
        left = np.dot(Pm[x, y, z], G[:, w])
        if left != eta3(pm[x], pp[y], pm[z]) * np.dot(G[z], Pp[y, x, w]):
            report.fail("superinvariant", (x, y, z, w))
        sign = eta(_p(pm[x]) + _p(pp[y]), _p(pm[z]) + _p(pp[w]))
        if left != sign * np.dot(Pm[z, w, x], G[:, y]):
            report.fail("supersymmetric", (x, y, z, w))
        if np.dot(G[x], Pp[y, z, w]) != sign * np.dot(G[z], Pp[w, x, y]):
            report.fail("supersymmetric_plus", (x, y, z, w))


def check_pair(pair: TriplePair) -> Report:
    """Exhaustive check of the superpair identity and, for metric pairs, the pairing axioms."""
    report = Report("check_pair")
    for side in (Side.MINUS, Side.PLUS):
        _check_parity(pair, side, report)
        _check_gjsp(pair, side, report)
    if isinstance(pair, MetricPair):
        _check_metric_pair(pair, report)
    if report.ok:
        logger.info("pair of dimensions %d/%d passes %d checks",
                    pair.dim_minus, pair.dim_plus, report.checked)
    else:
        logger.warning("pair check failed: %d violations (%s)",
                       report.failures, ", ".join(report.axioms_failed()))
    return report


# ------------------------------------------------------------------
# Inner derivations
# ------------------------------------------------------------------

def nu(pair: TriplePair, f: np.ndarray, v: np.ndarray) -> InnerDerivation:
    """nu(f, v) = (D-_{f,v}, -eta(f, v) D+_{v,f})."""
    pf = vector_parity(f, pair.minus_parities)
    pv = vector_parity(v, pair.plus_parities)
    minus = D_op(pair, Side.MINUS, f, v)
    plus = -eta(pf, pv) * D_op(pair, Side.PLUS, v, f)
    return InnerDerivation(minus, plus, pf + pv)


def nu_reversed(pair: TriplePair, v: np.ndarray, f: np.ndarray) -> InnerDerivation:
    """nu(v, f) := -eta(f, v) nu(f, v)."""
    d = nu(pair, f, v)
    sign = -eta(vector_parity(f, pair.minus_parities), vector_parity(v, pair.plus_parities))
    return InnerDerivation(sign * d.minus, sign * d.plus, d.parity)


def nu_basis(pair: TriplePair, a: int, b: int) -> InnerDerivation:
    return nu(pair, basis_vector(pair.dim_minus, a), basis_vector(pair.dim_plus, b))


def _instr_span(pair: TriplePair):
    gens = list(product(range(pair.dim_minus), range(pair.dim_plus)))
    candidates = [nu_basis(pair, a, b) for a, b in gens]
    chosen = independent_subset(c.flat() for c in candidates)
    basis = [candidates[i] for i in chosen]
    flats = [d.flat() for d in basis]
    coords = dict(zip(gens, coordinates_many(flats, [c.flat() for c in candidates])))
    return basis, [gens[i] for i in chosen], coords


def instr_basis(pair: TriplePair) -> List[InnerDerivation]:
    """First-come independent subset of nu(basis f, basis v)."""
    return _instr_span(pair)[0]


def check_derivation(pair: TriplePair, d: InnerDerivation) -> Report:
    """Superderivation law of ``d`` on all basis triples."""
    report = Report("check_derivation")
    pd = _p(d.parity)
    for side in (Side.MINUS, Side.PLUS):
        prod = pair.product(side)
        ps, po = pair.parities(side), pair.parities(side.opposite)
        Ds, Do = d.component(side), d.component(side.opposite)
        for x, y, z in product(range(len(ps)), range(len(po)), range(len(ps))):
            report.tick()
            lhs = matmul(Ds, prod[x, y, z].reshape(-1, 1)).ravel()
            ex, ey, ez = (basis_vector(len(ps), x), basis_vector(len(po), y),
                          basis_vector(len(ps), z))
            rhs = (triple(pair, side, Ds[:, x], ey, ez)
                   + eta(pd, ps[x]) * triple(pair, side, ex, Do[:, y], ez)
                   + eta(pd, _p(ps[x]) + _p(po[y])) * triple(pair, side, ex, ey, Ds[:, z]))
            if not grids_equal(lhs, rhs):
                report.fail(f"derivation{side.name.lower()}", (x, y, z))
    return report


# ------------------------------------------------------------------
# Small pairs and basis changes
# ------------------------------------------------------------------

def zero_pair(parities: Sequence[int]) -> MetricPair:
    """Pair with vanishing products and the identity pairing."""
    pars = tuple(Parity(_p(p)) for p in parities)
    d = len(pars)
    return MetricPair(pars, pars, zeros(d, d, d, d), zeros(d, d, d, d), gram=identity(d))


def unit_pair() -> MetricPair:
    pair = zero_pair([Parity.EVEN])
    pair.minus_labels = pair.plus_labels = ("u",)
    return pair


def tensor_shift(pair: MetricPair, shift: ShiftParam) -> MetricPair:
    """Tensor with the 1-dimensional pair of parameter (lam, a).

    Signs use the parities before the shift.
    """
    lam = to_scalar(shift.lam)
    a = _p(shift.a)
    pm, pp = pair.minus_parities, pair.plus_parities
    dm, dp = len(pm), len(pp)
    ea = eta(a, a)
    G = pair.gram
    gram = zeros(dm, dp)
    for f, v in product(range(dm), range(dp)):
        gram[f, v] = ea * eta(a, pm[f]) * G[f, v]
    prod_minus = pair.prod_minus.copy()
    for x, y, z in product(range(dm), range(dp), range(dm)):
        if G[x, y] != 0:
            prod_minus[x, y, z, z] += lam * G[x, y]
        prod_minus[x, y, z] = ea * eta(a, pp[y]) * prod_minus[x, y, z]
    prod_plus = pair.prod_plus.copy()
    for x, y, z in product(range(dp), range(dm), range(dp)):
        if G[y, x] != 0:
            prod_plus[x, y, z, z] += lam * eta(pm[y], pp[x]) * G[y, x]
        prod_plus[x, y, z] = eta(a, pm[y]) * prod_plus[x, y, z]
    shifted = lambda ps: tuple(Parity((_p(p) + a) % 2) for p in ps)
    logger.debug("tensor shift by (%s, %d)", lam, a)
    return MetricPair(shifted(pm), shifted(pp), prod_minus, prod_plus,
                      pair.minus_labels, pair.plus_labels, gram=gram)


def one_dim_pair(shift: ShiftParam) -> MetricPair:
    return tensor_shift(unit_pair(), shift)


def _reindex(pair: MetricPair, pm: Sequence[int], pp: Sequence[int]) -> MetricPair:
    pm, pp = list(pm), list(pp)
    relabel = lambda labels, order: None if labels is None else tuple(labels[i] for i in order)
    return MetricPair(
        tuple(pair.minus_parities[i] for i in pm),
        tuple(pair.plus_parities[i] for i in pp),
        pair.prod_minus[np.ix_(pm, pp, pm, pm)],
        pair.prod_plus[np.ix_(pp, pm, pp, pp)],
        relabel(pair.minus_labels, pm),
        relabel(pair.plus_labels, pp),
        gram=pair.gram[np.ix_(pm, pp)],
    )


def is_parity_ordered(parities: Sequence[int]) -> bool:
    return all(_p(a) <= _p(b) for a, b in zip(parities, parities[1:]))


def parity_ordered(pair: MetricPair) -> MetricPair:
    """Same pair with both bases stably reordered evens first."""
    if is_parity_ordered(pair.minus_parities) and is_parity_ordered(pair.plus_parities):
        return pair
    logger.warning("reordering a pair basis to parity order")
    order = lambda ps: sorted(range(len(ps)), key=lambda i: _p(ps[i]))
    return _reindex(pair, order(pair.minus_parities), order(pair.plus_parities))


def _change_basis(tensor: np.ndarray, mats: Sequence[np.ndarray]) -> np.ndarray:
    out = tensor
    for m in mats:
        out = np.tensordot(out, m, axes=([0], [0]))
    return out


def transport_pair(pair: MetricPair, phi: PairMap) -> MetricPair:
    """The pair making ``phi`` an isometric isomorphism from ``pair``."""
    inv_m, inv_p = inverse(phi.minus), inverse(phi.plus)
    prod_minus = _change_basis(pair.prod_minus, (inv_m, inv_p, inv_m, phi.minus.T))
    prod_plus = _change_basis(pair.prod_plus, (inv_p, inv_m, inv_p, phi.plus.T))
    gram = matmul(matmul(inv_m.T, pair.gram), inv_p)
    return MetricPair(pair.minus_parities, pair.plus_parities, prod_minus, prod_plus,
                      pair.minus_labels, pair.plus_labels, gram=gram)


def pairs_equal(a: TriplePair, b: TriplePair) -> bool:
    if tuple(map(_p, a.minus_parities)) != tuple(map(_p, b.minus_parities)):
        return False
    if tuple(map(_p, a.plus_parities)) != tuple(map(_p, b.plus_parities)):
        return False
    if not (grids_equal(a.prod_minus, b.prod_minus) and grids_equal(a.prod_plus, b.prod_plus)):
        return False
    if isinstance(a, MetricPair) != isinstance(b, MetricPair):
        return False
    return not isinstance(a, MetricPair) or grids_equal(a.gram, b.gram)


def pair_difference(a: MetricPair, b: MetricPair) -> Dict[str, int]:
    """Number of differing coefficients per component (shapes must agree)."""
    count = lambda x, y: sum(1 for p, q in zip(x.flat, y.flat) if p != q)
    return {
        "prodMinus": count(a.prod_minus, b.prod_minus),
        "prodPlus": count(a.prod_plus, b.prod_plus),
        "gram": count(a.gram, b.gram),
    }


# ------------------------------------------------------------------
# Homomorphisms
# ------------------------------------------------------------------

def check_hom(f: PairMap, source: TriplePair, target: TriplePair) -> Report:
    """f^s({x,y,z}) = {f^s x, f^-s y, f^s z} on all basis triples."""
    report = Report("check_hom")
    for side in (Side.MINUS, Side.PLUS):
        fs, fo = f.component(side), f.component(side.opposite)
        if fs.shape != (len(target.parities(side)), len(source.parities(side))):
            raise DimensionMismatchError(f"map of shape {fs.shape} on the {side.name.lower()} side")
        if not is_even(fs, target.parities(side), source.parities(side)):
            report.fail("even_map", (side.name,))
        prod = source.product(side)
        ps, po = source.parities(side), source.parities(side.opposite)
        for x, y, z in product(range(len(ps)), range(len(po)), range(len(ps))):
            report.tick()
            lhs = matmul(fs, prod[x, y, z].reshape(-1, 1)).ravel()
            rhs = triple(target, side, fs[:, x], fo[:, y], fs[:, z])
            if not grids_equal(lhs, rhs):
                report.fail(f"hom{side.name.lower()}", (x, y, z))
    return report


def check_similarity(f: PairMap, source: MetricPair, target: MetricPair) -> Optional[Scalar]:
    """The unique mu with <f- x, f+ y> = mu <x, y>, or None."""
    pulled = matmul(matmul(f.minus.T, target.gram), f.plus)
    G = source.gram
    mu = None
    for (a, b), value in np.ndenumerate(G):
        if value != 0:
            mu = to_scalar(pulled[a, b]) / to_scalar(value)
            break
    if mu is None or not grids_equal(pulled, G * mu):
        return None
    return mu


def is_automorphism(f: PairMap, pair: MetricPair) -> bool:
    return check_hom(f, pair, pair).ok and check_similarity(f, pair, pair) == 1


# ------------------------------------------------------------------
# Faulkner construction
# ------------------------------------------------------------------

def faulkner_from_module(ml: MetricLieSupermodule) -> MetricPair:
    """Metric pair (M*, M) of a metric Lie supermodule.

    [f, v] solves b(x, [f, v]) = <x.f, v>; then {f, v, g}- = [f, v].g and
    {v, f, w}+ = -eta(f, v) [f, v].w.
    """
    module = ml.module
    dual = ml.dual if ml.dual is not None else dual_module(module)
    G = ml.duality if ml.duality is not None else identity(module.dim)
    L = module.algebra
    dm, dp = dual.dim, module.dim
    pm, pp = dual.parities, module.parities
    if L.dim == 0:
        return MetricPair(pm, pp, zeros(dm, dp, dm, dm), zeros(dp, dm, dp, dp),
                          dual.labels, module.labels, gram=G.copy())
    b_inv = inverse(ml.form)
    ops, dops = operators(module), operators(dual)
    rhs = zeros(L.dim, dm, dp)
    for i in range(L.dim):
        rhs[i] = matmul(dops[i].T, G)
    coef = np.tensordot(b_inv, rhs, axes=1)
    prod_minus = np.tensordot(coef, dops, axes=([0], [0])).transpose(0, 1, 3, 2)
    acted = np.tensordot(coef, ops, axes=([0], [0]))
    prod_plus = acted.transpose(1, 0, 3, 2).copy()
    for b, a in product(range(dp), range(dm)):
        prod_plus[b, a] = -eta(pm[a], pp[b]) * prod_plus[b, a]
    logger.debug("Faulkner construction on L of dimension %d, M of dimension %d", L.dim, dp)
    return MetricPair(pm, pp, prod_minus, prod_plus, dual.labels, module.labels, gram=G.copy())


def module_from_pair(pair: MetricPair) -> MetricLieSupermodule:
    """(instr V, V+, b) with V- as the explicit dual module.

    Raises ConsistencyFailure when the bracket does not close or b is not
    well defined, nondegenerate, invariant and supersymmetric.
    """
    basis, gens, coords = _instr_span(pair)
    d = len(basis)
    flats = [x.flat() for x in basis]
    parities = tuple(x.parity for x in basis)
    bracket = zeros(d, d, d)
    pairs = list(product(range(d), repeat=2))
    comms = []
    for i, j in pairs:
        s = eta(parities[i], parities[j])
        comms.append(InnerDerivation(
            matmul(basis[i].minus, basis[j].minus) - s * matmul(basis[j].minus, basis[i].minus),
            matmul(basis[i].plus, basis[j].plus) - s * matmul(basis[j].plus, basis[i].plus),
            parities[i] + parities[j],
        ).flat())
    for (i, j), c in zip(pairs, coordinates_many(flats, comms)):
        if c is None:
            logger.error("bracket of instr generators %d, %d leaves the span", i, j)
            raise ConsistencyFailure(f"bracket of generators {i}, {j} does not close")
        bracket[i, j] = c
    algebra = LieSuperAlgebra(parities, bracket, tuple(f"nu{a + 1},{b + 1}" for a, b in gens))
    module = SuperModule(algebra, pair.plus_parities,
                         np.array([x.plus.T for x in basis], dtype=object).reshape(d, pair.dim_plus, pair.dim_plus),
                         pair.plus_labels)
    dual = SuperModule(algebra, pair.minus_parities,
                       np.array([x.minus.T for x in basis], dtype=object).reshape(d, pair.dim_minus, pair.dim_minus),
                       pair.minus_labels)
    G = pair.gram
    value = lambda a, b, c, e: np.dot(pair.prod_minus[a, b, c], G[:, e])
    form = zeros(d, d)
    for i, j in product(range(d), repeat=2):
        form[i, j] = value(gens[i][0], gens[i][1], gens[j][0], gens[j][1])
    for (a, b), (c, e) in product(coords, repeat=2):
        expected = np.dot(coords[(a, b)], np.dot(form, coords[(c, e)])) if d else ZERO
        if value(a, b, c, e) != expected:
            logger.error("b is not well defined on nu(%d,%d), nu(%d,%d)", a, b, c, e)
            raise ConsistencyFailure(f"b(nu({a + 1},{b + 1}), nu({c + 1},{e + 1})) is not well defined")
    report = check_metric(algebra, form)
    if not report.ok:
        logger.error("induced form fails %s", ", ".join(report.axioms_failed()))
        raise ConsistencyFailure(f"induced form fails: {', '.join(report.axioms_failed())}")
    return MetricLieSupermodule(module, form, dual=dual, duality=G.copy())
