"""Lie superalgebras, supermodules and metric forms as structure-constant data."""
from __future__ import annotations

import logging
from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.models.lie import LieSuperAlgebra, MetricLieSupermodule, SuperModule
from src.models.report import Report
from src.models.scalar import to_scalar
from src.models.superspace import SuperMatrix, SuperSpace, format_label
from src.types.enums import Parity, PowerKind, TensorMode
from src.types.errors import DimensionMismatchError
from src.utils.linalg import (
    ONE,
    block_diag,
    grids_equal,
    identity,
    matmul,
    rank,
    zeros,
)
from src.utils.superlinear import eta, parity_sum
from src.utils.superpowers import enum_entries, lift_on_slots, matrix_power, power_gram, power_parities

logger = logging.getLogger(__name__)


def _parity(p: int) -> Parity:
    return Parity(int(p) % 2)


def operators(module: SuperModule) -> np.ndarray:
    """Stack of action matrices in column convention, shape (dim L, dim M, dim M)."""
    return module.action.transpose(0, 2, 1)


# ------------------------------------------------------------------
# Axiom checkers
# ------------------------------------------------------------------

def check_lie(algebra: LieSuperAlgebra) -> Report:
    report = Report("check_lie")
    c = algebra.bracket
    p = algebra.parities
    d = algebra.dim
    for i, j, k in product(range(d), repeat=3):
        if c[i, j, k] != 0 and int(p[k]) != (int(p[i]) + int(p[j])) % 2:
            report.fail("parity", (i, j, k), "bracket does not add parities")
    for i, j in product(range(d), repeat=2):
        report.tick()
        if not grids_equal(c[i, j], -eta(p[i], p[j]) * c[j, i]):
            report.fail("anticommutativity", (i, j))
    for i, j, k in product(range(d), repeat=3):
        report.tick()
        lhs = np.dot(c[j, k], c[i])
        rhs = np.dot(c[i, j], c[:, k, :]) + eta(p[i], p[j]) * np.dot(c[i, k], c[j])
        if not grids_equal(lhs, rhs):
            report.fail("jacobi", (i, j, k))
    return report


def check_module(module: SuperModule) -> Report:
    report = Report("check_module")
    L = module.algebra
    c = L.bracket
    ops = operators(module)
    pl, pm = L.parities, module.parities
    for i, b, k in product(range(L.dim), range(module.dim), range(module.dim)):
        if module.action[i, b, k] != 0 and int(pm[k]) != (int(pl[i]) + int(pm[b])) % 2:
            report.fail("parity", (i, b, k), "action does not add parities")
    for i, j in product(range(L.dim), repeat=2):
        report.tick()
        lhs = np.tensordot(c[i, j], ops, axes=1) if L.dim else zeros(module.dim, module.dim)
        rhs = matmul(ops[i], ops[j]) - eta(pl[i], pl[j]) * matmul(ops[j], ops[i])
        if not grids_equal(lhs, rhs):
            report.fail("supermodule", (i, j))
    return report


def check_metric(algebra: LieSuperAlgebra, form: np.ndarray) -> Report:
    """Evenness, supersymmetry, invariance and nondegeneracy of b."""
    report = Report("check_metric")
    c = algebra.bracket
    p = algebra.parities
    d = algebra.dim
    if form.shape != (d, d):
        raise DimensionMismatchError(f"form of shape {form.shape} on an algebra of dimension {d}")
    for i, j in product(range(d), repeat=2):
        report.tick()
        if form[i, j] != 0 and int(p[i]) != int(p[j]):
            report.fail("even", (i, j))
        if form[i, j] != eta(p[i], p[j]) * form[j, i]:
            report.fail("supersymmetric", (i, j))
    for i, j, k in product(range(d), repeat=3):
        report.tick()
        if np.dot(c[i, j], form[:, k]) != np.dot(form[i], c[j, k]):
            report.fail("invariant", (i, j, k))
    if rank(form) != d:
        report.fail("nondegenerate", (), f"rank {rank(form)} < {d}")
    return report


def check_dual_pairing(module: SuperModule, dual: SuperModule, gram: Optional[np.ndarray] = None) -> Report:
    """<x.f, v> = -eta(x, f) <f, x.v> on all basis triples."""
    report = Report("check_dual_pairing")
    g = identity(module.dim) if gram is None else gram
    ops, dops = operators(module), operators(dual)
    pl, pf = module.algebra.parities, dual.parities
    for x in range(module.algebra.dim):
        lhs = matmul(dops[x].T, g)
        rhs = matmul(g, ops[x])
        for a, b in product(range(dual.dim), range(module.dim)):
            report.tick()
            if lhs[a, b] != -eta(pl[x], pf[a]) * rhs[a, b]:
                report.fail("dual_action", (x, a, b), f"{lhs[a, b]} vs {rhs[a, b]}")
    return report


def is_faithful(module: SuperModule) -> bool:
    if module.algebra.dim == 0:
        return True
    flat = np.array([list(module.action[x].ravel()) for x in range(module.algebra.dim)], dtype=object)
    return rank(flat) == module.algebra.dim


# ------------------------------------------------------------------
# Constructions
# ------------------------------------------------------------------

def dual_module(module: SuperModule) -> SuperModule:
    """Left-dual module: the negative supertranspose of every action matrix."""
    L = module.algebra
    d = module.dim
    action = zeros(L.dim, d, d)
    for x in range(L.dim):
        for a, c in product(range(d), repeat=2):
            value = module.action[x, c, a]
            if value != 0:
                action[x, a, c] = -eta(L.parities[x], module.parities[a]) * value
    labels = None if module.labels is None else tuple(f"{s}*" for s in module.labels)
    return SuperModule(L, module.parities, action, labels)


def direct_sum_algebras(algebras: Sequence[LieSuperAlgebra]) -> LieSuperAlgebra:
    total = sum(L.dim for L in algebras)
    bracket = zeros(total, total, total)
    offset = 0
    parities: List[Parity] = []
    labels: List[str] = []
    for n, L in enumerate(algebras):
        s = slice(offset, offset + L.dim)
        bracket[s, s, s] = L.bracket
        parities.extend(L.parities)
        names = L.labels or tuple(f"x{i + 1}" for i in range(L.dim))
        labels.extend(f"{lab}@{n + 1}" for lab in names)
        offset += L.dim
    return LieSuperAlgebra(tuple(parities), bracket, tuple(labels))


def orthogonal_sum(forms: Sequence[np.ndarray], scale: int = 1) -> np.ndarray:
    """Block-diagonal form; ``scale`` gives the n.b variant."""
    return block_diag(*forms) * scale if forms else zeros(0, 0)


def direct_sum_modules(modules: Sequence[SuperModule]) -> SuperModule:
    """M_1 + ... + M_n over L_1 + ... + L_n, L_i acting on M_i only."""
    algebra = direct_sum_algebras([m.algebra for m in modules])
    dim = sum(m.dim for m in modules)
    action = zeros(algebra.dim, dim, dim)
    xo = vo = 0
    parities: List[Parity] = []
    for m in modules:
        action[xo:xo + m.algebra.dim, vo:vo + m.dim, vo:vo + m.dim] = m.action
        parities.extend(m.parities)
        xo += m.algebra.dim
        vo += m.dim
    return SuperModule(algebra, tuple(parities), action)


def _tensor_labels(modules: Sequence[SuperModule], basis) -> Tuple[str, ...]:
    names = [m.labels or tuple(f"v{i + 1}" for i in range(m.dim)) for m in modules]
    return tuple("⊗".join(names[k][e] for k, e in enumerate(I)) for I in basis)


def tensor_basis(dims: Sequence[int]) -> List[Tuple[int, ...]]:
    return list(product(*(range(d) for d in dims)))


def tensor_modules(mode: TensorMode, modules: Sequence[SuperModule]) -> SuperModule:
    """Tensor superproduct with the Koszul sign prefix on each slot."""
    if not modules:
        raise DimensionMismatchError("tensor product of no modules")
    if mode is TensorMode.RESTRICTED:
        algebra = modules[0].algebra
        for m in modules[1:]:
            if m.algebra is not algebra and not (
                    m.algebra.parities == algebra.parities and grids_equal(m.algebra.bracket, algebra.bracket)):
                raise DimensionMismatchError("restricted tensor product needs a common algebra")
        owners = None
    else:
        algebra = direct_sum_algebras([m.algebra for m in modules])
        owners = []
        for slot, m in enumerate(modules):
            owners.extend([slot] * m.algebra.dim)
    basis = tensor_basis([m.dim for m in modules])
    position = {key: i for i, key in enumerate(basis)}
    parities = tuple(parity_sum([modules[k].parities[e] for k, e in enumerate(I)]) for I in basis)
    action = zeros(algebra.dim, len(basis), len(basis))
    offsets = []
    running = 0
    for m in modules:
        offsets.append(running)
        running += m.algebra.dim
    for x in range(algebra.dim):
        px = algebra.parities[x]
        slots = range(len(modules)) if owners is None else [owners[x]]
        for col, I in enumerate(basis):
            for k in slots:
                m = modules[k]
                lx = x if owners is None else x - offsets[k]
                prefix = 1
                for t in range(k):
                    prefix *= eta(px, modules[t].parities[I[t]])
                for target in range(m.dim):
                    coef = m.action[lx, I[k], target]
                    if coef != 0:
                        key = I[:k] + (target,) + I[k + 1:]
                        action[x, col, position[key]] += prefix * coef
    logger.debug("tensor module (%s) of dimension %d over algebra of dimension %d",
                 mode.value, len(basis), algebra.dim)
    return SuperModule(algebra, parities, action, _tensor_labels(modules, basis))


def tensor_pairing(grams: Sequence[np.ndarray], dual_parities: Sequence[Sequence[int]],
                   parities: Sequence[Sequence[int]]) -> np.ndarray:
    """<(x)f_i, (x)v_j> = prod_{a>b} eta(f_a, v_b) * prod_i <f_i, v_i>."""
    fbasis = tensor_basis([g.shape[0] for g in grams])
    vbasis = tensor_basis([g.shape[1] for g in grams])
    out = zeros(len(fbasis), len(vbasis))
    for r, F in enumerate(fbasis):
        for c, V in enumerate(vbasis):
            value = ONE
            for i, (a, b) in enumerate(zip(F, V)):
                value = value * grams[i][a, b]
                if value == 0:
                    break
            if value == 0:
                continue
            for a in range(len(F)):
                for b in range(a):
                    value *= eta(dual_parities[a][F[a]], parities[b][V[b]])
            out[r, c] = value
    return out


def power_module(kind: PowerKind, module: SuperModule, n: int) -> SuperModule:
    """Alternating or symmetric power of a module with a parity-ordered basis."""
    space = SuperSpace.from_parities(module.parities)
    basis = enum_entries(kind, space, n)
    ops = operators(module)
    L = module.algebra
    action = zeros(L.dim, len(basis), len(basis))
    for x in range(L.dim):
        action[x] = lift_on_slots(kind, ops[x], L.parities[x], basis, module.parities).T
    parities = tuple(_parity(p) for p in power_parities(kind, space, n))
    logger.debug("%s power %d of a module of dimension %d: dimension %d",
                 kind.value, n, module.dim, len(basis))
    return SuperModule(L, parities, action, tuple(format_label(I) for I in basis))


def power_pairing(kind: PowerKind, module: SuperModule, n: int,
                  gram: Optional[np.ndarray] = None) -> np.ndarray:
    """omega-weighted pairing between the power of the dual and the power of ``module``."""
    space = SuperSpace.from_parities(module.parities)
    g = identity(module.dim) if gram is None else gram
    return power_gram(kind, g, space, n, weighted=True)


# ------------------------------------------------------------------
# gl(m|n)
# ------------------------------------------------------------------

def gl_basis(m: int, n: int) -> List[Tuple[int, int]]:
    """Matrix units E_ij, even ones first, lexicographic inside each parity."""
    par = [0] * m + [1] * n
    units = list(product(range(m + n), repeat=2))
    return [u for u in units if par[u[0]] == par[u[1]]] + [u for u in units if par[u[0]] != par[u[1]]]


def general_linear(m: int, n: int) -> SuperModule:
    """gl(m|n) with its natural module (m|n)."""
    par = [0] * m + [1] * n
    basis = gl_basis(m, n)
    index = {u: i for i, u in enumerate(basis)}
    d = len(basis)
    parities = tuple(_parity(par[i] + par[j]) for i, j in basis)
    bracket = zeros(d, d, d)
    for (x, (i, j)), (y, (k, l)) in product(enumerate(basis), repeat=2):
        if j == k:
            bracket[x, y, index[(i, l)]] += ONE
        if l == i:
            bracket[x, y, index[(k, j)]] -= eta(parities[x], parities[y])
    labels = tuple(f"E{i + 1}{j + 1}" for i, j in basis)
    algebra = LieSuperAlgebra(parities, bracket, labels)
    action = zeros(d, m + n, m + n)
    for x, (i, j) in enumerate(basis):
        action[x, j, i] = ONE
    return SuperModule(algebra, tuple(_parity(p) for p in par), action,
                       tuple(f"v{i + 1}" for i in range(m + n)))


def supertrace_form(m: int, n: int, scale=1) -> np.ndarray:
    """b(x, y) = scale * str(xy) on the basis of gl_basis(m, n)."""
    par = [0] * m + [1] * n
    basis = gl_basis(m, n)
    d = len(basis)
    form = zeros(d, d)
    for (x, (i, j)), (y, (k, l)) in product(enumerate(basis), repeat=2):
        if j == k and l == i:
            form[x, y] = to_scalar(scale) * (-1 if par[i] else 1)
    return form


def metric_general_linear(m: int, n: int, scale=1) -> MetricLieSupermodule:
    return MetricLieSupermodule(general_linear(m, n), supertrace_form(m, n, scale))


# ------------------------------------------------------------------
# Automorphisms
# ------------------------------------------------------------------

def check_module_automorphism(phi: np.ndarray, h: np.ndarray, module: SuperModule) -> Report:
    """phi is a Lie automorphism and h(x.v) = phi(x).h(v)."""
    report = Report("check_module_automorphism")
    L = module.algebra
    c = L.bracket
    ops = operators(module)
    for x, y in product(range(L.dim), repeat=2):
        report.tick()
        lhs = matmul(phi, c[x, y].reshape(-1, 1)).ravel() if L.dim else zeros(0)
        rhs = np.tensordot(np.tensordot(phi[:, x], c, axes=1), phi[:, y], axes=([0], [0]))
        if not grids_equal(lhs, rhs):
            report.fail("algebra_automorphism", (x, y))
    for x in range(L.dim):
        report.tick()
        lhs = matmul(h, ops[x])
        rhs = matmul(np.tensordot(phi[:, x], ops, axes=1), h)
        if not grids_equal(lhs, rhs):
            report.fail("intertwining", (x,))
    return report


def transport_automorphism(kind: PowerKind, phi: np.ndarray, h: np.ndarray,
                           module: SuperModule, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """(phi, h) on M gives (phi, h^{power n}) on the power module."""
    space = SuperSpace.from_parities(module.parities)
    return phi, matrix_power(kind, SuperMatrix(space, space, h), n)
