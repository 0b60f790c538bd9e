"""Power pairs through the Faulkner route, independent of the closed forms.

pair -> (instr V, V+, b) -> power of the module and of its dual -> Faulkner.
"""
from __future__ import annotations

import logging
from typing import Sequence

from src.models.lie import MetricLieSupermodule
from src.models.pair import MetricPair
from src.models.superspace import SuperSpace
from src.types.enums import PowerKind, TensorMode
from src.types.errors import DimensionMismatchError
from src.utils.jordan import faulkner_from_module, module_from_pair, parity_ordered
from src.utils.liesuper import orthogonal_sum, power_module, tensor_modules, tensor_pairing
from src.utils.superpowers import power_gram

logger = logging.getLogger(__name__)


def oracle_power_pair(kind: PowerKind, pair: MetricPair, n: int) -> MetricPair:
    if n < 1:
        raise DimensionMismatchError(f"power degree {n} must be positive")
    if kind is not PowerKind.TENSOR:
        pair = parity_ordered(pair)
    ml = module_from_pair(pair)
    if kind is PowerKind.TENSOR:
        module = tensor_modules(TensorMode.RESTRICTED, [ml.module] * n)
        dual = tensor_modules(TensorMode.RESTRICTED, [ml.dual] * n)
        gram = tensor_pairing([pair.gram] * n, [pair.minus_parities] * n, [pair.plus_parities] * n)
    else:
        module = power_module(kind, ml.module, n)
        dual = power_module(kind, ml.dual, n)
        gram = power_gram(kind, pair.gram, SuperSpace.from_parities(pair.plus_parities), n, weighted=True)
    logger.debug("oracle %s power %d: instr of dimension %d", kind.value, n, ml.algebra.dim)
    return faulkner_from_module(MetricLieSupermodule(module, ml.form, dual=dual, duality=gram))


def oracle_tensor_product(pairs: Sequence[MetricPair]) -> MetricPair:
    if not pairs:
        raise DimensionMismatchError("tensor product of no pairs")
    mls = [module_from_pair(p) for p in pairs]
    module = tensor_modules(TensorMode.GENERAL, [m.module for m in mls])
    dual = tensor_modules(TensorMode.GENERAL, [m.dual for m in mls])
    gram = tensor_pairing([p.gram for p in pairs], [p.minus_parities for p in pairs],
                          [p.plus_parities for p in pairs])
    form = orthogonal_sum([m.form for m in mls])
    logger.debug("oracle tensor product of %d pairs", len(pairs))
    return faulkner_from_module(MetricLieSupermodule(module, form, dual=dual, duality=gram))
