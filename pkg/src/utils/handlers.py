from src.builders.alternating_builder import AlternatingBuilder
from src.builders.power_builder_base import PowerBuilderBase
from src.builders.symmetric_builder import SymmetricBuilder
from src.builders.tensor_builder import TensorBuilder
from src.models.pair import InnerDerivation, MetricPair, PairMap
from src.types.enums import PowerKind, TensorMode
from src.types.errors import ConsistencyFailure, DimensionMismatchError, NotAutomorphismError
from src.utils.jordan import is_automorphism, parity_ordered
from typing import List, Sequence, Tuple
import logging

_alternating_builder = AlternatingBuilder()
_symmetric_builder = SymmetricBuilder()
_restricted_builder = TensorBuilder(TensorMode.RESTRICTED)
_general_builder = TensorBuilder(TensorMode.GENERAL)


def _builder(kind: PowerKind) -> PowerBuilderBase:
    """
    Route a power kind to its module-level singleton builder.
    """
    if kind is PowerKind.ALT:
        return _alternating_builder
    if kind is PowerKind.SYM:
        return _symmetric_builder
    if kind is PowerKind.TENSOR:
        return _restricted_builder
    raise ValueError(f"Unknown power kind: {kind}")


def _factors(kind: PowerKind, pair: MetricPair, n: int) -> List[MetricPair]:
    if n < 1:
        raise DimensionMismatchError(f"power degree {n} must be positive")
    if kind is not PowerKind.TENSOR:
        pair = parity_ordered(pair)
    return [pair] * n


def power_sign(kind: PowerKind, p: int, q: int, n: int, i: int, j: int) -> int:
    if kind is PowerKind.ALT:
        return _alternating_builder.power_sign(p, q, n, i, j)
    if kind is PowerKind.SYM:
        return _symmetric_builder.power_sign(p, q, n, i, j)
    raise ValueError(f"power_sign needs ALT or SYM, got {kind}")


def power_pair(kind: PowerKind, pair: MetricPair, n: int) -> MetricPair:
    """
    Closed-form n-th power of a metric pair; TENSOR gives the restricted tensor superpower.
    """
    return _builder(kind).build(_factors(kind, pair, n))


def restricted_tensor_power(pair: MetricPair, n: int) -> MetricPair:
    return power_pair(PowerKind.TENSOR, pair, n)


def general_tensor_product(pairs: Sequence[MetricPair]) -> MetricPair:
    if not pairs:
        raise DimensionMismatchError("tensor product of no pairs")
    return _general_builder.build(list(pairs))


def power_bracket(kind: PowerKind, pair: MetricPair, I: Tuple[int, ...],
                  J: Tuple[int, ...]) -> List[Tuple[object, int, int]]:
    """
    [F, V] on the power as (coefficient, i, j) terms standing for [f_{I_i}, v_{J_j}].
    """
    if len(I) != len(J):
        raise DimensionMismatchError(f"index tuples of lengths {len(I)} and {len(J)}")
    return _builder(kind).bracket_terms(_factors(kind, pair, len(I)), tuple(I), tuple(J))


def power_nu(kind: PowerKind, pair: MetricPair, I: Tuple[int, ...], J: Tuple[int, ...]) -> InnerDerivation:
    if len(I) != len(J):
        raise DimensionMismatchError(f"index tuples of lengths {len(I)} and {len(J)}")
    return _builder(kind).power_nu(_factors(kind, pair, len(I)), tuple(I), tuple(J))


def lift_automorphism(kind: PowerKind, pair: MetricPair, phi: PairMap, n: int) -> PairMap:
    """
    Lift an automorphism of ``pair`` to its n-th power and verify the lift.

    The pair is expected parity-ordered for ALT/SYM, since phi is given in its basis.
    """
    if not is_automorphism(phi, pair):
        raise NotAutomorphismError("map is not an automorphism of the metric pair")
    builder = _builder(kind)
    factors = _factors(kind, pair, n)
    if factors[0] is not pair:
        raise DimensionMismatchError("lifting needs a parity-ordered pair")
    lifted = builder.lift(factors, [phi] * n)
    power = builder.build(factors)
    if not is_automorphism(lifted, power):
        logging.error(f"lift of an automorphism to the {kind.value} power {n} is not an automorphism")
        raise ConsistencyFailure(f"lifted map fails on the {kind.value} power {n}")
    return lifted
