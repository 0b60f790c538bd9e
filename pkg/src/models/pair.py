from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from src.models.scalar import Scalar
from src.types.enums import Parity, Side
from src.types.errors import DimensionMismatchError


@dataclass
class TriplePair:
    """Trilinear superpair as coefficient tensors.

    prod_minus[x, y, z, w]: coefficient of basis w of V- in {x, y, z}-, x, z in V-, y in V+.
    prod_plus[x, y, z, w]: coefficient of basis w of V+ in {x, y, z}+, x, z in V+, y in V-.
    """
    minus_parities: Tuple[Parity, ...]
    plus_parities: Tuple[Parity, ...]
    prod_minus: np.ndarray
    prod_plus: np.ndarray
    minus_labels: Optional[Tuple[str, ...]] = None
    plus_labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        m, p = len(self.minus_parities), len(self.plus_parities)
        if self.prod_minus.shape != (m, p, m, m) or self.prod_plus.shape != (p, m, p, p):
            raise DimensionMismatchError(
                f"product tensors {self.prod_minus.shape}/{self.prod_plus.shape} for dimensions {m}, {p}")

    @property
    def dim_minus(self) -> int:
        return len(self.minus_parities)

    @property
    def dim_plus(self) -> int:
        return len(self.plus_parities)

    def parities(self, side: Side) -> Tuple[Parity, ...]:
        return self.minus_parities if side is Side.MINUS else self.plus_parities

    def product(self, side: Side) -> np.ndarray:
        return self.prod_minus if side is Side.MINUS else self.prod_plus

    def labels(self, side: Side) -> Tuple[str, ...]:
        given = self.minus_labels if side is Side.MINUS else self.plus_labels
        if given is not None:
            return given
        return tuple(f"e{i + 1}" for i in range(len(self.parities(side))))


@dataclass
class MetricPair(TriplePair):
    """Trilinear superpair with a pairing V- x V+ -> F, gram[f, v]."""
    gram: np.ndarray = field(kw_only=True)

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.gram.shape != (self.dim_minus, self.dim_plus):
            raise DimensionMismatchError(
                f"gram of shape {self.gram.shape} for dimensions {self.dim_minus}, {self.dim_plus}")


@dataclass
class InnerDerivation:
    """Operator pair (on V-, on V+) of a fixed parity."""
    minus: np.ndarray
    plus: np.ndarray
    parity: Parity

    def component(self, side: Side) -> np.ndarray:
        return self.minus if side is Side.MINUS else self.plus

    def flat(self) -> np.ndarray:
        return np.concatenate([self.minus.ravel(), self.plus.ravel()])


@dataclass(frozen=True)
class ShiftParam:
    lam: Scalar
    a: Parity = Parity.EVEN


@dataclass
class PairMap:
    """(f-, f+) between the minus and plus spaces of two pairs."""
    minus: np.ndarray
    plus: np.ndarray

    def component(self, side: Side) -> np.ndarray:
        return self.minus if side is Side.MINUS else self.plus
