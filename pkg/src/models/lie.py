from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from src.types.enums import Parity
from src.types.errors import DimensionMismatchError


@dataclass
class LieSuperAlgebra:
    """Structure constants: [x_i, x_j] = sum_k bracket[i, j, k] x_k."""
    parities: Tuple[Parity, ...]
    bracket: np.ndarray
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        d = len(self.parities)
        if self.bracket.shape != (d, d, d):
            raise DimensionMismatchError(f"bracket tensor {self.bracket.shape} for dimension {d}")

    @property
    def dim(self) -> int:
        return len(self.parities)


@dataclass
class SuperModule:
    """Action tensor: x_i . v_b = sum_c action[i, b, c] v_c."""
    algebra: LieSuperAlgebra
    parities: Tuple[Parity, ...]
    action: np.ndarray
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        d = len(self.parities)
        if self.action.shape != (self.algebra.dim, d, d):
            raise DimensionMismatchError(
                f"action tensor {self.action.shape} for algebra {self.algebra.dim}, module {d}")

    @property
    def dim(self) -> int:
        return len(self.parities)

    def operator(self, x: int) -> np.ndarray:
        """Matrix of x_i in column convention."""
        return self.action[x].T


@dataclass
class MetricLieSupermodule:
    """(L, M, b), optionally with an explicit dual module and its duality Gram."""
    module: SuperModule
    form: np.ndarray
    dual: Optional[SuperModule] = field(default=None)
    duality: Optional[np.ndarray] = field(default=None)

    @property
    def algebra(self) -> LieSuperAlgebra:
        return self.module.algebra
