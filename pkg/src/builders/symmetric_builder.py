from __future__ import annotations

import numpy as np

from src.builders.superpower_builder import SuperpowerBuilder
from src.models.scalar import Scalar
from src.types.enums import PowerKind
from src.utils.superlinear import perdet


class SymmetricBuilder(SuperpowerBuilder):
    """Symmetric superpower of a metric pair."""

    kind = PowerKind.SYM

    def power_sign(self, p: int, q: int, n: int, i: int, j: int) -> int:
        self._check_sign_args(p, q, n, i, j)
        if i <= p and j <= q:
            return 1
        if i <= p:
            return (-1) ** (j + n)
        if j <= q:
            return (-1) ** (i + n)
        return (-1) ** (i + j)

    def minor_value(self, k: int, block: np.ndarray) -> Scalar:
        return perdet(k, block)
