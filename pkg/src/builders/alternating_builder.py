from __future__ import annotations

import numpy as np

from src.builders.superpower_builder import SuperpowerBuilder
from src.models.scalar import Scalar
from src.types.enums import PowerKind
from src.utils.superlinear import detper


class AlternatingBuilder(SuperpowerBuilder):
    """Alternating superpower of a metric pair."""

    kind = PowerKind.ALT

    def power_sign(self, p: int, q: int, n: int, i: int, j: int) -> int:
        self._check_sign_args(p, q, n, i, j)
        if i <= p and j <= q:
            return (-1) ** (i + j)
        if i <= p:
            return (-1) ** (i + n)
        if j <= q:
            return (-1) ** (j + n)
        return 1

    def minor_value(self, k: int, block: np.ndarray) -> Scalar:
        return detper(k, block)
