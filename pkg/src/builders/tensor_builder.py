from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.builders.power_builder_base import Entries, PowerBuilderBase, Term
from src.models.pair import MetricPair
from src.models.scalar import Scalar
from src.types.enums import Side, TensorMode
from src.utils.linalg import ONE, kron
from src.utils.liesuper import tensor_basis
from src.utils.superlinear import eta


class TensorBuilder(PowerBuilderBase):
    """Tensor superproduct of metric pairs.

    RESTRICTED: all slots carry the same pair and a bracket acts on every slot.
    GENERAL: a bracket of slot i only acts on slot i.
    """

    def __init__(self, mode: TensorMode) -> None:
        super().__init__()
        self.mode = mode

    def basis(self, factors: Sequence[MetricPair], side: Side) -> Sequence[Entries]:
        return tensor_basis([len(f.parities(side)) for f in factors])

    @staticmethod
    def _sign(factors: Sequence[MetricPair], I: Entries, J: Entries) -> int:
        sign = 1
        for a in range(len(I)):
            for b in range(a):
                sign *= eta(factors[a].minus_parities[I[a]], factors[b].plus_parities[J[b]])
        return sign

    def pairing_entry(self, factors: Sequence[MetricPair], I: Entries, J: Entries) -> Scalar:
        value: Scalar = ONE
        for f, a, b in zip(factors, I, J):
            value = value * f.gram[a, b]
            if value == 0:
                return value
        return self._sign(factors, I, J) * value

    def bracket_terms(self, factors: Sequence[MetricPair], I: Entries, J: Entries) -> List[Term]:
        sign = self._sign(factors, I, J)
        terms: List[Term] = []
        for i in range(len(I)):
            value: Scalar = ONE
            for m, (f, a, b) in enumerate(zip(factors, I, J)):
                if m != i:
                    value = value * f.gram[a, b]
            if value != 0:
                terms.append((sign * value, i, i))
        return terms

    def slots(self, i: int, n: int) -> Sequence[int]:
        if self.mode is TensorMode.GENERAL:
            return (i,)
        return range(n)

    def place(self, factors: Sequence[MetricPair], side: Side,
              entries: Entries) -> Optional[Tuple[int, Entries]]:
        return 1, tuple(entries)

    def label(self, factors: Sequence[MetricPair], side: Side, entries: Entries) -> str:
        return "⊗".join(f.labels(side)[e] for f, e in zip(factors, entries))

    def lift_matrix(self, factors: Sequence[MetricPair], side: Side,
                    maps: Sequence[np.ndarray]) -> np.ndarray:
        out = maps[0]
        for m in maps[1:]:
            out = kron(out, m)
        return out
