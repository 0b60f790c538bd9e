"""Shared closed form of alternating and symmetric powers of a metric pair."""
from __future__ import annotations

from abc import abstractmethod
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.builders.power_builder_base import Entries, PowerBuilderBase, Term
from src.models.pair import MetricPair
from src.models.scalar import Scalar
from src.models.superspace import SuperMatrix, SuperSpace
from src.types.enums import PowerKind, Side
from src.types.errors import DimensionMismatchError, IndexRangeError
from src.utils.jordan import is_parity_ordered
from src.utils.superlinear import omega
from src.utils.superpowers import enum_entries, matrix_power, normalize_pure, pure_pairing


class SuperpowerBuilder(PowerBuilderBase):
    """n-th superpower of one parity-ordered pair.

    [F, V] expands into signed complementary minors of G[I, J] times brackets
    of single factors; subclasses fix the kind, the sign table and the minor.
    """

    kind: PowerKind

    @abstractmethod
    def power_sign(self, p: int, q: int, n: int, i: int, j: int) -> int:
        """Sign of the (i, j) term, 1-based, for even counts p and q."""

    @abstractmethod
    def minor_value(self, k: int, block: np.ndarray) -> Scalar:
        pass

    def _check_sign_args(self, p: int, q: int, n: int, i: int, j: int) -> None:
        if not (0 <= p <= n and 0 <= q <= n):
            raise IndexRangeError(f"even counts {p}, {q} outside 0..{n}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexRangeError(f"position ({i}, {j}) outside 1..{n}")

    @staticmethod
    def _space(pair: MetricPair, side: Side) -> SuperSpace:
        parities = pair.parities(side)
        if not is_parity_ordered(parities):
            raise DimensionMismatchError(f"{side.name.lower()} basis is not parity-ordered")
        return SuperSpace.from_parities(parities)

    def basis(self, factors: Sequence[MetricPair], side: Side) -> Sequence[Entries]:
        return enum_entries(self.kind, self._space(factors[0], side), len(factors))

    def pairing_entry(self, factors: Sequence[MetricPair], I: Entries, J: Entries) -> Scalar:
        pair = factors[0]
        return pure_pairing(self.kind, pair.gram, I, J, self._space(pair, Side.PLUS).d0, weighted=True)

    def bracket_terms(self, factors: Sequence[MetricPair], I: Entries, J: Entries) -> List[Term]:
        pair = factors[0]
        n = len(I)
        p = sum(1 for e in I if pair.minus_parities[e] == 0)
        q = sum(1 for e in J if pair.plus_parities[e] == 0)
        block = pair.gram[np.ix_(list(I), list(J))]
        weight = omega(n - p)
        terms: List[Term] = []
        for i in range(n):
            for j in range(n):
                k = p - (i < p)
                if k != q - (j < q):
                    continue
                minor = np.delete(np.delete(block, i, axis=0), j, axis=1)
                value = self.minor_value(k, minor)
                if value == 0:
                    continue
                terms.append((weight * self.power_sign(p, q, n, i + 1, j + 1) * value, i, j))
        return terms

    def place(self, factors: Sequence[MetricPair], side: Side,
              entries: Entries) -> Optional[Tuple[int, Entries]]:
        return normalize_pure(self.kind, entries, factors[0].parities(side))

    def lift_matrix(self, factors: Sequence[MetricPair], side: Side,
                    maps: Sequence[np.ndarray]) -> np.ndarray:
        space = self._space(factors[0], side)
        return matrix_power(self.kind, SuperMatrix(space, space, maps[0]), len(factors))
