from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.models.pair import InnerDerivation, MetricPair, PairMap
from src.models.scalar import Scalar
from src.types.enums import Parity, Side
from src.types.errors import PowerTooLargeError
from src.utils.linalg import zeros
from src.utils.superlinear import eta

Entries = Tuple[int, ...]
Term = Tuple[Scalar, int, int]


class PowerBuilderBase(ABC):
    """Closed-form construction of a power (or product) of metric pairs.

    ``factors`` holds one pair per tensor slot; powers repeat the same pair.
    Subclasses provide the basis, the pairing, the expansion of [F, V] into
    brackets of factors, and the normal form of a modified basis element.
    """

    MAX_POWER_DIM = 200

    def __init__(self) -> None:
        # one logger per concrete builder, named after the subclass
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    @abstractmethod
    def basis(self, factors: Sequence[MetricPair], side: Side) -> Sequence[Entries]:
        pass

    @abstractmethod
    def pairing_entry(self, factors: Sequence[MetricPair], I: Entries, J: Entries) -> Scalar:
        pass

    @abstractmethod
    def bracket_terms(self, factors: Sequence[MetricPair], I: Entries, J: Entries) -> List[Term]:
        """[F, V] as a list of (coefficient, i, j) standing for [f_{I_i}, v_{J_j}]."""

    @abstractmethod
    def place(self, factors: Sequence[MetricPair], side: Side,
              entries: Entries) -> Optional[Tuple[int, Entries]]:
        """(sign, canonical key) of a modified basis element, or None if it vanishes."""

    @abstractmethod
    def lift_matrix(self, factors: Sequence[MetricPair], side: Side,
                    maps: Sequence[np.ndarray]) -> np.ndarray:
        """Matrix of the induced even map on the power basis of ``side``."""

    def slots(self, i: int, n: int) -> Sequence[int]:
        """Tensor slots a bracket of slot i acts on."""
        return range(n)

    def label(self, factors: Sequence[MetricPair], side: Side, entries: Entries) -> str:
        return "(" + ",".join(str(e + 1) for e in entries) + ")"

    # --------------------------------------------------------------

    def _parity(self, factors: Sequence[MetricPair], side: Side, entries: Entries) -> Parity:
        return Parity(sum(int(factors[t].parities(side)[e]) for t, e in enumerate(entries)) % 2)

    def _act(self, factors: Sequence[MetricPair], side: Side, terms: List[Term],
             I: Entries, J: Entries, K: Entries) -> Dict[Entries, Scalar]:
        """sum of coef * [f_{I_i}, v_{J_j}] . K with the Leibniz rule and Koszul prefix."""
        out: Dict[Entries, Scalar] = defaultdict(int)
        n = len(K)
        for coef, i, j in terms:
            fi, vj = I[i], J[j]
            pf = factors[i].minus_parities[fi]
            pv = factors[j].plus_parities[vj]
            pd = int(pf) + int(pv)
            inner = 1 if side is Side.MINUS else -eta(pf, pv)
            prefix = 1
            for k in range(n):
                if k in self.slots(i, n):
                    fac = factors[k]
                    prod = fac.prod_minus[fi, vj, K[k]] if side is Side.MINUS else fac.prod_plus[vj, fi, K[k]]
                    for w, value in enumerate(prod):
                        if value == 0:
                            continue
                        placed = self.place(factors, side, K[:k] + (w,) + K[k + 1:])
                        if placed is None:
                            continue
                        sign, key = placed
                        out[key] += coef * prefix * inner * sign * value
                prefix *= eta(pd, factors[k].parities(side)[K[k]])
        return {key: value for key, value in out.items() if value != 0}

    def build(self, factors: Sequence[MetricPair]) -> MetricPair:
        minus = list(self.basis(factors, Side.MINUS))
        plus = list(self.basis(factors, Side.PLUS))
        if len(minus) + len(plus) > self.MAX_POWER_DIM:
            raise PowerTooLargeError(
                f"power of total dimension {len(minus) + len(plus)} exceeds {self.MAX_POWER_DIM}")
        self.logger.debug("building power of %d factors: dimensions %d/%d",
                          len(factors), len(minus), len(plus))
        pos_m = {key: r for r, key in enumerate(minus)}
        pos_p = {key: r for r, key in enumerate(plus)}
        dm, dp = len(minus), len(plus)
        gram = zeros(dm, dp)
        prod_minus = zeros(dm, dp, dm, dm)
        prod_plus = zeros(dp, dm, dp, dp)
        for r, I in enumerate(minus):
            for c, J in enumerate(plus):
                gram[r, c] = self.pairing_entry(factors, I, J)
                terms = self.bracket_terms(factors, I, J)
                if not terms:
                    continue
                for k, K in enumerate(minus):
                    for key, value in self._act(factors, Side.MINUS, terms, I, J, K).items():
                        prod_minus[r, c, k, pos_m[key]] += value
                outer = -eta(self._parity(factors, Side.MINUS, I), self._parity(factors, Side.PLUS, J))
                for k, W in enumerate(plus):
                    for key, value in self._act(factors, Side.PLUS, terms, I, J, W).items():
                        prod_plus[c, r, k, pos_p[key]] += outer * value
        return MetricPair(
            tuple(self._parity(factors, Side.MINUS, I) for I in minus),
            tuple(self._parity(factors, Side.PLUS, J) for J in plus),
            prod_minus,
            prod_plus,
            tuple(self.label(factors, Side.MINUS, I) for I in minus),
            tuple(self.label(factors, Side.PLUS, J) for J in plus),
            gram=gram,
        )

    def power_nu(self, factors: Sequence[MetricPair], I: Entries, J: Entries) -> InnerDerivation:
        """sum of coef * lift(nu(f_{I_i}, v_{J_j})) as operators on the power."""
        terms = self.bracket_terms(factors, I, J)
        parity = self._parity(factors, Side.MINUS, I) + self._parity(factors, Side.PLUS, J)
        ops = []
        for side in (Side.MINUS, Side.PLUS):
            basis = list(self.basis(factors, side))
            pos = {key: r for r, key in enumerate(basis)}
            op = zeros(len(basis), len(basis))
            for col, K in enumerate(basis):
                for key, value in self._act(factors, side, terms, I, J, K).items():
                    op[pos[key], col] += value
            ops.append(op)
        return InnerDerivation(ops[0], ops[1], parity)

    def lift(self, factors: Sequence[MetricPair], maps: Sequence[PairMap]) -> PairMap:
        """Induced map of per-slot even maps."""
        return PairMap(
            self.lift_matrix(factors, Side.MINUS, [m.minus for m in maps]),
            self.lift_matrix(factors, Side.PLUS, [m.plus for m in maps]),
        )
