from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from src.models.scalar import Scalar
from src.types.enums import Parity, PowerKind
from src.types.errors import DimensionMismatchError, MalformedInputError


@dataclass(frozen=True)
class SuperSpace:
    """Vector superspace (d0|d1) with its parity-ordered canonical basis."""
    d0: int
    d1: int

    def __post_init__(self) -> None:
        if self.d0 < 0 or self.d1 < 0:
            raise DimensionMismatchError(f"negative dimension ({self.d0}|{self.d1})")

    @property
    def dim(self) -> int:
        return self.d0 + self.d1

    @property
    def parities(self) -> Tuple[Parity, ...]:
        return (Parity.EVEN,) * self.d0 + (Parity.ODD,) * self.d1

    def parity(self, index: int) -> Parity:
        if not 0 <= index < self.dim:
            raise IndexError(f"basis index {index} outside ({self.d0}|{self.d1})")
        return Parity.EVEN if index < self.d0 else Parity.ODD

    @classmethod
    def from_parities(cls, parities: Sequence[int]) -> "SuperSpace":
        """Superspace of a parity-ordered basis."""
        d0 = sum(1 for p in parities if int(p) == 0)
        if any(int(p) for p in parities[:d0]):
            raise DimensionMismatchError("basis is not parity-ordered")
        return cls(d0, len(parities) - d0)

    def __str__(self) -> str:
        return f"({self.d0}|{self.d1})"


@dataclass
class SuperVector:
    space: SuperSpace
    coords: np.ndarray

    def __post_init__(self) -> None:
        if len(self.coords) != self.space.dim:
            raise DimensionMismatchError(
                f"{len(self.coords)} coordinates for a space of dimension {self.space.dim}")

    @property
    def parity(self) -> Optional[Parity]:
        """Parity if homogeneous and nonzero, else None."""
        support = {self.space.parity(i) for i, c in enumerate(self.coords) if c != 0}
        return support.pop() if len(support) == 1 else None

    @property
    def is_homogeneous(self) -> bool:
        return all(c == 0 for c in self.coords) or self.parity is not None


@dataclass
class SuperMatrix:
    """Coordinate grid of a linear map cols-space -> rows-space (column convention)."""
    rows: SuperSpace
    cols: SuperSpace
    entries: np.ndarray

    def __post_init__(self) -> None:
        if self.entries.shape != (self.rows.dim, self.cols.dim):
            raise DimensionMismatchError(
                f"entries of shape {self.entries.shape} for {self.rows} x {self.cols}")

    @property
    def is_even(self) -> bool:
        for (r, c), value in np.ndenumerate(self.entries):
            if value != 0 and self.rows.parity(r) != self.cols.parity(c):
                return False
        return True


@dataclass(frozen=True, order=True)
class IndexTuple:
    """Canonical label of an alternating or symmetric superpower basis element.

    Entries are 0-based basis indices of a parity-ordered space; labels are 1-based.
    """
    kind: PowerKind = field(compare=False)
    entries: Tuple[int, ...]
    d0: int = field(compare=False)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def even_count(self) -> int:
        return sum(1 for e in self.entries if e < self.d0)

    @property
    def parity(self) -> Parity:
        return Parity((len(self.entries) - self.even_count) % 2)

    @property
    def label(self) -> str:
        return format_label(self.entries)

    def __str__(self) -> str:
        return self.label


def format_label(entries: Sequence[int]) -> str:
    return "(" + ",".join(str(e + 1) for e in entries) + ")"


def parse_label(label: str) -> Tuple[int, ...]:
    text = label.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise MalformedInputError(f"malformed index label {label!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        entries = tuple(int(part) - 1 for part in body.split(","))
    except ValueError as exc:
        raise MalformedInputError(f"malformed index label {label!r}") from exc
    if any(e < 0 for e in entries):
        raise MalformedInputError(f"index labels are 1-based: {label!r}")
    return entries


@dataclass
class PowerVector:
    """Element of a superpower in canonical coordinates (ZERO entries omitted)."""
    kind: PowerKind
    space: SuperSpace
    n: int
    coords: Dict[Tuple[int, ...], Scalar] = field(default_factory=dict)

    def add(self, key: Tuple[int, ...], value: Scalar) -> None:
        total = self.coords.get(key, 0) + value
        if total == 0:
            self.coords.pop(key, None)
        else:
            self.coords[key] = total

    def scaled(self, factor: Scalar) -> "PowerVector":
        return PowerVector(self.kind, self.space, self.n,
                           {k: v * factor for k, v in self.coords.items() if v * factor != 0})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerVector):
            return NotImplemented
        return (self.kind, self.space, self.n) == (other.kind, other.space, other.n) \
            and self.coords == other.coords
