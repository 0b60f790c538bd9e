from enum import Enum, IntEnum


class Parity(IntEnum):
    """Z2 degree of a homogeneous element."""

    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__


class ScalarField(Enum):
    """Scalar domains supported by the library."""

    RATIONAL = "rational"  # Q
    GAUSSIAN = "gaussian"  # Q(i), i^2 = -1


class PowerKind(Enum):
    """Kinds of superpowers."""

    ALT = "alt"  # alternating, det on the even block
    SYM = "sym"  # symmetric, per on the even block
    TENSOR = "tensor"  # restricted tensor superpower


class TensorMode(Enum):
    """Tensor superproducts of supermodules."""

    GENERAL = "general"  # direct sum of algebras, slot i moved by L_i only
    RESTRICTED = "restricted"  # one algebra acting on every slot


class Side(IntEnum):
    """The sigma index of a pair: V- or V+."""

    MINUS = -1
    PLUS = 1

    @property
    def opposite(self) -> "Side":
        return Side(-int(self))


class KernelVerdict(Enum):
    """Outcome of the kernel membership test for power maps."""

    SCALAR_ROOT = "scalar_root"  # A = r.I with r^n = 1
    SL_CASE = "sl_case"  # exceptional shape, det A = 1
    NOT_KERNEL = "not_kernel"


class CheckStatus(Enum):
    PASS = "PASS"
    FAIL = "FAIL"


class JordanType(Enum):
    """Simple Jordan pairs of the classical series."""

    I = "I"  # rectangular matrices
    II = "II"  # antisymmetric matrices
    III = "III"  # symmetric matrices
