from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Union

from sympy.polys.domains import QQ, QQ_I

from src.types.enums import ScalarField
from src.types.errors import MalformedInputError, ScalarDivisionError


def _to_qq(q: Fraction):
    return QQ(q.numerator, q.denominator)


def _from_qq(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """Exact element re + im*i of Q(i), computed in sympy's ``QQ_I``.

    Arithmetic results on the real line come back as ``Fraction``, so one
    value has one representation. A stored ``GaussianRational(x, 0)`` still
    compares (and hashes) equal to ``Fraction(x)``.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def from_domain(cls, element) -> "Scalar":
        return make_gaussian(_from_qq(element.x), _from_qq(element.y))

    def to_domain(self):
        return QQ_I(_to_qq(self.re), _to_qq(self.im))

    # Arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other: Any) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GaussianRational(Fraction(other))
        return None

    def _apply(self, other, op, reflected: bool = False):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = (o, self) if reflected else (self, o)
        return GaussianRational.from_domain(op(a.to_domain(), b.to_domain()))

    def __add__(self, other):
        return self._apply(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._apply(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._apply(other, lambda a, b: a - b, reflected=True)

    def __mul__(self, other):
        return self._apply(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is not None and not o:
            raise ScalarDivisionError("division by zero in Q(i)")
        return self._apply(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        if not self:
            raise ScalarDivisionError("division by zero in Q(i)")
        return self._apply(other, lambda a, b: a / b, reflected=True)

    def __neg__(self):
        return make_gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0 and not self:
            raise ScalarDivisionError("division by zero in Q(i)")
        return GaussianRational.from_domain(self.to_domain() ** exponent)

    def conjugate(self) -> "Scalar":
        return make_gaussian(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # Comparison ---------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


Scalar = Union[int, Fraction, GaussianRational]

I_UNIT = GaussianRational(0, 1)


def gaussian_i() -> GaussianRational:
    return I_UNIT


def field_of(x: Scalar) -> ScalarField:
    return ScalarField.GAUSSIAN if isinstance(x, GaussianRational) else ScalarField.RATIONAL


def to_scalar(x: Any) -> Scalar:
    """Exact scalar from int, Fraction, GaussianRational, "p/q" strings or
    ``{"re": .., "im": ..}`` dicts. Floats are refused."""
    if isinstance(x, bool):
        raise MalformedInputError(f"not a scalar: {x!r}")
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        text = x.strip()
        if any(c in text for c in ".eE") or not text:
            raise MalformedInputError(f"not an exact rational: {x!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInputError(f"not an exact rational: {x!r}") from exc
    if isinstance(x, dict) and set(x) == {"re", "im"}:
        return GaussianRational(to_scalar(x["re"]), to_scalar(x["im"]))
    raise MalformedInputError(f"not a scalar: {x!r}")


def promote(x: Scalar, field: ScalarField) -> Scalar:
    if field is ScalarField.GAUSSIAN and not isinstance(x, GaussianRational):
        return GaussianRational(Fraction(x))
    return to_scalar(x)


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Exact add/sub/mul/div with Q -> Q(i) promotion on mixed arguments."""
    a, b = to_scalar(a), to_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ScalarDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")



def make_gaussian(re: Fraction, im: Fraction) -> Scalar:
    """``re + im*i``, as a plain ``Fraction`` when it lies on the real line."""
    if im == 0:
        return Fraction(re)
    return GaussianRational(re, im)


def domain_for(values) -> Any:
    """Smallest sympy domain holding every value: ``QQ`` or ``QQ_I``."""
    return QQ_I if any(isinstance(v, GaussianRational) for v in values) else QQ


def to_domain_element(x: Scalar, domain) -> Any:
    if isinstance(x, GaussianRational):
        return x.to_domain()
    q = _to_qq(Fraction(x))
    return QQ_I(q, QQ(0)) if domain == QQ_I else q


def from_domain_element(element, domain) -> Scalar:
    if domain == QQ_I:
        return GaussianRational.from_domain(element)
    return _from_qq(element)


def format_scalar(x: Scalar) -> Union[str, dict]:
    """JSON form: "p/q" for rationals, {"re","im"} for Gaussian values off the real line."""
    if isinstance(x, GaussianRational):
        if x.im == 0:
            return str(x.re)
        return {"re": str(x.re), "im": str(x.im)}
    return str(Fraction(x))


def parse_scalar(doc: Any) -> Scalar:
    return to_scalar(doc)


def parse_scalar_text(text: str) -> Scalar:
    """Command-line scalar: "p/q", or a JSON ``{"re": .., "im": ..}`` object."""
    if text.lstrip().startswith("{"):
        try:
            return to_scalar(json.loads(text))
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"malformed scalar {text!r}: {exc.msg}") from exc
    return to_scalar(text)
