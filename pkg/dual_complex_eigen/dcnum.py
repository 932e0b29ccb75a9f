"""
Dual numbers and dual complex numbers.

A dual complex number is a = a_s + a_d*eps with complex parts and eps**2 = 0.
Multiplication is commutative. Dual numbers (real parts) carry a total
lexicographic order.
"""

import cmath
import math
from dataclasses import dataclass
from enum import IntEnum
from typing import List, Optional, Sequence, Union

from dual_complex_eigen.config import get_tolerances
from dual_complex_eigen.errors import (
    NegativeInput,
    NonFiniteValue,
    NotADualNumber,
    NotAppreciable,
    ParseError,
)

Scalar = Union[int, float, complex]


class Ordering(IntEnum):
    """Result of dn_compare."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


def _finite_complex(value: Scalar, name: str) -> complex:
    z = complex(value)
    if not (cmath.isfinite(z)):
        raise NonFiniteValue(f"{name} must be finite, got {z!r}")
    return z


def _finite_real(value: Scalar, name: str) -> float:
    if isinstance(value, complex):
        if value.imag != 0.0:
            raise ValueError(f"{name} must be real, got {value!r}")
        value = value.real
    x = float(value)
    if not math.isfinite(x):
        raise NonFiniteValue(f"{name} must be finite, got {x!r}")
    return x


@dataclass(frozen=True)
class DualComplex:
    """a = std + dual*eps with complex std and dual parts."""

    std: complex = 0j
    dual: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "std", _finite_complex(self.std, "standard part"))
        object.__setattr__(self, "dual", _finite_complex(self.dual, "dual part"))

    @classmethod
    def coerce(cls, value: Union["DualComplex", "DualNumber", Scalar]) -> "DualComplex":
        if isinstance(value, DualComplex):
            return value
        if isinstance(value, DualNumber):
            return cls(value.std, value.dual)
        return cls(value, 0j)

    def is_appreciable(self, tol: Optional[float] = None) -> bool:
        tol = get_tolerances().abs if tol is None else tol
        return abs(self.std.real) > tol or abs(self.std.imag) > tol

    def is_close(self, other: Union["DualComplex", Scalar], tol: Optional[float] = None) -> bool:
        """Componentwise equality within tol on each real component."""
        tol = get_tolerances().abs if tol is None else tol
        other = DualComplex.coerce(other)
        return all(
            abs(x - y) <= tol
            for x, y in (
                (self.std.real, other.std.real),
                (self.std.imag, other.std.imag),
                (self.dual.real, other.dual.real),
                (self.dual.imag, other.dual.imag),
            )
        )

    def conj(self) -> "DualComplex":
        return dc_conj(self)

    def to_dual_number(self, tol: Optional[float] = None) -> "DualNumber":
        """Drop (numerically zero) imaginary parts; raises if they are not negligible."""
        tol = get_tolerances().abs if tol is None else tol
        if abs(self.std.imag) > tol or abs(self.dual.imag) > tol:
            raise NotADualNumber(f"{self} is not a dual number")
        return DualNumber(self.std.real, self.dual.real)

    def to_json(self) -> List[float]:
        return [self.std.real, self.std.imag, self.dual.real, self.dual.imag]

    @classmethod
    def from_json(cls, payload: Sequence[float]) -> "DualComplex":
        if not isinstance(payload, (list, tuple)) or len(payload) != 4:
            raise ParseError(f"Dual complex scalar must be [re_s, im_s, re_d, im_d], got {payload!r}")
        try:
            re_s, im_s, re_d, im_d = (float(v) for v in payload)
        except (TypeError, ValueError):
            raise ParseError(f"Non-numeric entry in dual complex scalar {payload!r}") from None
        return cls(complex(re_s, im_s), complex(re_d, im_d))

    def __add__(self, other):
        return dc_add(self, DualComplex.coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return dc_sub(self, DualComplex.coerce(other))

    def __rsub__(self, other):
        return dc_sub(DualComplex.coerce(other), self)

    def __mul__(self, other):
        return dc_mul(self, DualComplex.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return dc_div(self, DualComplex.coerce(other))

    def __rtruediv__(self, other):
        return dc_div(DualComplex.coerce(other), self)

    def __neg__(self):
        return DualComplex(-self.std, -self.dual)

    def __str__(self) -> str:
        return f"{format_complex(self.std)} + {format_complex(self.dual)}·eps"


@dataclass(frozen=True)
class DualNumber:
    """a = std + dual*eps with real parts; totally ordered."""

    std: float = 0.0
    dual: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "std", _finite_real(self.std, "standard part"))
        object.__setattr__(self, "dual", _finite_real(self.dual, "dual part"))

    def __lt__(self, other: "DualNumber") -> bool:
        return dn_compare(self, other, tol=0.0) is Ordering.LESS

    def __le__(self, other: "DualNumber") -> bool:
        return dn_compare(self, other, tol=0.0) is not Ordering.GREATER

    def __gt__(self, other: "DualNumber") -> bool:
        return dn_compare(self, other, tol=0.0) is Ordering.GREATER

    def __ge__(self, other: "DualNumber") -> bool:
        return dn_compare(self, other, tol=0.0) is not Ordering.LESS

    def __mul__(self, other: "DualNumber") -> "DualNumber":
        return DualNumber(self.std * other.std, self.std * other.dual + self.dual * other.std)

    def __add__(self, other: "DualNumber") -> "DualNumber":
        return DualNumber(self.std + other.std, self.dual + other.dual)

    def as_dual_complex(self) -> DualComplex:
        return DualComplex(self.std, self.dual)

    def to_json(self) -> List[float]:
        return [self.std, self.dual]

    @classmethod
    def from_json(cls, payload: Sequence[float]) -> "DualNumber":
        if not isinstance(payload, (list, tuple)) or len(payload) != 2:
            raise ParseError(f"Dual number must be [std, dual], got {payload!r}")
        try:
            return cls(float(payload[0]), float(payload[1]))
        except (TypeError, ValueError):
            raise ParseError(f"Non-numeric entry in dual number {payload!r}") from None

    def __str__(self) -> str:
        return f"{self.std:.6g} + {self.dual:.6g}·eps"


ZERO = DualComplex(0j, 0j)
ONE = DualComplex(1 + 0j, 0j)
EPS = DualComplex(0j, 1 + 0j)


def format_complex(z: complex, digits: int = 6) -> str:
    """Six significant digits; the imaginary part is shown only when nonzero."""
    if z.imag == 0.0:
        return f"{z.real:.{digits}g}"
    if z.real == 0.0:
        return f"{z.imag:.{digits}g}i"
    return f"({z.real:.{digits}g}{z.imag:+.{digits}g}i)"


def dc_add(a: DualComplex, b: DualComplex) -> DualComplex:
    return DualComplex(a.std + b.std, a.dual + b.dual)


def dc_sub(a: DualComplex, b: DualComplex) -> DualComplex:
    return DualComplex(a.std - b.std, a.dual - b.dual)


def dc_mul(a: DualComplex, b: DualComplex) -> DualComplex:
    """ab = a_s b_s + (a_s b_d + a_d b_s) eps."""
    return DualComplex(a.std * b.std, a.std * b.dual + a.dual * b.std)


def dc_conj(a: DualComplex) -> DualComplex:
    return DualComplex(a.std.conjugate(), a.dual.conjugate())


def dc_magnitude(a: DualComplex) -> DualNumber:
    """|a| = |a_s| + |a_d| eps, a nonnegative dual number."""
    return DualNumber(abs(a.std), abs(a.dual))


def dc_inv(a: DualComplex) -> DualComplex:
    """
    Inverse of an appreciable dual complex number.

    Raises:
        NotAppreciable: if the standard part is zero.
    """
    if not a.is_appreciable():
        raise NotAppreciable(f"{a} has zero standard part and no inverse")
    inv_s = 1.0 / a.std
    return DualComplex(inv_s, -a.dual * inv_s * inv_s)


def dc_div(a: DualComplex, b: DualComplex) -> DualComplex:
    return dc_mul(a, dc_inv(b))


def dn_compare(a: DualNumber, b: DualNumber, tol: Optional[float] = None) -> Ordering:
    """
    Lexicographic comparison on (std, dual).

    Components closer than tol (default: the active absolute tolerance) count as
    equal. Pass tol=0.0 for the exact order.
    """
    tol = get_tolerances().abs if tol is None else tol
    diff_s = a.std - b.std
    if abs(diff_s) > tol:
        return Ordering.GREATER if diff_s > 0 else Ordering.LESS
    diff_d = a.dual - b.dual
    if abs(diff_d) > tol:
        return Ordering.GREATER if diff_d > 0 else Ordering.LESS
    return Ordering.EQUAL


def dn_sqrt(a: DualNumber, tol: Optional[float] = None) -> DualNumber:
    """
    Square root of a nonnegative dual number that is appreciable or zero.

    sqrt(a) = sqrt(a_s) + a_d / (2 sqrt(a_s)) eps

    Raises:
        NegativeInput: if a < 0.
        NotAppreciable: if a_s = 0 but a_d != 0.
    """
    tol = get_tolerances().abs if tol is None else tol
    zero = DualNumber()
    if dn_compare(a, zero, tol) is Ordering.LESS:
        raise NegativeInput(f"Square root of negative dual number {a}")
    if abs(a.std) <= tol:
        if abs(a.dual) <= tol:
            return zero
        raise NotAppreciable(f"Square root of {a} is undefined (zero standard part, nonzero dual part)")
    root = math.sqrt(a.std)
    return DualNumber(root, a.dual / (2.0 * root))
