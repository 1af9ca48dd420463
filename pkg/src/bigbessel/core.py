"""Foundational numeric types shared by all modules.

ScaledComplex carries a complex mantissa together with a decimal exponent,
so quantities like 1e-954990 survive intermediate arithmetic.  AccuracyConfig
bundles the termination knobs used by every series/transform loop.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .ddarith import CDD, DD, LN10, dd_exp, dd_sincos

_ABSORB_GAP = 17  # decimal digits: beyond this an addend is absorbed


@dataclass(frozen=True)
class AccuracyConfig:
    """Global accuracy/termination configuration.

    target_rel_error is the requested relative accuracy; series and
    transform loops terminate a factor safety_factor below it.
    """

    target_rel_error: float = 1e-12
    safety_factor: float = 100.0
    max_terms: int = 200
    max_transform_order: int = 60

    def __post_init__(self):
        if not (0.0 < self.target_rel_error < 1.0):
            raise ValueError("target_rel_error must be in (0, 1)")
        if self.safety_factor < 1.0:
            raise ValueError("safety_factor must be >= 1")
        if self.max_terms < 3:
            raise ValueError("max_terms must be >= 3")

    @property
    def series_tol(self) -> float:
        return self.target_rel_error / self.safety_factor


DEFAULT_CONFIG = AccuracyConfig()


class ScaledComplex:
    """Complex value mantissa * 10**exponent10 with 1 <= |mantissa| < 10.

    Zero is canonically (0, 0).  Arithmetic renormalizes into that window;
    addition absorbs the smaller operand once the exponent gap exceeds the
    mantissa precision.
    """

    __slots__ = ("mantissa", "exponent10")

    def __init__(self, mantissa: complex, exponent10: int = 0):
        m = complex(mantissa)
        e = int(exponent10)
        if m == 0:
            self.mantissa = 0j
            self.exponent10 = 0
            return
        a = abs(m)
        if not (1.0 <= a < 10.0):
            shift = math.floor(math.log10(a))
            m = m / (10.0 ** shift)
            e += shift
            # one correction step for edge rounding
            a = abs(m)
            if a >= 10.0:
                m /= 10.0
                e += 1
            elif a < 1.0:
                m *= 10.0
                e -= 1
        self.mantissa = m
        self.exponent10 = e

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_complex(z: complex) -> "ScaledComplex":
        return ScaledComplex(z, 0)

    @staticmethod
    def from_exp(w: CDD) -> "ScaledComplex":
        """exp(w) for double-double complex w with arbitrarily large |Re w|.

        The decimal exponent is split off in dd so that the mantissa keeps
        full binary64 accuracy even when Re(w) ~ 1e6.
        """
        d = w.re / LN10
        e10 = math.floor(float(d))
        # residual magnitude exponent in natural log units
        r = w.re - LN10 * float(e10)
        mag = dd_exp(r)
        s, c = dd_sincos(w.im)
        m = complex(float(mag * c), float(mag * s))
        return ScaledComplex(m, e10)

    # -- accessors ----------------------------------------------------

    def to_complex(self) -> complex:
        """Plain complex value; overflows/underflows to inf/0 as floats do."""
        if self.mantissa == 0:
            return 0j
        if self.exponent10 > 307:
            return complex(math.inf, math.inf)
        if self.exponent10 < -320:
            return 0j
        return self.mantissa * 10.0 ** self.exponent10

    def abs_log10(self) -> float:
        """log10|value| (−inf for zero)."""
        if self.mantissa == 0:
            return -math.inf
        return math.log10(abs(self.mantissa)) + self.exponent10

    def is_zero(self) -> bool:
        return self.mantissa == 0

    def __repr__(self) -> str:
        return f"ScaledComplex({self.mantissa!r}, {self.exponent10})"

    def __str__(self) -> str:
        return f"({self.mantissa.real:+.16e}{self.mantissa.imag:+.16e}j)e{self.exponent10:+d}"

    # -- arithmetic ---------------------------------------------------

    def __mul__(self, other) -> "ScaledComplex":
        if isinstance(other, ScaledComplex):
            if self.is_zero() or other.is_zero():
                return ScaledComplex(0j)
            return ScaledComplex(self.mantissa * other.mantissa,
                                 self.exponent10 + other.exponent10)
        return ScaledComplex(self.mantissa * other, self.exponent10)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ScaledComplex":
        if isinstance(other, ScaledComplex):
            if other.is_zero():
                raise ZeroDivisionError("ScaledComplex division by zero")
            if self.is_zero():
                return ScaledComplex(0j)
            return ScaledComplex(self.mantissa / other.mantissa,
                                 self.exponent10 - other.exponent10)
        return ScaledComplex(self.mantissa / other, self.exponent10)

    def __add__(self, other) -> "ScaledComplex":
        if not isinstance(other, ScaledComplex):
            other = ScaledComplex(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        big, small = (self, other) if self.exponent10 >= other.exponent10 else (other, self)
        gap = big.exponent10 - small.exponent10
        if gap > _ABSORB_GAP:
            return big
        return ScaledComplex(big.mantissa + small.mantissa * 10.0 ** (-gap),
                             big.exponent10)

    __radd__ = __add__

    def __sub__(self, other) -> "ScaledComplex":
        if not isinstance(other, ScaledComplex):
            other = ScaledComplex(other)
        return self + ScaledComplex(-other.mantissa, other.exponent10)

    def __neg__(self) -> "ScaledComplex":
        return ScaledComplex(-self.mantissa, self.exponent10)

    def conjugate(self) -> "ScaledComplex":
        return ScaledComplex(self.mantissa.conjugate(), self.exponent10)


def scaled_mul(a: ScaledComplex, b: ScaledComplex) -> ScaledComplex:
    return a * b


def scaled_add(a: ScaledComplex, b: ScaledComplex) -> ScaledComplex:
    return a + b


def ln_gamma_real(x: float) -> float:
    """log Γ(x) for real x > 0."""
    if x <= 0.0:
        raise ValueError(f"ln_gamma_real requires x > 0, got {x}")
    return math.lgamma(x)
