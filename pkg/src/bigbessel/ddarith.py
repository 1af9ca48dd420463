"""Double-double ("compensated") arithmetic kernel.

Real values are carried as an unevaluated sum hi + lo of two binary64
numbers (~32 significant digits), complex values as a pair of those.
This is the working precision used where plain binary64 cannot reach the
library's accuracy target: exponential phases of size ~1e6 that must be
known to ~1e-11 absolute, power series with >10 digits of cancellation,
and coefficient sums in the turning-point regime.

Transcendentals are computed as a binary64 seed plus one Newton/series
correction step, which squares the seed's accuracy.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ta = _SPLITTER * a
    ahi = ta - (ta - a)
    alo = a - ahi
    tb = _SPLITTER * b
    bhi = tb - (tb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


class DD:
    """Real double-double number hi + lo."""

    __slots__ = ("hi", "lo")

    def __init__(self, hi: float = 0.0, lo: float = 0.0):
        self.hi = float(hi)
        self.lo = float(lo)

    @staticmethod
    def from_fraction(f: Fraction) -> "DD":
        hi = float(f)
        lo = float(f - Fraction(hi))
        return DD(hi, lo)

    @staticmethod
    def from_decimal_str(s: str) -> "DD":
        return DD.from_fraction(Fraction(s))

    def __float__(self) -> float:
        return self.hi + self.lo

    def __repr__(self) -> str:
        return f"DD({self.hi!r}, {self.lo!r})"

    def __neg__(self) -> "DD":
        return DD(-self.hi, -self.lo)

    def __abs__(self) -> "DD":
        return -self if self.hi < 0.0 or (self.hi == 0.0 and self.lo < 0.0) else self

    def __add__(self, other) -> "DD":
        if not isinstance(other, DD):
            other = DD(other)
        s1, s2 = _two_sum(self.hi, other.hi)
        t1, t2 = _two_sum(self.lo, other.lo)
        s2 += t1
        s1, s2 = _quick_two_sum(s1, s2)
        s2 += t2
        s1, s2 = _quick_two_sum(s1, s2)
        return DD(s1, s2)

    __radd__ = __add__

    def __sub__(self, other) -> "DD":
        if not isinstance(other, DD):
            other = DD(other)
        return self + (-other)

    def __rsub__(self, other) -> "DD":
        return (-self) + other

    def __mul__(self, other) -> "DD":
        if not isinstance(other, DD):
            other = DD(other)
        p1, p2 = _two_prod(self.hi, other.hi)
        p2 += self.hi * other.lo + self.lo * other.hi
        p1, p2 = _quick_two_sum(p1, p2)
        return DD(p1, p2)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "DD":
        if not isinstance(other, DD):
            other = DD(other)
        q1 = self.hi / other.hi
        r = self - other * q1
        q2 = r.hi / other.hi
        r = r - other * q2
        q3 = r.hi / other.hi
        s1, s2 = _quick_two_sum(q1, q2)
        res = DD(s1, s2) + q3
        return res

    def __rtruediv__(self, other) -> "DD":
        return DD(other) / self

    def __lt__(self, other) -> bool:
        return float(self - other) < 0.0

    def __le__(self, other) -> bool:
        return float(self - other) <= 0.0

    def __gt__(self, other) -> bool:
        return float(self - other) > 0.0

    def __ge__(self, other) -> bool:
        return float(self - other) >= 0.0

    def sqrt(self) -> "DD":
        if self.hi == 0.0 and self.lo == 0.0:
            return DD(0.0)
        if self.hi < 0.0:
            raise ValueError("sqrt of negative DD")
        x0 = math.sqrt(self.hi)
        y = DD(x0)
        # one Newton step: y + (a - y^2) / (2 y)
        return y + (self - y * y) * (0.5 / x0)


PI = DD(3.141592653589793, 1.2246467991473532e-16)
TWO_PI = DD(6.283185307179586, 2.4492935982947064e-16)
PI_2 = DD(1.5707963267948966, 6.123233995736766e-17)
LN2 = DD(0.6931471805599453, 2.3190468138462996e-17)
LN10 = DD(2.302585092994046, -2.1707562233822494e-16)

_EXP_MAX_TERMS = 40
_SIN_TOL = 1e-35


def dd_exp(x: DD) -> DD:
    """exp(x) for |x| up to ~700, ~1e-31 relative."""
    if not isinstance(x, DD):
        x = DD(x)
    m = round(float(x) / LN2.hi)
    r = x - LN2 * float(m)
    # Taylor on |r| <= ln2/2
    term = DD(1.0)
    total = DD(1.0)
    for k in range(1, _EXP_MAX_TERMS):
        term = term * r / float(k)
        total = total + term
        if abs(term.hi) < _SIN_TOL * abs(total.hi):
            break
    return DD(math.ldexp(total.hi, m), math.ldexp(total.lo, m))


def dd_log(x: DD) -> DD:
    """log(x), x > 0, ~1e-31 relative."""
    if not isinstance(x, DD):
        x = DD(x)
    if float(x) <= 0.0:
        raise ValueError("dd_log requires positive argument")
    l0 = math.log(x.hi)
    u = x * dd_exp(DD(-l0)) - 1.0
    return DD(l0) + u - u * u * 0.5


def _sin_taylor(r: DD) -> DD:
    term = r
    total = r
    r2 = r * r
    k = 1
    while abs(term.hi) > _SIN_TOL:
        term = term * r2 * (-1.0 / ((2 * k) * (2 * k + 1)))
        total = total + term
        k += 1
    return total


def _cos_taylor(r: DD) -> DD:
    term = DD(1.0)
    total = DD(1.0)
    r2 = r * r
    k = 1
    while abs(term.hi) > _SIN_TOL:
        term = term * r2 * (-1.0 / ((2 * k - 1) * (2 * k)))
        total = total + term
        k += 1
    return total


def dd_sincos(x: DD) -> tuple[DD, DD]:
    """(sin x, cos x); argument may be large (reduced mod 2π in dd)."""
    if not isinstance(x, DD):
        x = DD(x)
    m = round(float(x) / TWO_PI.hi)
    r = x - TWO_PI * float(m)
    q = round(float(r) / PI_2.hi)
    r = r - PI_2 * float(q)
    s, c = _sin_taylor(r), _cos_taylor(r)
    q &= 3
    if q == 0:
        return s, c
    if q == 1:
        return c, -s
    if q == 2:
        return -s, -c
    return -c, s


def dd_atan2(y: DD, x: DD) -> DD:
    """atan2(y, x) in (-π, π], ~1e-31 absolute."""
    if not isinstance(y, DD):
        y = DD(y)
    if not isinstance(x, DD):
        x = DD(x)
    t0 = math.atan2(float(y), float(x))
    s, c = dd_sincos(DD(t0))
    u = x * c + y * s  # ~ r > 0
    v = y * c - x * s  # ~ r * delta
    if u.hi == 0.0:
        return DD(t0)
    return DD(t0) + v / u


class CDD:
    """Complex double-double number."""

    __slots__ = ("re", "im")

    def __init__(self, re=0.0, im=0.0):
        self.re = re if isinstance(re, DD) else DD(re)
        self.im = im if isinstance(im, DD) else DD(im)

    @staticmethod
    def from_complex(z: complex) -> "CDD":
        return CDD(DD(z.real), DD(z.imag))

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"CDD({self.re!r}, {self.im!r})"

    def conjugate(self) -> "CDD":
        return CDD(self.re, -self.im)

    def __neg__(self) -> "CDD":
        return CDD(-self.re, -self.im)

    def __add__(self, other) -> "CDD":
        other = _as_cdd(other)
        return CDD(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "CDD":
        other = _as_cdd(other)
        return CDD(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "CDD":
        return (-self) + other

    def __mul__(self, other) -> "CDD":
        other = _as_cdd(other)
        return CDD(self.re * other.re - self.im * other.im,
                   self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CDD":
        other = _as_cdd(other)
        d = other.re * other.re + other.im * other.im
        num = self * other.conjugate()
        return CDD(num.re / d, num.im / d)

    def __rtruediv__(self, other) -> "CDD":
        return _as_cdd(other) / self

    def abs2(self) -> DD:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return abs(self.to_complex())


def _as_cdd(x) -> CDD:
    if isinstance(x, CDD):
        return x
    if isinstance(x, DD):
        return CDD(x, DD(0.0))
    if isinstance(x, complex):
        return CDD.from_complex(x)
    return CDD(DD(x), DD(0.0))


def cdd_sqrt(z: CDD, seed: complex | None = None) -> CDD:
    """Square root by one Newton step from a binary64 seed.

    The seed fixes the branch: the result is the root closest to it, so
    callers can continue a square root across a principal-branch cut by
    handing in the branch-correct binary64 value.
    """
    zc = z.to_complex()
    s0 = seed if seed is not None else cmath.sqrt(zc)
    if s0 == 0.0:
        return CDD(0.0, 0.0)
    s = _as_cdd(s0)
    return s + (z - s * s) / (s + s)


def cdd_exp(z: CDD) -> CDD:
    er = dd_exp(z.re)
    s, c = dd_sincos(z.im)
    return CDD(er * c, er * s)


def cdd_log(z: CDD, seed: complex | None = None) -> CDD:
    """Principal log (or the branch continuous with the given seed)."""
    zc = z.to_complex()
    l0 = seed if seed is not None else cmath.log(zc)
    u = z * cdd_exp(_as_cdd(-l0)) - 1.0
    corr = u - u * u * 0.5
    return _as_cdd(l0) + corr


def cdd_powi(z: CDD, n: int) -> CDD:
    """Integer power by binary exponentiation."""
    if n < 0:
        return CDD(1.0, 0.0) / cdd_powi(z, -n)
    result = CDD(1.0, 0.0)
    base = z
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result
