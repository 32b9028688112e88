"""Arbitrary-precision constants and special functions.

Built on mpmath binary floats.  The gamma function is evaluated from
scratch: Stirling's asymptotic series for log-gamma with exact rational
argument shifting, Bernoulli coefficients generated exactly from the
tangent-number triangle, and truncation error controlled by the first
omitted term (for real positive arguments the remainder of the series is
smaller than that term and has its sign).  No fixed-accuracy coefficient
tables are involved, so the same code path serves 10 digits and 1000.

Precision contract: operations take a :class:`Precision` (certified
decimal digits plus internal guard digits) and return :class:`BigReal`
values accurate well inside the certified digits; the few operations with
subtler error behaviour document their bound explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log2
from typing import Union

from mpmath import mp, mpf

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = int

from .errors import DomainError, NonPositiveArgument, PrecisionUnreachable, TangentPole

Rational = Union[int, Fraction]

_LOG2_10 = log2(10.0)


@dataclass(frozen=True)
class Precision:
    """Target certified decimal digits plus internal guard digits."""

    decimal_digits: int
    guard_digits: int = 15

    def __post_init__(self):
        if self.decimal_digits < 10:
            raise DomainError("decimal_digits must be >= 10")
        if self.guard_digits < 10:
            raise DomainError("guard_digits must be >= 10")

    @property
    def total_digits(self) -> int:
        return self.decimal_digits + self.guard_digits

    @property
    def prec_bits(self) -> int:
        return ceil(self.total_digits * _LOG2_10)


@dataclass(frozen=True)
class BigReal:
    """An immutable arbitrary-precision real with its working precision."""

    value: mpf
    prec_bits: int

    def __float__(self) -> float:
        return float(self.value)

    def to_decimal_string(self, digits: int | None = None) -> str:
        d = digits if digits is not None else max(1, int(self.prec_bits / _LOG2_10) - 3)
        with mp.workprec(self.prec_bits + 8):
            return mp.nstr(self.value, d, strip_zeros=False)


def _bits(p: Precision, extra: int = 8) -> int:
    return p.prec_bits + extra


def _wrap(value, p: Precision) -> BigReal:
    return BigReal(+mpf(value), p.prec_bits)


# ---------------------------------------------------------------------------
# constants


def const_pi(p: Precision) -> BigReal:
    """pi, correct to within 2 ulp at working precision."""
    with mp.workprec(_bits(p)):
        return _wrap(+mp.pi, p)


def const_euler_gamma(p: Precision) -> BigReal:
    """Euler's constant gamma, correct to within 2 ulp."""
    with mp.workprec(_bits(p)):
        return _wrap(+mp.euler, p)


def const_log2(p: Precision) -> BigReal:
    """log 2, correct to within 2 ulp."""
    with mp.workprec(_bits(p)):
        return _wrap(+mp.ln2, p)


# ---------------------------------------------------------------------------
# Bernoulli numbers, exactly, via the tangent-number triangle

_tangent_cache: list = []


def _tangent_numbers(n: int) -> list:
    """T_1..T_n as exact integers (tan x = sum T_k x^(2k-1)/(2k-1)!)."""
    global _tangent_cache
    if len(_tangent_cache) >= n:
        return _tangent_cache[:n]
    t = [mpz(0)] * (n + 1)
    t[1] = mpz(1)
    for k in range(2, n + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    _tangent_cache = t[1:]
    return _tangent_cache[:n]


def bernoulli_2k(k: int) -> Fraction:
    """Exact Bernoulli number B_{2k}, k >= 1."""
    if k < 1:
        raise DomainError("bernoulli_2k requires k >= 1")
    tk = _tangent_numbers(k)[k - 1]
    four_k = 1 << (2 * k)
    val = Fraction(2 * k * int(tk), four_k * (four_k - 1))
    return val if k % 2 == 1 else -val


# ---------------------------------------------------------------------------
# log-gamma / gamma


def _as_fraction(x) -> Fraction | None:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return None


def _stirling_log_gamma(y, eps_stop, k_cap: int):
    """Stirling series at y (mpf, assumed large enough); None if it fails.

    Returns the series value with truncation error <= eps_stop, or None
    when the terms fail to reach eps_stop before growing or hitting the cap.
    """
    s = (y - mpf(0.5)) * mp.log(y) - y + mp.log(2 * mp.pi) / 2
    inv_y2 = 1 / (y * y)
    power = 1 / y  # y^(1-2k) accumulator
    prev = mp.inf
    for k in range(1, k_cap + 1):
        b = bernoulli_2k(k)
        term = mpf(b.numerator) / b.denominator / ((2 * k) * (2 * k - 1)) * power
        if abs(term) <= eps_stop:
            return s  # remainder bounded by this first omitted term
        if abs(term) >= prev:
            return None  # divergent zone reached before target accuracy
        s += term
        prev = abs(term)
        power *= inv_y2
    return None


def log_gamma(x, p: Precision) -> BigReal:
    """log Gamma(x) for x > 0, absolute error <= 10^-(digits + guard/2).

    Rational arguments are kept exact through the argument shift
    Gamma(x) = Gamma(x+m) / (x (x+1) ... (x+m-1)); m is chosen so x+m
    exceeds a precision-dependent threshold where Stirling's series
    reaches the target before its terms turn.
    """
    xf = _as_fraction(x)
    if xf is None:
        xv = x.value if isinstance(x, BigReal) else mpf(x)
        if xv <= 0:
            raise NonPositiveArgument(f"log_gamma requires x > 0, got {xv}")
    elif xf <= 0:
        raise NonPositiveArgument(f"log_gamma requires x > 0, got {xf}")

    D = p.total_digits
    bits = _bits(p, 48)
    eps_stop = mpf(10) ** (-(D + 2))
    y_min = max(12, ceil(0.37 * (D + 8)))
    k_cap = 4 * D + 60

    for _attempt in range(6):
        with mp.workprec(bits):
            if xf is not None:
                m = max(0, ceil(y_min - xf))
                # shift product: prod_{t<m} (x+t) = prod (num + t den) / den^m
                num, den = xf.numerator, xf.denominator
                prod = mpz(1)
                for t in range(m):
                    prod *= num + t * den
                shift_log = (mp.log(mpf(int(prod))) - m * mp.log(den)) if m else mpf(0)
                y = mpf(num + m * den) / den
            else:
                m = max(0, int(ceil(y_min - xv)))
                shift_log = mpf(0)
                yy = +mpf(xv)
                for t in range(m):
                    shift_log += mp.log(yy)
                    yy += 1
                y = yy
            s = _stirling_log_gamma(y, eps_stop, k_cap)
            if s is not None:
                return _wrap(s - shift_log, p)
        y_min *= 2
        bits += 32
    raise PrecisionUnreachable("Stirling series failed to converge")  # pragma: no cover


def gamma(x, p: Precision) -> BigReal:
    """Gamma(x) for x > 0, relative error <= 10^-(digits + guard/2)."""
    lg = log_gamma(x, p)
    with mp.workprec(_bits(p, 48)):
        return _wrap(mp.exp(lg.value), p)


def log_gamma_raw(x: Rational, bits: int):
    """log Gamma at an exact rational, as a raw mpf at >= `bits` precision.

    Absolute error well below 10^-(bits*0.301 - 2); the product evaluators
    that call this do their own error accounting in decimal terms.
    """
    digits = max(10, int(bits / _LOG2_10))
    return log_gamma(x, Precision(digits, 16)).value


# ---------------------------------------------------------------------------
# trigonometry at exact rational multiples of pi


def trig_pi(kind: str, r: Rational, p: Precision) -> BigReal:
    """sin/cos/tan of pi*r for exact rational r, reduced exactly mod 2.

    Relative error <= 2 ulp.  tan raises TangentPole at r = 1/2 mod 1.
    """
    if kind not in ("sin", "cos", "tan"):
        raise DomainError(f"unknown trig kind {kind!r}")
    rr = Fraction(r) % 2
    if kind == "tan" and rr % 1 == Fraction(1, 2):
        raise TangentPole(f"tan(pi*{r}) is a pole")
    with mp.workprec(_bits(p, 24)):
        if rr.denominator == 1:  # r integer: sin 0, cos +-1, tan 0
            if kind == "sin":
                return _wrap(mpf(0), p)
            if kind == "cos":
                return _wrap(mpf(1) if rr == 0 else mpf(-1), p)
            return _wrap(mpf(0), p)
        arg = mpf(rr.numerator) / rr.denominator
        if kind == "sin":
            v = mp.sinpi(arg)
        elif kind == "cos":
            v = mp.cospi(arg) if rr % 1 != Fraction(1, 2) else mpf(0)
        else:
            v = mp.sinpi(arg) / mp.cospi(arg)
        return _wrap(v, p)


# ---------------------------------------------------------------------------
# AGM and the complete elliptic integral


def agm(a, b, p: Precision) -> BigReal:
    """Arithmetic-geometric mean of positive a, b; quadratic convergence."""
    with mp.workprec(_bits(p, 24)):
        x, y = mpf(a), mpf(b)
        if x <= 0 or y <= 0:
            raise DomainError("agm requires positive operands")
        eps = mpf(2) ** (-(p.prec_bits + 8))
        for _ in range(10 + int(log2(p.prec_bits + 2)) * 4):
            if abs(x - y) <= eps * abs(x):
                break
            x, y = (x + y) / 2, mp.sqrt(x * y)
        return _wrap((x + y) / 2, p)


def elliptic_k_agm(m, p: Precision) -> BigReal:
    """Complete elliptic integral K(m) = int_0^(pi/2) dphi/sqrt(1 - m sin^2 phi).

    Parameter convention: m is the *parameter* (the square of the modulus),
    0 <= m < 1.  Evaluated as pi / (2 agm(1, sqrt(1-m))).
    """
    mf = Fraction(m) if isinstance(m, (int, Fraction)) else None
    with mp.workprec(_bits(p, 24)):
        mv = (mpf(mf.numerator) / mf.denominator) if mf is not None else mpf(m)
        if not 0 <= mv < 1:
            raise DomainError("elliptic_k_agm requires 0 <= m < 1")
        ag = agm(mpf(1), mp.sqrt(1 - mv), p)
        return _wrap(mp.pi / (2 * ag.value), p)
