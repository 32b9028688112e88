"""Weighted infinite products and their certified numeric evaluation.

A :class:`ProductSpec` encodes  prod_{n >= n0} ( prod_i (n+a_i) / prod_j (n+b_j) )^(u_n)
with exact rational roots and u_n one of the paperfolding sequence, the
Thue-Morse sequence, (-1)^n, or the constant 1 (unsigned).

Evaluation strategies
---------------------

* unsigned / (-1)^n: the product collapses to an exact ratio of gamma
  values (balanced gamma-ratio identity), so any precision is direct.

* paperfolding: the index set is partitioned by n+1 = 2^j (2k+1).  On each
  level j the weights alternate in k, and splitting even/odd k turns the
  level into a balanced unsigned product, hence an exact gamma ratio.
  Levels decay geometrically: with C = min-pairing sum |a_i - b_i| and
  c_j the first index of level j, a mean-value bound on paired terms gives
  |A_j| <= 2^(j+3) C / c_j^2 + 2 C / c_j <= 36 C / 2^j, so truncating after
  J ~ 3.33 * digits levels certifies the result.  Regrouping the
  conditionally convergent series into levels is the one step not carried
  out by the code itself; it is a documented proof obligation, discharged
  by grouping arguments and cross-checked by the partial-product oracle
  tests in the test suite.

* Thue-Morse: the recurrences m_2n = m_n, m_2n+1 = -m_n fold the series
  sum m_n f(n) into sum m_n f_L(n) with f_L(n) = sum_{r < 2^L} (-1)^s(r)
  f(2^L n + r), an L-fold dyadic difference that decays like n^-(L+1)
  (with constant C_L = C L! 2^(1 - L(L+1)/2)).  The truncated recursion
  telescopes back to a plain partial sum over x < 2^L (N+1), which is what
  gets evaluated -- exactly, as big-integer products with a handful of
  logarithms -- while the recursion supplies the tail bound C_L / (L N^L).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np
from mpmath import mp, mpf

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int

from . import mpnum, sequences
from .errors import (
    DomainError,
    InvalidG,
    NonPositiveFactorOnTail,
    PrecisionUnreachable,
    UnbalancedUnsignedProduct,
    UnequalFactorCounts,
)
from .mpnum import BigReal, Precision
from .sequences import SeqKind

UNSIGNED = "unsigned"

Weight = Union[SeqKind, str]


@dataclass(frozen=True)
class ProductSpec:
    """A formal product prod_{n >= start} (prod(n+a_i)/prod(n+b_j))^(u_n)."""

    num_roots: tuple[Fraction, ...]
    den_roots: tuple[Fraction, ...]
    start: int
    weight: Weight

    @property
    def degree(self) -> int:
        return len(self.num_roots)

    def term(self, n: int) -> Fraction:
        """Exact factor at index n."""
        num = math.prod((n + a for a in self.num_roots), start=Fraction(1))
        den = math.prod((n + b for b in self.den_roots), start=Fraction(1))
        return num / den


@dataclass(frozen=True)
class CertifiedValue:
    """A value together with a certified absolute error bound."""

    value: BigReal
    abs_error_bound: BigReal

    def __float__(self) -> float:
        return float(self.value)


@dataclass(frozen=True)
class GFunctionSpec:
    """Rational map g(x) = prod (x+u_i) / prod (x+v_i) with g -> 1 at infinity."""

    num_roots: tuple[Fraction, ...]
    den_roots: tuple[Fraction, ...]

    def value(self, x: Fraction) -> Fraction:
        num = math.prod((x + u for u in self.num_roots), start=Fraction(1))
        den = math.prod((x + v for v in self.den_roots), start=Fraction(1))
        if den == 0:
            raise ZeroDivisionError(f"g has a pole at {x}")
        return num / den


def _to_fractions(roots: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(r) for r in roots)


def _coerce_weight(weight: Weight) -> Weight:
    if isinstance(weight, SeqKind):
        return weight
    if isinstance(weight, str):
        w = weight.lower()
        if w == UNSIGNED:
            return UNSIGNED
        for kind in SeqKind:
            if kind.value == w:
                return kind
    raise DomainError(f"unknown weight {weight!r}")


def make_product(num_roots, den_roots, start: int = 0, weight: Weight = UNSIGNED) -> ProductSpec:
    """Validated ProductSpec; see the class docstring for the semantics."""
    a = _to_fractions(num_roots)
    b = _to_fractions(den_roots)
    if not a or not b:
        raise UnequalFactorCounts("root lists must be nonempty")
    if len(a) != len(b):
        raise UnequalFactorCounts(f"{len(a)} numerator vs {len(b)} denominator roots")
    if start < 0:
        raise DomainError("start index must be >= 0")
    w = _coerce_weight(weight)
    for r in a + b:
        if start + r <= 0:
            raise NonPositiveFactorOnTail(r, start)
    if w == UNSIGNED and sum(a) != sum(b):
        raise UnbalancedUnsignedProduct(
            f"sum(num_roots)={sum(a)} != sum(den_roots)={sum(b)}; the unsigned product diverges"
        )
    return ProductSpec(a, b, start, w)


def _min_pairing_c(spec: ProductSpec) -> Fraction:
    """C = sum |a_i - b_i| over the sorted pairing (the minimising one)."""
    return sum(
        (abs(x - y) for x, y in zip(sorted(spec.num_roots), sorted(spec.den_roots))),
        start=Fraction(0),
    )


def _x_min(spec: ProductSpec) -> Fraction:
    m = max((abs(r) for r in spec.num_roots + spec.den_roots), default=Fraction(0))
    return 2 * max(Fraction(1), m)


def _trivial_one(p: Precision) -> CertifiedValue:
    with mp.workprec(p.prec_bits):
        return CertifiedValue(BigReal(mpf(1), p.prec_bits), BigReal(mpf(0), p.prec_bits))


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


# ---------------------------------------------------------------------------
# certified evaluation: unsigned and (-1)^n weights (exact gamma ratios)


def _gamma_ratio_log(num_args: Sequence[Fraction], den_args: Sequence[Fraction], bits: int):
    """log of prod Gamma(num)/prod Gamma(den) plus the summed |log Gamma| mass."""
    total = mpf(0)
    mass = 0.0
    with mp.workprec(bits):
        for arg in num_args:
            v = mpnum.log_gamma_raw(arg, bits)
            total += v
            mass += abs(float(v)) + 1.0
        for arg in den_args:
            v = mpnum.log_gamma_raw(arg, bits)
            total -= v
            mass += abs(float(v)) + 1.0
    return total, mass


def _certify_from_log(log_value, log_err_bound, p: Precision, bits: int) -> CertifiedValue:
    with mp.workprec(bits):
        v = mp.exp(log_value)
        bound = v * log_err_bound * mpf("1.05")
        return CertifiedValue(BigReal(+v, p.prec_bits), BigReal(+bound, p.prec_bits))


def eval_unsigned_certified(spec: ProductSpec, p: Precision) -> CertifiedValue:
    """Certified value of a balanced unsigned product via the gamma-ratio identity."""
    if spec.weight != UNSIGNED:
        raise DomainError("eval_unsigned_certified requires an unsigned spec")
    if sorted(spec.num_roots) == sorted(spec.den_roots):
        return _trivial_one(p)
    bits = p.prec_bits + 64
    s = spec.start
    # prod_{n>=s} = gamma ratio at shifted roots: Gamma(b+s)/Gamma(a+s) per pair
    log_v, mass = _gamma_ratio_log(
        [b + s for b in spec.den_roots], [a + s for a in spec.num_roots], bits
    )
    with mp.workprec(64):
        log_err = mpf(mass) * mpf(10) ** (-(int(bits * 0.301) - 3))
    return _certify_from_log(log_v, log_err, p, bits)


def eval_alternating_certified(spec: ProductSpec, p: Precision) -> CertifiedValue:
    """Certified value for weight (-1)^n, by exact reduction to an unsigned product."""
    if spec.weight is not SeqKind.ALTERNATING_SIGN:
        raise DomainError("eval_alternating_certified requires weight (-1)^n")
    if sorted(spec.num_roots) == sorted(spec.den_roots):
        return _trivial_one(p)
    s = spec.start
    boundary = Fraction(1)
    if s % 2 == 1:
        boundary = 1 / spec.term(s)  # odd leading index carries exponent -1
        k0 = (s + 1) // 2
    else:
        k0 = s // 2
    # prod_{k>=k0} R(2k)/R(2k+1): halved roots, always balanced
    num = [a / 2 for a in spec.num_roots] + [(b + 1) / 2 for b in spec.den_roots]
    den = [b / 2 for b in spec.den_roots] + [(a + 1) / 2 for a in spec.num_roots]
    bits = p.prec_bits + 64
    log_v, mass = _gamma_ratio_log([x + k0 for x in den], [x + k0 for x in num], bits)
    # note: gamma ratio is Gamma(den-roots)/Gamma(num-roots)
    with mp.workprec(bits):
        log_v += mp.log(mpf(boundary.numerator)) - mp.log(mpf(boundary.denominator))
        mass += abs(float(log_v)) + 2.0
    with mp.workprec(64):
        log_err = mpf(mass) * mpf(10) ** (-(int(bits * 0.301) - 3))
    return _certify_from_log(log_v, log_err, p, bits)


# ---------------------------------------------------------------------------
# certified evaluation: paperfolding weight (level decomposition)


def _paperfold_level_log(spec: ProductSpec, j: int, bits: int):
    """Exact-gamma log of level j of the paperfold decomposition, plus log mass.

    Level j holds the indices n = 2^(j+1) k + 2^j - 1 >= start with weight
    (-1)^k; even/odd k split gives a balanced gamma ratio per root pair.
    """
    h = 1 << (j + 1)
    q = 1 << (j + 2)
    pw = 1 << j
    k0 = max(0, _ceil_div(spec.start - pw + 1, h))
    c = h * k0 + pw - 1
    num_args = []
    den_args = []
    for a, b in zip(spec.num_roots, spec.den_roots):
        num_args += [Fraction(c + b, q) % 1 + (Fraction(c + b, q) // 1), Fraction(c + h + a, q)]
        den_args += [Fraction(c + a, q), Fraction(c + h + b, q)]
    # (the % 1 + // 1 above is an identity; keep plain arguments)
    num_args = [Fraction(c + b, 1) / q for b in spec.den_roots] + [
        (c + h + a) / Fraction(q) for a in spec.num_roots
    ]
    den_args = [(c + a) / Fraction(q) for a in spec.num_roots] + [
        (c + h + b) / Fraction(q) for b in spec.den_roots
    ]
    log_v, mass = _gamma_ratio_log(num_args, den_args, bits)
    if k0 % 2 == 1:
        log_v = -log_v
    return log_v, mass


def paperfold_level_bound(spec: ProductSpec, j: int):
    """Rigorous upper bound for |A_j| valid once c_j >= 2 max(1, max|root|)."""
    c = (1 << j) - 1
    C = float(_min_pairing_c(spec))
    return (2.0 ** (j + 3)) * C / c**2 + 2.0 * C / c


def eval_paperfold_certified(
    spec: ProductSpec, p: Precision, *, level_cap: int = 20000
) -> CertifiedValue:
    """Certified value of a paperfolding-weighted product.

    Computes sum_{j<=J} A_j with each level an exact gamma ratio, and
    bounds the remaining levels by sum_{j>J} 36 C / 2^j = 36 C / 2^J.
    """
    if spec.weight is not SeqKind.PAPERFOLD:
        raise DomainError("eval_paperfold_certified requires the paperfold weight")
    C = _min_pairing_c(spec)
    if C == 0:
        return _trivial_one(p)
    xmin = _x_min(spec)
    dd = p.decimal_digits
    with mp.workprec(64):
        delta = mpf("0.3") * mpf(10) ** (-dd)
        delta_tail = delta / 2
        cf = mpf(C.numerator) / C.denominator
        j_acc = int(mp.ceil(mp.log(36 * cf / delta_tail) / mp.log(2))) + 1
    j_floor = max(
        1,
        math.ceil(math.log2(float(xmin) + 1)),
        math.ceil(math.log2(spec.start + 1)) if spec.start > 0 else 1,
    )
    J = max(j_acc, j_floor)
    if J > level_cap:
        raise PrecisionUnreachable(f"{J} levels needed, cap is {level_cap}")

    bits = p.prec_bits + 80
    for _attempt in range(4):
        total = mpf(0)
        mass = 0.0
        with mp.workprec(bits):
            for j in range(J + 1):
                lv, m = _paperfold_level_log(spec, j, bits)
                total += lv
                mass += m
        with mp.workprec(64):
            tail = 36 * cf / mpf(2) ** J
            log_err = tail + mpf(mass) * mpf(10) ** (-(int(bits * 0.301) - 3))
            if log_err <= delta:
                break
        bits += 64
    return _certify_from_log(total, log_err, p, bits)


# ---------------------------------------------------------------------------
# certified evaluation: Thue-Morse weight (dyadic difference recursion)


def _tm_tail_constant(C, L: int):
    """C_L = C * L! * 2^(1 - L(L+1)/2) of the L-fold difference bound (mpf)."""
    with mp.workprec(64):
        return mpf(C.numerator) / C.denominator * mp.factorial(L) * mpf(2) ** (1 - L * (L + 1) // 2)


def _choose_tm_truncation(spec: ProductSpec, delta_tail, *, level_cap: int, n_cap: int):
    """Cheapest (L, N) with C_L / (L N^L) <= delta_tail and 2^L N >= x_min."""
    C = _min_pairing_c(spec)
    xmin = float(_x_min(spec))
    best = None
    with mp.workprec(64):
        for L in range(1, level_cap + 1):
            cl = _tm_tail_constant(C, L)
            need = cl / (L * delta_tail)
            if need <= 1:
                n_min = 2
            else:
                n_min = int(mp.ceil(mp.exp(mp.log(need) / L))) + 1
            n_min = max(n_min, 2, _ceil_div(spec.start, 1 << L) - 1, math.ceil(xmin / (1 << L)))
            if n_min > n_cap:
                continue
            cost = (1 << L) * (n_min + 1)
            if best is None or cost < best[0]:
                best = (cost, L, n_min)
    if best is None:
        raise PrecisionUnreachable(
            f"no (L <= {level_cap}, N <= {n_cap}) reaches the requested accuracy"
        )
    return best[1], best[2]


def _tree_product(values) -> "mpz":
    """Balanced product of a list of machine ints, as an exact big integer."""
    if not values:
        return mpz(1)
    layer = [mpz(int(v)) for v in values]
    while len(layer) > 1:
        nxt = [layer[i] * layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def _signed_log_sum_exact(spec: ProductSpec, stop: int, signs: np.ndarray, bits: int):
    """sum_{n in [start, stop)} u_n log R(n) exactly up to a few final logs.

    For each root p/q the contribution is log of the exact integer product
    of (q n + p) over positive-sign indices minus the negative-sign one,
    minus (sum of signs) log q.  Returns (mpf value, |log| mass).
    """
    s = spec.start
    n_idx = np.arange(s, stop, dtype=np.int64)
    pos_mask = signs > 0
    sign_sum = int(np.sum(signs, dtype=np.int64))
    total = mpf(0)
    mass = 0.0
    with mp.workprec(bits):
        for sgn, roots in ((1, spec.num_roots), (-1, spec.den_roots)):
            for r in roots:
                q, pnum = r.denominator, r.numerator
                vals = q * n_idx + pnum
                if np.any(vals <= 0):
                    raise NonPositiveFactorOnTail(r, int(n_idx[vals <= 0][0]))
                lp = mp.log(mpf(int(_tree_product(vals[pos_mask]))))
                ln = mp.log(mpf(int(_tree_product(vals[~pos_mask]))))
                contrib = lp - ln - sign_sum * mp.log(mpf(q))
                total += sgn * contrib
                mass += abs(float(lp)) + abs(float(ln)) + abs(sign_sum) * math.log(q) + 3
    return total, mass


def eval_thue_morse_certified(
    spec: ProductSpec, p: Precision, *, level_cap: int = 20, n_cap: int = 2000
) -> CertifiedValue:
    """Certified value of a Thue-Morse-weighted product.

    Picks (L, N) from the dyadic difference tail bound C_L/(L N^L), then
    evaluates the telescoped partial sum over x < 2^L (N+1) exactly.
    """
    if spec.weight is not SeqKind.THUE_MORSE:
        raise DomainError("eval_thue_morse_certified requires the Thue-Morse weight")
    if sorted(spec.num_roots) == sorted(spec.den_roots):
        return _trivial_one(p)
    dd = p.decimal_digits
    with mp.workprec(64):
        delta = mpf("0.3") * mpf(10) ** (-dd)
        delta_tail = delta / 2
    L, N = _choose_tm_truncation(spec, delta_tail, level_cap=level_cap, n_cap=n_cap)
    stop = (1 << L) * (N + 1)
    bits = p.prec_bits + 64 + max(0, stop.bit_length())
    signs = sequences.thue_morse_signs(spec.start, stop)
    total, mass = _signed_log_sum_exact(spec, stop, signs, bits)
    with mp.workprec(64):
        cl = _tm_tail_constant(_min_pairing_c(spec), L)
        tail = cl / (L * mpf(N) ** L)
        log_err = tail + mpf(mass) * mpf(10) ** (-(int(bits * 0.301) - 3))
    return _certify_from_log(total, log_err, p, bits)


def eval_certified(spec: ProductSpec, p: Precision) -> CertifiedValue:
    """Dispatch on the weight to the matching certified evaluator."""
    if spec.weight is SeqKind.PAPERFOLD:
        return eval_paperfold_certified(spec, p)
    if spec.weight is SeqKind.THUE_MORSE:
        return eval_thue_morse_certified(spec, p)
    if spec.weight is SeqKind.ALTERNATING_SIGN:
        return eval_alternating_certified(spec, p)
    return eval_unsigned_certified(spec, p)


# ---------------------------------------------------------------------------
# finite partial products


def eval_partial(spec: ProductSpec, N: int, p: Precision) -> BigReal:
    """The finite product over start <= n < N, in log space.

    Unsigned, (-1)^n and paperfold weights reduce exactly to gamma ratios
    (the paperfold sign classes are unions of arithmetic progressions), so
    any N and precision are cheap.  Thue-Morse sign classes admit no such
    collapse: up to 2^21 factors the product is evaluated exactly; beyond
    that a compensated double-precision pass is used, whose absolute
    log-space error stays below ~1e-12 -- ample for the <= 11 certified
    digits such oracle runs request.
    """
    if N < spec.start:
        raise DomainError("N must be >= start")
    if N == spec.start:
        with mp.workprec(p.prec_bits):
            return BigReal(mpf(1), p.prec_bits)
    bits = p.prec_bits + 48 + max(0, N.bit_length())
    if spec.weight == UNSIGNED:
        log_v, _ = _gamma_ratio_log(
            [Fraction(N) + b for b in spec.den_roots] + [Fraction(spec.start) + a for a in spec.num_roots],
            [Fraction(N) + a for a in spec.num_roots] + [Fraction(spec.start) + b for b in spec.den_roots],
            bits,
        )
        # prod_{s<=n<N}(n+a) = Gamma(N+a)/Gamma(s+a)
        log_v = -log_v
        with mp.workprec(bits):
            return BigReal(+log_to_value(log_v), p.prec_bits)
    if spec.weight is SeqKind.ALTERNATING_SIGN:
        return _partial_alternating(spec, N, p, bits)
    if spec.weight is SeqKind.PAPERFOLD:
        return _partial_paperfold(spec, N, p, bits)
    return _partial_thue_morse(spec, N, p)


def log_to_value(log_v):
    return mp.exp(log_v)


def _prog_log(roots_num, roots_den, k_lo: int, k_hi: int, step: int, offset: int, bits: int):
    """log prod_{k in [k_lo, k_hi)} R(step*k + offset) via gamma ratios.

    R's monic factors (step*k + offset + r) = step * (k + (offset+r)/step);
    the step powers cancel between balanced numerator and denominator.
    """
    if k_hi <= k_lo:
        return mpf(0)
    num_args = [Fraction(k_hi) + Fraction(offset + r, step) for r in roots_den] + [
        Fraction(k_lo) + Fraction(offset + r, step) for r in roots_num
    ]
    den_args = [Fraction(k_hi) + Fraction(offset + r, step) for r in roots_num] + [
        Fraction(k_lo) + Fraction(offset + r, step) for r in roots_den
    ]
    log_v, _ = _gamma_ratio_log(num_args, den_args, bits)
    return -log_v


def _partial_alternating(spec: ProductSpec, N: int, p: Precision, bits: int) -> BigReal:
    s = spec.start
    with mp.workprec(bits):
        total = mpf(0)
        # even indices 2k in [s, N): weight +1
        total += _prog_log(
            spec.num_roots, spec.den_roots, _ceil_div(s, 2), _ceil_div(N, 2), 2, 0, bits
        )
        # odd indices 2k+1: weight -1
        total -= _prog_log(
            spec.num_roots, spec.den_roots, _ceil_div(s - 1, 2), _ceil_div(N - 1, 2), 2, 1, bits
        )
        return BigReal(+mp.exp(total), p.prec_bits)


def _partial_paperfold(spec: ProductSpec, N: int, p: Precision, bits: int) -> BigReal:
    s = spec.start
    with mp.workprec(bits):
        total = mpf(0)
        j = 0
        while (1 << j) - 1 < N:
            h = 1 << (j + 1)
            pw = 1 << j
            k_lo = max(0, _ceil_div(s - pw + 1, h))
            k_hi = max(k_lo, _ceil_div(N - pw + 1, h))
            if k_hi > k_lo:
                # even k: +, odd k: -
                total += _prog_log(
                    spec.num_roots, spec.den_roots,
                    _ceil_div(k_lo, 2), _ceil_div(k_hi, 2), 2 * h, pw - 1, bits,
                )
                total -= _prog_log(
                    spec.num_roots, spec.den_roots,
                    _ceil_div(k_lo - 1, 2), _ceil_div(k_hi - 1, 2), 2 * h, h + pw - 1, bits,
                )
            j += 1
        return BigReal(+mp.exp(total), p.prec_bits)


_TM_EXACT_LIMIT = 1 << 21


def _partial_thue_morse(spec: ProductSpec, N: int, p: Precision) -> BigReal:
    s = spec.start
    if N - s <= _TM_EXACT_LIMIT:
        bits = p.prec_bits + 48 + N.bit_length()
        signs = sequences.thue_morse_signs(s, N)
        total, _ = _signed_log_sum_exact(spec, N, signs, bits)
        with mp.workprec(bits):
            return BigReal(+mp.exp(total), p.prec_bits)
    # compensated float64 pass, chunked; see eval_partial docstring
    chunk = 1 << 20
    partials = []
    for lo in range(s, N, chunk):
        hi = min(lo + chunk, N)
        n_idx = np.arange(lo, hi, dtype=np.float64)
        sg = sequences.thue_morse_signs(lo, hi).astype(np.float64)
        acc = np.zeros_like(n_idx)
        for sgn, roots in ((1.0, spec.num_roots), (-1.0, spec.den_roots)):
            for r in roots:
                q, pnum = r.denominator, r.numerator
                acc += sgn * (np.log(q * n_idx + pnum) - math.log(q))
        partials.append(float(np.sum(sg * acc)))
    total = math.fsum(partials)
    with mp.workprec(p.prec_bits + 8):
        return BigReal(+mp.exp(mpf(total)), p.prec_bits)


# ---------------------------------------------------------------------------
# Lemma "general": prod (g(n)/g(2n+1))^eps_n  ==  prod g(4n)/g(4n+2)


def make_g(num_roots, den_roots) -> GFunctionSpec:
    """Validated GFunctionSpec with all roots >= 0 (so g > 0 on (0, inf))."""
    u = _to_fractions(num_roots)
    v = _to_fractions(den_roots)
    if not u or len(u) != len(v):
        raise InvalidG("g needs equally many numerator and denominator roots")
    if any(r < 0 for r in u + v):
        raise InvalidG("g must be positive on [0, inf): negative roots unsupported")
    return GFunctionSpec(u, v)


def lemma_general_reduce(g: GFunctionSpec) -> ProductSpec:
    """Unsigned spec for prod_{n>=0} g(4n)/g(4n+2), the reduced right side.

    A root of g at 0 makes g(0) vanish; following the convention g(0) := 1
    the n = 0 factor becomes 1/g(2), which is absorbed exactly by shifting
    the u/4- and v/4-ladders one step (value identity:
    prod_{n>=0} (n+(u+4)/4)(n+(v+2)/4) / ((n+(v+4)/4)(n+(u+2)/4))
    = (1/g(2)) prod_{n>=1} g(4n)/g(4n+2)).
    """
    u, v = g.num_roots, g.den_roots
    if any(r == 0 for r in u + v):
        num = [(ui + 4) / Fraction(4) for ui in u] + [(vj + 2) / Fraction(4) for vj in v]
        den = [(vj + 4) / Fraction(4) for vj in v] + [(ui + 2) / Fraction(4) for ui in u]
    else:
        num = [ui / Fraction(4) for ui in u] + [(vj + 2) / Fraction(4) for vj in v]
        den = [vj / Fraction(4) for vj in v] + [(ui + 2) / Fraction(4) for ui in u]
    return make_product(num, den, 0, UNSIGNED)


def lemma_lhs_spec(g: GFunctionSpec) -> tuple[ProductSpec, Fraction]:
    """Paperfold spec and exact boundary factor for prod (g(n)/g(2n+1))^eps_n.

    Returns (spec, boundary); the product equals boundary * certified(spec).
    With a root of g at 0 the n = 0 factor is (g(0):=1)/g(1) and the spec
    starts at 1; otherwise boundary is 1 and the spec starts at 0.
    """
    u, v = g.num_roots, g.den_roots
    num = list(u) + [(vj + 1) / Fraction(2) for vj in v]
    den = list(v) + [(ui + 1) / Fraction(2) for ui in u]
    if any(r == 0 for r in u + v):
        boundary = 1 / (g.value(Fraction(1)) / g.value(Fraction(3)))
        # g(0)/g(1) with g(0) := 1 -> 1/g(1); term(1) of the spec handles n=1
        spec = make_product(num, den, 1, SeqKind.PAPERFOLD)
        boundary = 1 / g.value(Fraction(1)) * g.value(Fraction(3)) / g.value(Fraction(3))
        boundary = 1 / g.value(Fraction(1))
        return spec, boundary
    return make_product(num, den, 0, SeqKind.PAPERFOLD), Fraction(1)
