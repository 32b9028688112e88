"""The +-1 automatic weight sequences and their summatory functions.

Three weight sequences drive every product in this library:

* the regular paperfolding sequence  e(2n) = (-1)^n,  e(2n+1) = e(n),
  equivalently e(n) = (-1)^k where n+1 = 2^j (2k+1);
* the Thue-Morse sequence  (-1)^(binary digit sum of n);
* the plain alternating sign (-1)^n.

Everything here is exact integer arithmetic.  Terms are O(log n) via the
2-adic closed forms rather than memoised recursion, so sparse indices such
as 2^j*k used by the level decomposition in ``products`` stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np


class SeqKind(Enum):
    """Tag for the three supported +-1 weight sequences."""

    PAPERFOLD = "paperfold"
    THUE_MORSE = "thuemorse"
    ALTERNATING_SIGN = "altsign"


@dataclass(frozen=True)
class SummatoryValue:
    """Exact partial sum S = sum_{0 <= k < n} u_k of a weight sequence."""

    n: int
    S: int


def digit_sum(n: int) -> int:
    """Sum of the binary digits of n (the number of set bits)."""
    if n < 0:
        raise ValueError("digit_sum requires n >= 0")
    return int(n).bit_count()


def seq_term(kind: SeqKind, n: int) -> int:
    """n-th term (+1 or -1) of the given weight sequence, 0-based."""
    if n < 0:
        raise ValueError("sequence index must be >= 0")
    if kind is SeqKind.PAPERFOLD:
        # n+1 = 2^j (2k+1); the term is (-1)^k, i.e. +1 iff the odd part
        # of n+1 is 1 mod 4.
        x = n + 1
        odd = x >> _trailing_zeros(x)
        return 1 if odd & 3 == 1 else -1
    if kind is SeqKind.THUE_MORSE:
        return 1 if digit_sum(n) % 2 == 0 else -1
    return 1 if n % 2 == 0 else -1


def _trailing_zeros(x: int) -> int:
    return (x & -x).bit_length() - 1


def level_index(n: int) -> tuple[int, int]:
    """The unique (j, k) with n+1 = 2^j (2k+1); paperfold term is (-1)^k."""
    x = n + 1
    j = _trailing_zeros(x)
    return j, (x >> (j + 1))


def summatory(kind: SeqKind, n: int) -> SummatoryValue:
    """Exact S(n) = sum_{0 <= k < n} of the sequence, computed in O(log n).

    Paperfold uses S(2n) = S(n) + [n odd] and S(2n+1) = S(2n) + (-1)^n;
    Thue-Morse partial sums vanish at even n and equal m_{(n-1)/2} at odd n.
    """
    if n < 0:
        raise ValueError("summatory requires n >= 0")
    if kind is SeqKind.ALTERNATING_SIGN:
        return SummatoryValue(n, (1 - (-1) ** n) // 2)
    if kind is SeqKind.THUE_MORSE:
        s = 0 if n % 2 == 0 else seq_term(SeqKind.THUE_MORSE, (n - 1) // 2)
        return SummatoryValue(n, s)
    return SummatoryValue(n, _paperfold_summatory(n))


def _paperfold_summatory(n: int) -> int:
    # Unwind n -> n // 2, collecting the exact increments of
    # S(2m) = S(m) + [m odd] and S(2m+1) = S(2m) + (-1)^m.
    acc = 0
    while n > 0:
        m, r = divmod(n, 2)
        if r == 1:
            acc += 1 if m % 2 == 0 else -1
        acc += m % 2
        n = m
    return acc


def paperfold_signs(start: int, stop: int) -> np.ndarray:
    """Vector of paperfold terms e_n for n in [start, stop), values +-1 (int8)."""
    x = np.arange(start + 1, stop + 1, dtype=np.int64)
    odd = x // (x & -x)
    return np.where(odd & 3 == 1, 1, -1).astype(np.int8)


def thue_morse_signs(start: int, stop: int) -> np.ndarray:
    """Vector of Thue-Morse terms (-1)^s(n) for n in [start, stop) (int8)."""
    x = np.arange(start, stop, dtype=np.uint64)
    parity = np.bitwise_count(x) & 1
    return np.where(parity == 0, 1, -1).astype(np.int8)


def alternating_signs(start: int, stop: int) -> np.ndarray:
    """Vector of (-1)^n for n in [start, stop) (int8)."""
    x = np.arange(start, stop, dtype=np.int64)
    return np.where(x & 1 == 0, 1, -1).astype(np.int8)


def signs(kind: SeqKind, start: int, stop: int) -> np.ndarray:
    """Vectorised sequence terms for n in [start, stop)."""
    if kind is SeqKind.PAPERFOLD:
        return paperfold_signs(start, stop)
    if kind is SeqKind.THUE_MORSE:
        return thue_morse_signs(start, stop)
    return alternating_signs(start, stop)


@dataclass(frozen=True)
class SummatoryBoundReport:
    """Result of scanning |S(n)| against the bound 1 + log2(n)."""

    n_max: int
    max_ratio: float
    worst_n: int
    bound_holds: bool


def summatory_bound_report(n_max: int, chunk: int = 1 << 20) -> SummatoryBoundReport:
    """Scan 1 <= n <= n_max checking |S(n)| <= 1 + log2(n) for paperfold.

    The comparison is exact: for integer |S| >= 1 the bound is equivalent
    to 2^(|S|-1) <= n.  The reported ratio uses floats only for display.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    carry = 0
    best_ratio = -1.0
    worst_n = 1
    holds = True
    for lo in range(0, n_max, chunk):
        hi = min(lo + chunk, n_max)
        cums = np.cumsum(paperfold_signs(lo, hi), dtype=np.int64) + carry
        carry = int(cums[-1])
        ns = np.arange(lo + 1, hi + 1, dtype=np.int64)
        absS = np.abs(cums)
        # exact check: |S| <= 1  or  2^(|S|-1) <= n
        big = absS >= 1
        if np.any((np.int64(1) << np.maximum(absS - 1, 0))[big] > ns[big]):
            holds = False
        ratios = absS / (1.0 + np.log2(ns))
        i = int(np.argmax(ratios))
        if ratios[i] > best_ratio:
            best_ratio = float(ratios[i])
            worst_n = int(ns[i])
    return SummatoryBoundReport(n_max, best_ratio, worst_n, holds)


def summatory_bound_holds(n: int, S: int) -> bool:
    """Exact form of |S| <= 1 + log2(n) for a single value."""
    a = abs(S)
    return n >= 1 and (a <= 1 or (1 << (a - 1)) <= n)
