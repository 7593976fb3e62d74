"""Exact closed-form counts.

All results are Python ints. Every division is checked for exactness and a
remainder raises ``ArithmeticError``: on the valid domains these formulas are
integral, so a remainder means a bug upstream.
"""

from __future__ import annotations

import math
from typing import Optional, Union

from .paths import DomainError, parse_width


def binomial(n: int, r: int) -> int:
    """``C(n, r)``, zero outside ``0 <= r <= n``."""
    if n < 0 or r < 0 or r > n:
        return 0
    return math.comb(n, r)


def exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def _require_coprime(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise DomainError(f"need n, m >= 1, got ({n}, {m})")
    if math.gcd(n, m) != 1:
        raise DomainError(f"n={n} and m={m} are not coprime")


def d_nm(n: int, m: int) -> int:
    """Number of (n,m)-Dyck paths for coprime ``n, m``."""
    _require_coprime(n, m)
    return exact_div(binomial(n + m, n), n + m)


def f_nm_j(n: int, m: int, j: int) -> int:
    """Free (n,m)-paths with exactly ``j`` peaks."""
    if min(n, m, j) < 0:
        raise ValueError("parameters must be nonnegative")
    return binomial(n, j) * binomial(m, j)


def f_ud_nm_j(n: int, m: int, j: int) -> int:
    """Free (n,m)-paths with ``j`` peaks that start with U and end with D."""
    return binomial(n - 1, j - 1) * binomial(m - 1, j - 1)


def d_nm_j(n: int, m: int, j: int) -> int:
    """Rational Narayana number: coprime (n,m)-Dyck paths with ``j`` peaks."""
    _require_coprime(n, m)
    if j < 1:
        return 0
    return exact_div(binomial(n - 1, j - 1) * binomial(m - 1, j - 1), j)


def kary_count(k: int, n: int) -> int:
    """k-ary paths of order ``(k+1)n``."""
    if k < 1 or n < 0:
        raise ValueError(f"need k >= 1 and n >= 0, got k={k}, n={n}")
    return exact_div(binomial((k + 1) * n, n), k * n + 1)


def kary_peaks_count(k: int, n: int, j: int) -> int:
    """k-ary paths of order ``(k+1)n`` with exactly ``j`` peaks."""
    if k < 1 or n < 0:
        raise ValueError(f"need k >= 1 and n >= 0, got k={k}, n={n}")
    if j < 1:
        return 1 if n == 0 and j == 0 else 0
    return exact_div(binomial(n - 1, j - 1) * binomial(k * n, j - 1), j)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return exact_div(binomial(2 * n, n), n + 1)


def narayana(n: int, j: int) -> int:
    if n < 1 or j < 1:
        return 0
    return exact_div(binomial(n - 1, j - 1) * binomial(n, j - 1), j)


def delta_divides(a: Union[int, str, None], n: int) -> int:
    """1 when the all-horizontal path of order ``n`` exists, else 0.

    With horizontal steps disallowed only the empty path (``n = 0``) is
    step-free.
    """
    width: Optional[int] = parse_width(a)
    if width is None:
        return 1 if n == 0 else 0
    return 1 if n % width == 0 else 0
