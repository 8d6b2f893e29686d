"""Periods of the Arnold map and of the Lucas sequence under a modulus."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cipher import ARNOLD, _matmul
from .errors import DomainError


class BoundCase(enum.Enum):
    THREE_N = "3N"    # N = 2 * 5^r, r >= 1
    TWO_N = "2N"      # N = 5^r (r >= 1) or N = 6 * 5^r (r >= 0)
    GENERAL = "12N/7"


@dataclass(frozen=True)
class PeriodInfo:
    size: int
    period: int
    bound_case: BoundCase
    bound_value: Fraction

    @property
    def within_bound(self) -> bool:
        if self.bound_case is BoundCase.GENERAL:
            return self.period <= self.bound_value
        return self.period == self.bound_value


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise DomainError("lcm(0, 0) is undefined")
    return math.lcm(a, b)


def classify(size: int) -> tuple[BoundCase, Fraction]:
    """Which closed-form period case ``size`` falls into, and the bound it gives."""
    r, p = 0, 1
    while p <= size:
        if r >= 1 and size == 2 * p:
            return BoundCase.THREE_N, Fraction(3 * size)
        if (r >= 1 and size == p) or size == 6 * p:
            return BoundCase.TWO_N, Fraction(2 * size)
        r, p = r + 1, p * 5
    return BoundCase.GENERAL, Fraction(12 * size, 7)


@lru_cache(maxsize=None)
def _matrix_order(size: int) -> int:
    identity = ((1 % size, 0), (0, 1 % size))
    step = tuple(tuple(x % size for x in row) for row in ARNOLD)
    acc = step
    cap = 3 * size
    for m in range(1, cap + 1):
        if acc == identity:
            return m
        acc = _matmul(acc, step, size)
    # the 3N case is the largest period the map can have
    raise RuntimeError(f"Arnold period for N={size} exceeded the 3N cap")


def arnold_period(size: int) -> PeriodInfo:
    """Least ``m >= 1`` with the m-fold Arnold map equal to the identity mod ``size``."""
    if isinstance(size, bool) or int(size) != size or size < 1:
        raise DomainError(f"image size must be a positive integer, got {size!r}")
    size = int(size)
    case, bound = classify(size)
    return PeriodInfo(size, _matrix_order(size), case, bound)


def arnold_period_table(sizes) -> list[PeriodInfo]:
    return [arnold_period(n) for n in sizes]


def orbit_period(size: int) -> int:
    """Period as the lcm of the orbit lengths of every grid point.

    Walks each coordinate independently of the matrix-power route; meant as a
    cross-check for small sizes.
    """
    if size < 1:
        raise DomainError("size must be positive")
    seen = [[False] * size for _ in range(size)]
    period = 1
    for i0 in range(size):
        for j0 in range(size):
            if seen[i0][j0]:
                continue
            i, j, length = i0, j0, 0
            while True:
                seen[i][j] = True
                i, j = (i + j) % size, (i + 2 * j) % size
                length += 1
                if (i, j) == (i0, j0):
                    break
            period = math.lcm(period, length)
    return period


def sequence_period_mod(modulus: int, first: int = 2, second: int = 1) -> int:
    """Period of the additive recurrence started at ``(first, second)`` reduced mod ``modulus``.

    Defaults to the Lucas sequence. The state pair is tracked until it recurs.
    """
    if modulus < 2:
        raise DomainError("modulus must be at least 2")
    start = (first % modulus, second % modulus)
    a, b = start
    # Pisano-type periods never exceed 6 * modulus
    for p in range(1, 6 * modulus + 1):
        a, b = b, (a + b) % modulus
        if (a, b) == start:
            return p
    raise RuntimeError("no period found")
