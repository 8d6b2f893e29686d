"""Equivalent keys, effective key-space size and weak keys."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cipher import LUCAS_PERIOD, Key
from .numbertheory import BoundCase, arnold_period


@dataclass(frozen=True)
class CanonicalKey:
    T: int
    S: int
    period: int

    @property
    def key(self) -> Key:
        return Key(self.T, self.S)

    def __iter__(self):
        # unpacks like a Key so it can be passed to encrypt/decrypt directly
        return iter((self.T, self.S))

    def __str__(self) -> str:
        return f"T={self.T} S={self.S} (period m={self.period})"


@dataclass(frozen=True)
class KeyspaceReport:
    size: int
    period: int
    keystream_period: int
    key_space_size: int
    weak_key_probability: Fraction
    bound_case: BoundCase
    bound_size: Fraction

    @property
    def log2_size(self) -> float:
        return math.log2(self.key_space_size)

    def __str__(self) -> str:
        return f"N={self.size} m={self.period} Ks={self.key_space_size} (~2^{self.log2_size:.2f})"


def canonicalize(key, size: int) -> CanonicalKey:
    key = Key(*key).checked()
    m = arnold_period(size).period
    return CanonicalKey(key.T % m, key.S % LUCAS_PERIOD, m)


def key_space_size(size: int) -> KeyspaceReport:
    info = arnold_period(size)
    return KeyspaceReport(
        size=size,
        period=info.period,
        keystream_period=LUCAS_PERIOD,
        key_space_size=info.period * LUCAS_PERIOD,
        weak_key_probability=Fraction(1, info.period),
        bound_case=info.bound_case,
        bound_size=info.bound_value * LUCAS_PERIOD,
    )


def is_weak_key(key, size: int) -> bool:
    """True when the scrambling rounds are a multiple of the period.

    Such a key only masks, so encrypting twice gives back the plaintext.
    """
    key = Key(*key).checked()
    return key.T % arnold_period(size).period == 0


def weak_key_probability(size: int) -> Fraction:
    return Fraction(1, arnold_period(size).period)
