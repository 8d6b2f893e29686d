"""Attacker-side access to an encryption machine with an unknown key."""
from __future__ import annotations

from typing import Callable

import numpy as np

from ..cipher import Key, as_image, encrypt
from ..errors import AttackFailed


class EncryptionOracle:
    """Counts queries to an encryption callable.

    Attacks only ever see this object; the key stays inside the closure built
    by :func:`make_oracle`.
    """

    def __init__(self, encrypt_fn: Callable[[np.ndarray], np.ndarray], max_queries: int | None = None):
        self._encrypt = encrypt_fn
        self.queries = 0
        self.max_queries = max_queries

    def __call__(self, image) -> np.ndarray:
        if self.max_queries is not None and self.queries >= self.max_queries:
            raise AttackFailed(f"oracle query budget of {self.max_queries} exhausted",
                               {"queries": self.queries})
        self.queries += 1
        return as_image(self._encrypt(as_image(image)))


def make_oracle(key, max_queries: int | None = None) -> EncryptionOracle:
    key = Key(*key).checked()
    return EncryptionOracle(lambda img: encrypt(img, key), max_queries)
