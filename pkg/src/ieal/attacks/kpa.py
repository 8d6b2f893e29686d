"""Known-plaintext attack from a single plaintext/ciphertext pair.

Pixel (0, 0) is the only fixed point of the Arnold map, so
``plain[0,0] ^ cipher[0,0]`` leaks the first keystream byte. Its positions in
the Lucas cycle form a dictionary for S of size 1, 2, 3 or 16. Each start is
tested by unmasking and comparing histograms; survivors are re-scrambled one
round at a time until the plaintext appears after n rounds, giving T = m - n.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..cipher import LUCAS_CYCLE, LUCAS_PERIOD, as_image, decrypt, mask, scramble
from ..errors import AttackFailed, DomainError
from ..image_io import histogram
from ..keyspace import CanonicalKey
from ..numbertheory import arnold_period
from .cycle import start_candidates
from .report import AttackReport


@dataclass(frozen=True)
class DictionaryStats:
    positions: dict[int, int]            # dictionary size -> cycle positions with that size
    probability: dict[int, Fraction]     # dictionary size -> positions / 384


def dictionary_stats() -> DictionaryStats:
    occurrences = Counter(LUCAS_CYCLE.tolist())
    by_size = Counter(occurrences[v] for v in LUCAS_CYCLE.tolist())
    positions = dict(sorted(by_size.items()))
    return DictionaryStats(positions, {k: Fraction(v, LUCAS_PERIOD) for k, v in positions.items()})


def kpa(plain, cipher, max_steps: int | None = None) -> AttackReport:
    """Recover the canonical key of ``cipher = encrypt(plain, key)``.

    ``max_steps`` caps the scrambling-only search (default: the period m).
    """
    plain, cipher = as_image(plain), as_image(cipher)
    if plain.shape != cipher.shape:
        raise DomainError("plaintext and ciphertext differ in size")
    started = time.perf_counter()
    n_side = plain.shape[0]
    m = arnold_period(n_side).period
    max_steps = m if max_steps is None else max_steps

    s0 = int(plain[0, 0] ^ cipher[0, 0])
    dictionary = start_candidates(s0)
    target_hist = histogram(plain)
    degenerate = np.count_nonzero(target_hist) == 1
    evidence = {"s0": s0, "dictionary": dictionary, "degenerate": degenerate}

    unmasked = {s: mask(cipher, s) for s in dictionary}
    if degenerate:
        # a flat plaintext makes the histogram test meaningless
        survivors = list(dictionary)
    else:
        survivors = [s for s, img in unmasked.items() if np.array_equal(histogram(img), target_hist)]
    evidence["histogram_survivors"] = survivors

    for s in survivors:
        cur = unmasked[s]
        for n in range(1, max_steps + 1):
            cur = scramble(cur, 1)
            if not np.array_equal(cur, plain):
                continue
            t = (m - n) % m
            if np.array_equal(decrypt(cipher, (t, s)), plain):
                key = CanonicalKey(t, s, m)
                evidence.update(cycle_n=n, candidates=dictionary,
                                elapsed_ms=(time.perf_counter() - started) * 1000)
                return AttackReport("kpa", key, plain.copy(), evidence)
    evidence["elapsed_ms"] = (time.perf_counter() - started) * 1000
    raise AttackFailed("no dictionary candidate reproduces the ciphertext", evidence)
