"""Chosen-plaintext attack: one all-zero query for the mask, base-256 digit
images for the scrambling permutation."""
from __future__ import annotations

import time
from typing import NamedTuple

import numpy as np

from ..cipher import LUCAS_CYCLE, LUCAS_PERIOD, scramble_permutation
from ..errors import AttackFailed, DomainError
from ..keyspace import CanonicalKey
from ..numbertheory import arnold_period
from .report import AttackReport


class RecoveredMask(NamedTuple):
    mask: np.ndarray
    starts: list[int]  # canonical S values whose keystream matches ``mask``


def digit_count(size: int) -> int:
    """Number of base-256 digits needed to label N*N positions."""
    d, cap = 0, 1
    while cap < size * size:
        d, cap = d + 1, cap * 256
    return d


def query_bound(size: int) -> int:
    """``ceil(2 * log_256(N)) + 1``, computed in integers."""
    return digit_count(size) + 1


def align_keystream(stream: np.ndarray) -> list[int]:
    """Every start S in [0, 384) whose keystream equals ``stream``."""
    stream = np.asarray(stream, dtype=np.uint8).ravel()
    head = stream[:LUCAS_PERIOD]
    idx = np.arange(len(head))
    starts = [s for s in range(LUCAS_PERIOD) if np.array_equal(LUCAS_CYCLE[(s + idx) % LUCAS_PERIOD], head)]
    full = np.arange(len(stream))
    return [s for s in starts if np.array_equal(LUCAS_CYCLE[(s + full) % LUCAS_PERIOD], stream)]


def cpa_recover_mask(oracle, size: int) -> RecoveredMask:
    """Encrypt the all-zero image; the ciphertext is the raw keystream."""
    if size < 1:
        raise DomainError("size must be positive")
    mask = oracle(np.zeros((size, size), dtype=np.uint8)).ravel().copy()
    starts = align_keystream(mask)
    if not starts:
        raise AttackFailed("zero-image ciphertext is not a rotation of the Lucas cycle",
                           {"queries": 1})
    return RecoveredMask(mask, starts)


def cpa_recover_permutation(oracle, mask, size: int) -> np.ndarray:
    """Return ``perm`` with pixel ``k`` of a plaintext landing at ``perm[k]``."""
    mask = np.asarray(mask, dtype=np.uint8).ravel()
    npix = size * size
    index = np.arange(npix, dtype=np.int64)
    source = np.zeros(npix, dtype=np.int64)
    for d in range(digit_count(size)):
        probe = ((index >> (8 * d)) & 0xFF).astype(np.uint8).reshape(size, size)
        digits = oracle(probe).ravel() ^ mask
        source |= digits.astype(np.int64) << (8 * d)
    if np.any(source >= npix) or np.bincount(source, minlength=npix).max() != 1:
        raise AttackFailed("decoded positions do not form a permutation")
    perm = np.empty(npix, dtype=np.int64)
    perm[source] = index
    return perm


def match_rounds(perm: np.ndarray, size: int) -> int | None:
    """The T in [0, m) whose Arnold scrambling equals ``perm``, if any."""
    m = arnold_period(size).period
    step = scramble_permutation(size, 1)
    cur = np.arange(size * size, dtype=np.int64)
    for t in range(m):
        if np.array_equal(cur, perm):
            return t
        cur = step[cur]
    return None


def cpa_full(oracle, size: int) -> AttackReport:
    """Build a decryptor equivalent to the hidden key from chosen plaintexts."""
    started = time.perf_counter()
    q0 = oracle.queries
    rec = cpa_recover_mask(oracle, size)
    perm = cpa_recover_permutation(oracle, rec.mask, size)
    queries = oracle.queries - q0
    mask = rec.mask

    def decryptor(cipher):
        flat = np.asarray(cipher, dtype=np.uint8).ravel() ^ mask
        return flat[perm].reshape(size, size)

    t = match_rounds(perm, size)
    m = arnold_period(size).period
    key = CanonicalKey(t, rec.starts[0], m) if t is not None else None
    evidence = {
        "queries": queries,
        "query_bound": query_bound(size),
        "digits": digit_count(size),
        "mask_starts": rec.starts,
        "permutation_fixed_points": int(np.count_nonzero(perm == np.arange(size * size))),
        "rounds": t,
    }
    if queries > query_bound(size):
        raise AttackFailed("query budget exceeded", evidence)
    if np.any(decryptor(mask.reshape(size, size))):
        raise AttackFailed("decryptor does not invert the zero-image ciphertext", evidence)
    evidence["elapsed_ms"] = (time.perf_counter() - started) * 1000
    return AttackReport("cpa", key, None, evidence, decryptor=decryptor)
