"""Recover a plaintext by re-encrypting its ciphertext until the orbit closes.

Encryption is a bijection, so the ciphertext lies on a pure cycle and the
plaintext is the state immediately before the ciphertext comes round again.
No plaintext recognition is needed. The cycle length ``n`` pins down
``gcd(T, m) = 2m / n``, which in turn narrows T to a small dictionary.
"""
from __future__ import annotations

import time

import numpy as np

from ..cipher import LUCAS_CYCLE, as_image, decrypt, encrypt
from ..errors import AttackFailed
from ..keyspace import CanonicalKey
from ..numbertheory import arnold_period, gcd
from .report import AttackReport


def cycle_length(period: int, rounds: int) -> int:
    """Expected number of encryptions for the orbit to close: ``2m / gcd(T, m)``."""
    return 2 * period // gcd(rounds % period, period)


def round_candidates(period: int, n: int) -> list[int]:
    """All T in [0, m) with ``gcd(T, m) == 2m / n``."""
    if n <= 0 or (2 * period) % n:
        return []
    g = 2 * period // n
    return [t for t in range(period) if gcd(t, period) == g]


def start_candidates(s0: int) -> list[int]:
    """Positions of keystream byte ``s0`` within one Lucas period."""
    return [int(k) for k in np.flatnonzero(LUCAS_CYCLE == s0)]


def cycle_attack(oracle, cipher, max_steps: int | None = None, resolve_key: bool = True) -> AttackReport:
    """Re-encrypt ``cipher`` through ``oracle`` until it reappears.

    ``max_steps`` defaults to 6N (twice the largest possible Arnold period).
    With ``resolve_key`` the T dictionary is combined with the S dictionary
    from the fixed pixel (0, 0) and each pair is checked offline against the
    recovered plaintext/ciphertext pair.
    """
    cipher = as_image(cipher)
    n_side = cipher.shape[0]
    m = arnold_period(n_side).period
    max_steps = 6 * n_side if max_steps is None else max_steps
    started = time.perf_counter()
    q0 = oracle.queries

    prev, cur = cipher, None
    steps = 0
    while steps < max_steps:
        cur = oracle(prev)
        steps += 1
        if np.array_equal(cur, cipher):
            break
        prev = cur
    else:
        raise AttackFailed(
            f"ciphertext did not recur within {max_steps} encryptions",
            {"queries": oracle.queries - q0, "max_steps": max_steps},
        )

    plain = prev
    cands = round_candidates(m, steps)
    evidence = {
        "cycle_n": steps,
        "candidates": cands,
        "queries": oracle.queries - q0,
        "period": m,
    }
    if not cands:
        # mask sum cancelled after m/gcd rounds; the orbit is half as long
        cands = [t for t in range(m) if m // gcd(t, m) == steps]
        evidence["candidates"] = cands
        evidence["mask_cancelled"] = True

    key = None
    if resolve_key:
        s_cands = start_candidates(int(plain[0, 0] ^ cipher[0, 0]))
        matches = [(t, s) for t in cands for s in s_cands if np.array_equal(encrypt(plain, (t, s)), cipher)]
        evidence["matching_keys"] = matches
        if matches:
            key = CanonicalKey(*matches[0], m)
            if not np.array_equal(decrypt(cipher, key), plain):
                raise AttackFailed("resolved key does not decrypt the ciphertext", evidence)
    evidence["elapsed_ms"] = (time.perf_counter() - started) * 1000
    return AttackReport("cycle", key, plain, evidence)
