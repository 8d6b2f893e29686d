"""IEAL encryption: T rounds of Arnold scrambling, then XOR with a Lucas keystream.

Images are square ``uint8`` numpy arrays indexed ``img[i, j]`` (row, column),
0-based. Raster index of ``(i, j)`` is ``i * N + j``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import DomainError

LUCAS_PERIOD = 384

# Arnold map (i, j) -> (i + j, i + 2j) and its inverse (i, j) -> (2i - j, j - i).
ARNOLD = ((1, 1), (1, 2))
ARNOLD_INV = ((2, -1), (-1, 1))


class Key(NamedTuple):
    T: int
    S: int

    @classmethod
    def parse(cls, text: str) -> "Key":
        """Parse ``"T,S"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise DomainError(f"key must be 'T,S', got {text!r}")
        try:
            t, s = (int(p.strip()) for p in parts)
        except ValueError:
            raise DomainError(f"key components must be integers, got {text!r}") from None
        return cls(t, s).checked()

    def checked(self) -> "Key":
        for name, v in zip(("T", "S"), self):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or v < 0:
                raise DomainError(f"key component {name} must be a non-negative integer, got {v!r}")
        return Key(int(self.T), int(self.S))


def _lucas_cycle() -> np.ndarray:
    table = np.empty(LUCAS_PERIOD, dtype=np.uint8)
    a, b = 2, 1
    for k in range(LUCAS_PERIOD):
        table[k] = a
        a, b = b, (a + b) % 256
    table.flags.writeable = False
    return table


#: ``LUCAS_CYCLE[k] == L_k mod 256`` for one full period.
LUCAS_CYCLE = _lucas_cycle()


def as_image(image) -> np.ndarray:
    """Validate ``image`` as a square 8-bit grayscale grid and return it as uint8."""
    arr = np.asarray(image)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise DomainError(f"image must be a non-empty square 2-D array, got shape {arr.shape}")
    if arr.dtype == np.uint8:
        return arr
    if not np.issubdtype(arr.dtype, np.integer):
        raise DomainError(f"image must hold integer pixel values, got dtype {arr.dtype}")
    if arr.min() < 0 or arr.max() > 255:
        raise DomainError("pixel values must lie in [0, 255]")
    return arr.astype(np.uint8)


def _matmul(a, b, n):
    return (
        ((a[0][0] * b[0][0] + a[0][1] * b[1][0]) % n, (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % n),
        ((a[1][0] * b[0][0] + a[1][1] * b[1][0]) % n, (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % n),
    )


def matrix_power(m, e: int, n: int):
    """2x2 integer matrix ``m`` raised to ``e`` modulo ``n`` (square-and-multiply)."""
    result = ((1 % n, 0), (0, 1 % n))
    base = tuple(tuple(x % n for x in row) for row in m)
    while e:
        if e & 1:
            result = _matmul(result, base, n)
        base = _matmul(base, base, n)
        e >>= 1
    return result


def arnold_step(pos: tuple[int, int], size: int) -> tuple[int, int]:
    i, j = pos
    if size < 1 or not (0 <= i < size and 0 <= j < size):
        raise DomainError(f"coordinate {pos} outside a {size}x{size} grid")
    return (i + j) % size, (i + 2 * j) % size


@lru_cache(maxsize=64)
def _destinations(size: int, rounds: int, inverse: bool) -> np.ndarray:
    a = matrix_power(ARNOLD_INV if inverse else ARNOLD, rounds, size)
    i, j = np.divmod(np.arange(size * size, dtype=np.int64), size)
    di = (a[0][0] * i + a[0][1] * j) % size
    dj = (a[1][0] * i + a[1][1] * j) % size
    dest = di * size + dj
    dest.flags.writeable = False
    return dest


def scramble_permutation(size: int, rounds: int) -> np.ndarray:
    """Raster destinations of ``rounds`` Arnold steps: pixel ``k`` lands at ``dest[k]``."""
    if size < 1:
        raise DomainError("size must be positive")
    if rounds < 0:
        raise DomainError("rounds must be non-negative")
    return _destinations(size, rounds, False)


def scramble(image, rounds: int) -> np.ndarray:
    img = as_image(image)
    n = img.shape[0]
    out = np.empty(n * n, dtype=np.uint8)
    out[scramble_permutation(n, rounds)] = img.ravel()
    return out.reshape(n, n)


def unscramble(image, rounds: int) -> np.ndarray:
    """Undo ``scramble(., rounds)`` using the inverse Arnold matrix."""
    img = as_image(image)
    n = img.shape[0]
    if rounds < 0:
        raise DomainError("rounds must be non-negative")
    out = np.empty(n * n, dtype=np.uint8)
    out[_destinations(n, rounds, True)] = img.ravel()
    return out.reshape(n, n)


def keystream(start: int, length: int) -> np.ndarray:
    """Bytes ``L_{start+k} mod 256`` for ``k = 0 .. length-1``."""
    if start < 0 or length < 0:
        raise DomainError("start and length must be non-negative")
    idx = (start % LUCAS_PERIOD + np.arange(length)) % LUCAS_PERIOD
    return LUCAS_CYCLE[idx]


def mask(image, start: int) -> np.ndarray:
    """XOR the image, in raster order, with the keystream beginning at ``start``.

    Self-inverse, so it also removes a mask.
    """
    img = as_image(image)
    n = img.shape[0]
    return img ^ keystream(start, n * n).reshape(n, n)


def encrypt(image, key) -> np.ndarray:
    key = Key(*key).checked()
    return mask(scramble(image, key.T), key.S)


def decrypt(image, key) -> np.ndarray:
    key = Key(*key).checked()
    return unscramble(mask(image, key.S), key.T)
