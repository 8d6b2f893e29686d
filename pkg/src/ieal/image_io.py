"""Binary PGM (P5) I/O, synthetic and photographic fixtures, image statistics."""
from __future__ import annotations

import re
from importlib import resources

import numpy as np

from .cipher import as_image
from .errors import DomainError

PGM_COMMENT = b"# ieal"


class PGMError(DomainError):
    pass


class PGMFormatError(PGMError):
    """Not a binary P5 file."""


class PGMHeaderError(PGMError):
    """Malformed or unsupported header."""


class PGMMaxValueError(PGMHeaderError):
    pass


class PGMNonSquareError(PGMError):
    pass


class PGMTruncatedError(PGMError):
    pass


_TOKEN = re.compile(rb"(?:\s|#[^\n\r]*[\n\r])*([^\s#]+)")


def read_pgm(data: bytes) -> np.ndarray:
    data = bytes(data)
    if data[:2] != b"P5":
        magic = data[:2].decode("latin-1", "replace")
        raise PGMFormatError(f"expected binary PGM magic 'P5', got {magic!r}")
    pos = 2
    fields = []
    for _ in range(3):
        m = _TOKEN.match(data, pos)
        if not m:
            raise PGMHeaderError("truncated PGM header")
        tok = m.group(1)
        if not tok.isdigit():
            raise PGMHeaderError(f"non-numeric header field {tok!r}")
        fields.append(int(tok))
        pos = m.end()
    width, height, maxval = fields
    if pos >= len(data) or data[pos:pos + 1] not in (b" ", b"\t", b"\n", b"\r"):
        raise PGMHeaderError("header must end with a single whitespace byte")
    pos += 1
    if maxval != 255:
        raise PGMMaxValueError(f"only 8-bit PGM (max value 255) is supported, got {maxval}")
    if width == 0 or height == 0:
        raise PGMHeaderError("zero-sized image")
    if width != height:
        raise PGMNonSquareError(f"image must be square, got {width}x{height}")
    payload = data[pos:pos + width * height]
    if len(payload) < width * height:
        raise PGMTruncatedError(f"expected {width * height} pixel bytes, found {len(payload)}")
    return np.frombuffer(payload, dtype=np.uint8).reshape(height, width).copy()


def write_pgm(image) -> bytes:
    img = as_image(image)
    n = img.shape[0]
    header = b"P5\n" + PGM_COMMENT + b"\n" + f"{n} {n}\n255\n".encode("ascii")
    return header + img.tobytes()


def load_pgm(path) -> np.ndarray:
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def save_pgm(path, image) -> None:
    with open(path, "wb") as fh:
        fh.write(write_pgm(image))


def histogram(image) -> np.ndarray:
    """256-bin pixel value counts."""
    return np.bincount(as_image(image).ravel(), minlength=256)


def smoothness(image) -> int:
    """Sum of absolute differences over all horizontal and vertical neighbour pairs."""
    img = as_image(image)
    if img.shape[0] < 2:
        raise DomainError("smoothness needs at least a 2x2 image")
    return int(smoothness_batch(img[None])[0])


def smoothness_batch(images: np.ndarray) -> np.ndarray:
    """:func:`smoothness` over a stack of shape ``(B, N, N)``."""
    x = images.astype(np.int16)
    h = np.abs(np.diff(x, axis=2)).sum(axis=(1, 2), dtype=np.int64)
    v = np.abs(np.diff(x, axis=1)).sum(axis=(1, 2), dtype=np.int64)
    return h + v


def make_fixture(kind: str, size: int, seed: int = 0) -> np.ndarray:
    """Deterministic synthetic images.

    ``kind`` is one of ``zeros``, ``gradient``, ``checkerboard``, ``noise``;
    ``noise:<seed>`` is accepted as a shorthand.
    """
    if size < 1:
        raise DomainError("size must be positive")
    if kind.startswith("noise:"):
        kind, seed = "noise", int(kind.split(":", 1)[1])
    i, j = np.indices((size, size))
    if kind == "zeros":
        return np.zeros((size, size), dtype=np.uint8)
    if kind == "gradient":
        return ((i + j) % 256).astype(np.uint8)
    if kind == "checkerboard":
        return (((i + j) % 2) * 255).astype(np.uint8)
    if kind == "noise":
        return np.random.default_rng(seed).integers(0, 256, (size, size), dtype=np.uint8)
    raise DomainError(f"unknown fixture kind {kind!r}")


def photo_names() -> list[str]:
    """Names of the shipped photographic fixtures, e.g. ``camera144``."""
    root = resources.files("ieal") / "data"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".pgm"))


def load_photo(name: str) -> np.ndarray:
    path = resources.files("ieal") / "data" / f"{name}.pgm"
    if not path.is_file():
        raise DomainError(f"no shipped fixture named {name!r}; have {photo_names()}")
    return read_pgm(path.read_bytes())


def photos(size: int) -> dict[str, np.ndarray]:
    """All shipped photographic fixtures of side ``size``."""
    suffix = str(size)
    return {
        n: load_photo(n) for n in photo_names()
        if n.endswith(suffix) and not n[: -len(suffix)][-1:].isdigit()
    }
