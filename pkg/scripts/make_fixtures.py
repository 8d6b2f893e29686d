"""Regenerate the photographic PGM fixtures shipped in src/ieal/data.

Sources are the public-domain / CC0 sample photographs bundled with
scikit-image (camera, astronaut, chelsea, coffee, moon). Each is converted to
grayscale, center-cropped to a square and resized with Lanczos filtering.

    python scripts/make_fixtures.py
"""
from pathlib import Path

import numpy as np
from PIL import Image
from skimage import data

from ieal.image_io import save_pgm

SOURCES = ["camera", "astronaut", "chelsea", "coffee", "moon"]
SIZES = [64, 144, 276]
OUT = Path(__file__).resolve().parents[1] / "src" / "ieal" / "data"


def square_gray(name):
    img = Image.fromarray(getattr(data, name)()).convert("L")
    w, h = img.size
    s = min(w, h)
    left, top = (w - s) // 2, (h - s) // 2
    return img.crop((left, top, left + s, top + s))


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name in SOURCES:
        base = square_gray(name)
        for size in SIZES:
            arr = np.asarray(base.resize((size, size), Image.LANCZOS), dtype=np.uint8)
            save_pgm(OUT / f"{name}{size}.pgm", arr)
            print(f"wrote {name}{size}.pgm")


if __name__ == "__main__":
    main()
