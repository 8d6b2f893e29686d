"""Timing side channel: encryption cost grows like n * (T + 1).

Fitting duration against pixel count gives a slope proportional to T + 1;
dividing by a per-pixel cost calibrated on a run with known T exposes T.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from ..cipher import Key, encrypt
from ..errors import DomainError
from ..image_io import make_fixture


@dataclass(frozen=True)
class TimingModel:
    pixel_cost: float
    overhead: float
    slope: float
    estimated_T: int
    residual: float  # RMS of the linear-fit residuals
    clamped: bool = False


def fit_line(samples) -> tuple[float, float, float]:
    """Least-squares ``duration = slope * n + intercept``; returns (slope, intercept, rms residual)."""
    arr = np.asarray(list(samples), dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise DomainError("samples must be (pixel count, duration) pairs")
    if len(np.unique(arr[:, 0])) < 2:
        raise DomainError("need samples at two or more distinct image sizes")
    n, d = arr[:, 0], arr[:, 1]
    design = np.column_stack([n, np.ones_like(n)])
    (slope, intercept), *_ = np.linalg.lstsq(design, d, rcond=None)
    rms = float(np.sqrt(np.mean((design @ (slope, intercept) - d) ** 2)))
    return float(slope), float(intercept), rms


def calibrate_pixel_cost(samples, known_rounds: int) -> float:
    """Per-pixel-per-round cost from timings of a key whose T is known."""
    slope, _, _ = fit_line(samples)
    return slope / (known_rounds + 1)


def timing_estimate(samples, pixel_cost_reference: float) -> TimingModel:
    slope, intercept, rms = fit_line(samples)
    raw = slope / pixel_cost_reference - 1
    clamped = raw < 0
    t = 0 if clamped else int(round(raw))
    return TimingModel(pixel_cost_reference, intercept, slope, t, rms, clamped)


class SimulatedTimer:
    """Instrumented encryption whose reported duration follows the cost model.

    ``duration = (pixel_cost * n * (T + 1) + overhead) * (1 + eps)`` with
    ``eps`` uniform in ``[-noise, noise]``. Only durations leave this object.
    """

    def __init__(self, key, pixel_cost: float = 1e-8, overhead: float = 0.0,
                 noise: float = 0.0, seed: int | None = None):
        self._rounds = Key(*key).checked().T
        self.pixel_cost = pixel_cost
        self.overhead = overhead
        self.noise = noise
        self._rng = np.random.default_rng(seed)

    def measure(self, n_pixels: int) -> float:
        eps = self._rng.uniform(-self.noise, self.noise) if self.noise else 0.0
        return (self.pixel_cost * n_pixels * (self._rounds + 1) + self.overhead) * (1 + eps)


def collect_samples(timer: Callable[[int], float], sizes: Iterable[int], repeats: int = 1):
    """Time ``timer`` at N*N pixels for every side length N in ``sizes``."""
    return [(n * n, timer(n * n)) for n in sizes for _ in range(repeats)]


def wallclock_timer(key) -> Callable[[int], float]:
    """Real wall-clock cost of encrypting a noise image with ``key``.

    Results depend on hardware and the vectorised scrambler (which does not
    iterate T times), so this is a demonstration, not a reliable oracle.
    """
    key = Key(*key).checked()

    def timer(n_pixels: int) -> float:
        side = int(round(n_pixels ** 0.5))
        img = make_fixture("noise", side, seed=0)
        t0 = time.perf_counter()
        encrypt(img, key)
        return time.perf_counter() - t0

    return timer
