"""Seedable Monte Carlo oracle for the Choquet integral.

Sampling is deterministic given the seed: the generator is numpy's PCG64
(seeded through SeedSequence), inputs are drawn as uniforms and pushed
through the inverse cdf of the requested law, and the integral is evaluated
with the same vectorized routine everywhere.  Normal variates use the
package's own quantile function, so sampled and series-approximated results
share one inverse-cdf implementation by construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .capacity import SetFunction, choquet_values
from .normal import norm_ppf

LAWS = ("uniform", "exponential", "normal")


@dataclass(frozen=True)
class MCReport:
    """Empirical summary of one sampling run."""

    n_samples: int
    mean: float
    sd: float
    standard_error: float
    ecdf: np.ndarray  # sorted sample values
    ks_vs_reference: float | None = None


def _transform(law: str, u: np.ndarray) -> np.ndarray:
    if law == "uniform":
        return u
    if law == "exponential":
        return -np.log1p(-u)
    if law == "normal":
        return norm_ppf(u)
    raise ValueError(f"unknown law {law!r}; expected one of {LAWS}")


def sample_values(g: SetFunction, law: str, n_samples: int, seed: int) -> np.ndarray:
    """Unsorted vector of n_samples Choquet integral draws."""
    if n_samples < 2:
        raise ValueError("need at least 2 samples")
    rng = np.random.Generator(np.random.PCG64(seed))
    u = rng.random((n_samples, g.n))
    np.clip(u, 1e-16, 1.0 - 1e-16, out=u)  # keep inverse cdfs finite
    return choquet_values(g, _transform(law, u))


def sample(g: SetFunction, law: str, n_samples: int, seed: int,
           reference_cdf: Callable | None = None) -> MCReport:
    ys = sample_values(g, law, n_samples, seed)
    ys.sort()
    sd = float(np.std(ys, ddof=1))
    ks = None if reference_cdf is None else ks_statistic(ys, reference_cdf)
    return MCReport(n_samples=n_samples, mean=float(np.mean(ys)), sd=sd,
                    standard_error=sd / math.sqrt(n_samples), ecdf=ys,
                    ks_vs_reference=ks)


def ks_statistic(samples: np.ndarray, reference_cdf: Callable) -> float:
    """sup_x |ECDF(x) - F(x)| over the sample points, both one-sided gaps."""
    xs = np.sort(np.asarray(samples, dtype=float))
    m = xs.size
    if m < 2:
        raise ValueError("need at least 2 samples")
    try:
        f = np.asarray(reference_cdf(xs), dtype=float)
        if f.shape != xs.shape:
            raise TypeError
    except (TypeError, ValueError):
        f = np.array([float(reference_cdf(x)) for x in xs])
    steps = np.arange(1, m + 1) / m
    d_plus = np.max(steps - f)
    d_minus = np.max(f - (steps - 1.0 / m))
    return float(max(d_plus, d_minus))
