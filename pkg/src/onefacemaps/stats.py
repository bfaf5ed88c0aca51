"""Empirical eigenvalue statistics and the reference curves they are
compared against.

Densities are pooled area-normalized histograms.  Spacings are consecutive
differences of the ordered eigenvalues over a central bulk window, scaled
per graph to mean one before pooling; no further unfolding is applied.
Reference curves: the limiting density of locally tree-like k-regular
graphs, the Wigner surmise (pi/2) s exp(-pi s^2/4) standing in for the GOE
bulk spacing law, and the unit exponential.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import integrate, signal

from .errors import (
    DegenerateSpectrumError,
    EmptyEnsembleError,
    EmptySampleError,
    MixedSizesError,
)
from .spectra import Spectrum

DENSITY_SUPPORT = (-3.0, 3.0)
SPACING_SUPPORT = (0.0, 4.0)
DEFAULT_BINS = 100
DEFAULT_BULK_FRACTION = 0.8
_EDGE_SNAP = 1e-9  # eigenvalues sit on +-3 up to solver round-off


@dataclass(frozen=True, eq=False)
class HistogramDensity:
    """Binned empirical density: integrates to one over its bin range."""

    bin_edges: np.ndarray
    densities: np.ndarray
    sample_count: int

    @property
    def bin_centers(self) -> np.ndarray:
        return 0.5 * (self.bin_edges[:-1] + self.bin_edges[1:])

    @property
    def bin_widths(self) -> np.ndarray:
        return np.diff(self.bin_edges)


@dataclass(frozen=True)
class ReferenceDensity:
    """A named reference pdf with its cdf, both vectorized."""

    name: str
    pdf: Callable[[np.ndarray], np.ndarray]
    cdf: Callable[[np.ndarray], np.ndarray]


def mckay_density(x, k: int = 3):
    """Limiting eigenvalue density of large locally tree-like k-regular
    graphs: k sqrt(4(k-1) - x^2) / (2 pi (k^2 - x^2)) on |x| <= 2 sqrt(k-1)."""
    if k < 2:
        raise ValueError("need k >= 2")
    x = np.asarray(x, dtype=np.float64)
    radicand = 4.0 * (k - 1) - x * x
    with np.errstate(invalid="ignore", divide="ignore"):
        raw = k * np.sqrt(np.maximum(radicand, 0.0)) / (2.0 * np.pi * (k * k - x * x))
    out = np.where(radicand > 0.0, raw, 0.0)
    return out if out.ndim else float(out)


def goe_surmise_density(s):
    """Wigner surmise (pi/2) s exp(-pi s^2 / 4); mean one, level repulsion."""
    s = np.asarray(s, dtype=np.float64)
    out = np.where(s >= 0.0, 0.5 * np.pi * s * np.exp(-0.25 * np.pi * s * s), 0.0)
    return out if out.ndim else float(out)


def goe_surmise_cdf(s):
    s = np.asarray(s, dtype=np.float64)
    out = np.where(s >= 0.0, 1.0 - np.exp(-0.25 * np.pi * s * s), 0.0)
    return out if out.ndim else float(out)


def exponential_density(s):
    """Unit exponential exp(-s); mean one, no level repulsion."""
    s = np.asarray(s, dtype=np.float64)
    out = np.where(s >= 0.0, np.exp(-np.clip(s, 0.0, None)), 0.0)
    return out if out.ndim else float(out)


def exponential_cdf(s):
    s = np.asarray(s, dtype=np.float64)
    out = np.where(s >= 0.0, -np.expm1(-np.clip(s, 0.0, None)), 0.0)
    return out if out.ndim else float(out)


def reference_density(name: str, k: int = 3) -> ReferenceDensity:
    """Look up a reference curve: 'mckay', 'goe_surmise' or 'exponential'."""
    if name in ("mckay", "mckay_k"):
        edge = 2.0 * np.sqrt(k - 1.0)

        def pdf(x):
            return mckay_density(x, k=k)

        def cdf(x):
            xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
            out = np.empty_like(xs)
            for i, xi in enumerate(xs):
                if xi <= -edge:
                    out[i] = 0.0
                elif xi >= edge:
                    out[i] = 1.0
                else:
                    out[i], _ = integrate.quad(pdf, -edge, xi)
            return out if np.ndim(x) else float(out[0])

        return ReferenceDensity(name="mckay", pdf=pdf, cdf=cdf)
    if name == "goe_surmise":
        return ReferenceDensity(name=name, pdf=goe_surmise_density, cdf=goe_surmise_cdf)
    if name == "exponential":
        return ReferenceDensity(name=name, pdf=exponential_density, cdf=exponential_cdf)
    raise ValueError(f"unknown reference density {name!r}")


def _pooled_histogram(
    values: np.ndarray, bins: int, support: tuple[float, float], sample_count: int
) -> HistogramDensity:
    counts, edges = np.histogram(values, bins=bins, range=support)
    in_range = counts.sum()
    if in_range == 0:
        raise EmptyEnsembleError("no values fall inside the histogram support")
    densities = counts / (in_range * np.diff(edges))
    return HistogramDensity(bin_edges=edges, densities=densities, sample_count=sample_count)


def empirical_density(
    spectra: Iterable[Spectrum],
    bins: int = DEFAULT_BINS,
    support: tuple[float, float] = DENSITY_SUPPORT,
) -> HistogramDensity:
    """Area-normalized histogram of all eigenvalues pooled over an ensemble."""
    spectra = list(spectra)
    if not spectra:
        raise EmptyEnsembleError("empty ensemble")
    values = np.concatenate([np.asarray(s.values, dtype=np.float64) for s in spectra])
    # snap round-off dust at the spectral edges back into range
    lo, hi = support
    values[(values < lo) & (values >= lo - _EDGE_SNAP)] = lo
    values[(values > hi) & (values <= hi + _EDGE_SNAP)] = hi
    return _pooled_histogram(values, bins, support, sample_count=values.size)


def bulk_spacings(spectrum: Spectrum, bulk_fraction: float = DEFAULT_BULK_FRACTION) -> np.ndarray:
    """Consecutive spacings over the central bulk, scaled to mean one."""
    if not 0.0 < bulk_fraction <= 1.0:
        raise ValueError(f"bulk_fraction must lie in (0, 1], got {bulk_fraction}")
    values = np.asarray(spectrum.values, dtype=np.float64)
    if values.size < 4:
        raise ValueError("need at least 4 eigenvalues to take bulk spacings")
    drop = int(np.floor(values.size * (1.0 - bulk_fraction) / 2.0))
    bulk = values[drop : values.size - drop]
    diffs = np.diff(bulk)
    mean = diffs.mean()
    if mean <= 0.0:
        raise DegenerateSpectrumError("all bulk spacings are zero")
    return diffs / mean


def spacing_distribution(
    spectra: Iterable[Spectrum],
    bulk_fraction: float = DEFAULT_BULK_FRACTION,
    bins: int = DEFAULT_BINS,
    support: tuple[float, float] = SPACING_SUPPORT,
) -> HistogramDensity:
    """Pooled per-graph scaled bulk spacings, area-normalized."""
    spectra = list(spectra)
    if not spectra:
        raise EmptyEnsembleError("empty ensemble")
    pooled = np.concatenate([bulk_spacings(s, bulk_fraction) for s in spectra])
    return _pooled_histogram(pooled, bins, support, sample_count=pooled.size)


def pooled_bulk_spacings(
    spectra: Iterable[Spectrum], bulk_fraction: float = DEFAULT_BULK_FRACTION
) -> np.ndarray:
    """All per-graph scaled bulk spacings of an ensemble, concatenated."""
    spectra = list(spectra)
    if not spectra:
        raise EmptyEnsembleError("empty ensemble")
    return np.concatenate([bulk_spacings(s, bulk_fraction) for s in spectra])


def mean_jth_spacing(spectra: Iterable[Spectrum]) -> np.ndarray:
    """Ensemble mean of the j-th raw spacing, j = 1..2n-1 (unscaled)."""
    spectra = list(spectra)
    if not spectra:
        raise EmptyEnsembleError("empty ensemble")
    sizes = {len(s.values) for s in spectra}
    if len(sizes) != 1:
        raise MixedSizesError(f"spectra of mixed lengths: {sorted(sizes)}")
    stacked = np.stack([np.asarray(s.values, dtype=np.float64) for s in spectra])
    return np.diff(stacked, axis=1).mean(axis=0)


def ks_distance(samples: Sequence[float], cdf: Callable) -> float:
    """Sup-distance between the empirical CDF of samples and a reference CDF."""
    x = np.sort(np.asarray(samples, dtype=np.float64).ravel())
    if x.size == 0:
        raise EmptySampleError("empty sample")
    ref = np.asarray(cdf(x), dtype=np.float64)
    steps = np.arange(1, x.size + 1) / x.size
    return float(max((steps - ref).max(), (ref - steps + 1.0 / x.size).max()))


def l1_histogram_distance(h: HistogramDensity, pdf: Callable) -> float:
    """Integrated absolute gap between a histogram and a pdf at bin centers."""
    ref = np.asarray(pdf(h.bin_centers), dtype=np.float64)
    return float(np.sum(np.abs(h.densities - ref) * h.bin_widths))


def find_peaks(h: HistogramDensity, min_prominence: float) -> np.ndarray:
    """Bin centers of interior local maxima with at least the given
    prominence, ascending.  Boundary bins are never peaks."""
    idx, _ = signal.find_peaks(h.densities, prominence=min_prominence)
    return h.bin_centers[idx]
