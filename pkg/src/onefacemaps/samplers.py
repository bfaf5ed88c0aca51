"""Random and exhaustive generation of gluings.

Uniform gluings are drawn by pushing a uniform random permutation through
the standard-matching conjugation (every matching has 2^n n! permutation
preimages, so the pushforward is uniform).  Non-crossing gluings are drawn
block by block: the first free node of a block of 2k nodes is paired with
the 2m-th node of the block, m drawn from the exact pmf
C_{m-1} C_{k-m} / C_k, and the inside/outside sub-blocks are processed the
same way.  Every non-crossing pairing then comes out with probability
exactly 1/C_n.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import topology
from .counting import catalan
from .errors import BudgetExhaustedError, OutOfRangeError, TooLargeError
from .mapcore import Gluing, gluing_from_permutation

ENUMERATE_ALL_MAX = 8  # (2n-1)!! past this is unreasonable to stream
ENUMERATE_NCPP_MAX = 14  # C_14 = 2674440


@dataclass(frozen=True)
class RngStream:
    """Deterministic, independent random stream keyed by (seed, index).

    One stream per sample keeps ensembles reproducible regardless of how
    the samples are scheduled.
    """

    master_seed: int
    stream_index: int = 0

    def __post_init__(self):
        if not 0 <= self.master_seed < 2**64:
            raise OutOfRangeError("master_seed must be a 64-bit unsigned integer")
        if self.stream_index < 0:
            raise OutOfRangeError("stream_index must be non-negative")

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(entropy=(self.master_seed, self.stream_index))
        return np.random.default_rng(seq)


def _as_generator(rng) -> np.random.Generator:
    if isinstance(rng, RngStream):
        return rng.generator()
    if isinstance(rng, np.random.Generator):
        return rng
    raise TypeError(f"expected RngStream or numpy Generator, got {type(rng)!r}")


def sample_uniform_gluing(n: int, rng) -> Gluing:
    """One gluing uniform over all (2n-1)!! perfect matchings."""
    if n < 1:
        raise OutOfRangeError("need n >= 1")
    gen = _as_generator(rng)
    perm = gen.permutation(2 * n) + 1
    return gluing_from_permutation(perm)


# block half-length -> cumulative pmf table (floats, last entry pinned to 1.0)
_PMF_CDF: dict[int, list[float]] = {}


def _pmf_cdf(k: int) -> list[float]:
    table = _PMF_CDF.get(k)
    if table is None:
        c_k = catalan(k)
        acc = 0.0
        table = []
        for m in range(1, k + 1):
            # exact big-integer ratio, correctly rounded to float
            acc += (catalan(m - 1) * catalan(k - m)) / c_k
            table.append(acc)
        table[-1] = 1.0  # residual round-off mass goes to m = k
        _PMF_CDF[k] = table
    return table


def sample_ncpp(n: int, rng) -> Gluing:
    """One non-crossing gluing, exactly uniform over the C_n possibilities."""
    if n < 1:
        raise OutOfRangeError("need n >= 1")
    gen = _as_generator(rng)
    uniforms = gen.random(n)
    draw = 0
    partner = [0] * (2 * n)
    # explicit work stack of (first label, half-length) blocks; recursion
    # would overflow at n ~ 10^4
    stack = [(1, n)]
    while stack:
        first, k = stack.pop()
        if k == 0:
            continue
        m = bisect_right(_pmf_cdf(k), uniforms[draw]) + 1
        draw += 1
        mate = first + 2 * m - 1
        partner[first - 1] = mate
        partner[mate - 1] = first
        stack.append((first + 1, m - 1))  # inside the new pair
        stack.append((mate + 1, k - m))  # outside it
    return Gluing(n=n, partner=tuple(partner))


def enumerate_all_gluings(n: int) -> Iterator[Gluing]:
    """All (2n-1)!! gluings, each exactly once, in deterministic order."""
    if n < 1:
        raise OutOfRangeError("need n >= 1")
    if n > ENUMERATE_ALL_MAX:
        raise TooLargeError(f"exhaustive enumeration capped at n = {ENUMERATE_ALL_MAX}")
    partner = [0] * (2 * n)

    def fill() -> Iterator[None]:
        try:
            i = partner.index(0)
        except ValueError:
            yield None
            return
        for j in range(i + 1, 2 * n):
            if partner[j] == 0:
                partner[i] = j + 1
                partner[j] = i + 1
                yield from fill()
                partner[i] = 0
                partner[j] = 0

    for _ in fill():
        yield Gluing(n=n, partner=tuple(partner))


def enumerate_ncpp(n: int) -> Iterator[Gluing]:
    """All C_n non-crossing gluings, each exactly once, deterministic order."""
    if n < 1:
        raise OutOfRangeError("need n >= 1")
    if n > ENUMERATE_NCPP_MAX:
        raise TooLargeError(f"non-crossing enumeration capped at n = {ENUMERATE_NCPP_MAX}")
    partner = [0] * (2 * n)

    def fill(first: int, k: int) -> Iterator[None]:
        if k == 0:
            yield None
            return
        for m in range(1, k + 1):
            mate = first + 2 * m - 1
            partner[first - 1] = mate
            partner[mate - 1] = first
            for _ in fill(first + 1, m - 1):
                yield from fill(mate + 1, k - m)

    for _ in fill(1, n):
        yield Gluing(n=n, partner=tuple(partner))


@dataclass(frozen=True)
class FilteredSample:
    """Maps kept by genus filtering plus the number of draws spent."""

    gluings: tuple[Gluing, ...]
    attempts: int


def sample_genus_filtered(
    n: int,
    target_genus: int,
    max_attempts: int,
    rng,
    num_samples: int | None = None,
) -> FilteredSample:
    """Uniform gluings filtered to a target genus by rejection.

    Draws uniform gluings and keeps those whose map has the target genus;
    the kept sample is uniform over genus-target maps.  Stops early once
    ``num_samples`` maps are kept; with ``num_samples=None`` the whole
    budget is spent and everything found is returned.  Raises
    BudgetExhaustedError (carrying the partial sample) if the budget ends
    before the request is met, or with nothing found.
    """
    if not 0 <= target_genus <= n // 2:
        raise OutOfRangeError(f"target genus must lie in 0..{n // 2}, got {target_genus}")
    if max_attempts < 1:
        raise OutOfRangeError("need max_attempts >= 1")
    gen = _as_generator(rng)
    kept: list[Gluing] = []
    attempts = 0
    for attempts in range(1, max_attempts + 1):
        g = sample_uniform_gluing(n, gen)
        if topology.genus(g) == target_genus:
            kept.append(g)
            if num_samples is not None and len(kept) >= num_samples:
                return FilteredSample(gluings=tuple(kept), attempts=attempts)
    if num_samples is None and kept:
        return FilteredSample(gluings=tuple(kept), attempts=attempts)
    wanted = "at least one map" if num_samples is None else f"{num_samples} maps"
    raise BudgetExhaustedError(
        f"found {len(kept)} genus-{target_genus} maps in {attempts} draws, wanted {wanted}",
        gluings=kept,
        attempts=attempts,
    )
