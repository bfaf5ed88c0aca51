"""Gluings of the 2N-gon and their three-regular graphs.

A one-face map with N edges is encoded by a fixed-point-free involution
(a "gluing") on the polygon edge labels 1..2N: label ``i`` is glued to
``partner(i)``.  The graph of the map is the 2N-cycle plus one extra edge
per glued pair, so every vertex has degree exactly three and the adjacency
matrix splits into a cycle part and a permuted perfect matching.

Labels are 1-based everywhere in this module and in serialized records.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadLengthError,
    FixedPointError,
    NotAPermutationError,
    NotInvolutionError,
    ParseError,
)

# Dense symmetric table of small non-negative integers, shape (2N, 2N).
AdjacencyMatrix = np.ndarray


@dataclass(frozen=True)
class Gluing:
    """Fixed-point-free involution on the labels 1..2n.

    ``partner[i - 1]`` is the label glued to label ``i``.  Instances are
    immutable and hashable; construct via :meth:`from_partner` or one of
    the samplers, and check invariants with :func:`validate_gluing`.
    """

    n: int
    partner: tuple[int, ...]

    @classmethod
    def from_partner(cls, partner: Sequence[int]) -> "Gluing":
        partner = tuple(int(p) for p in partner)
        return cls(n=len(partner) // 2, partner=partner)

    def partner_of(self, label: int) -> int:
        return self.partner[label - 1]

    def pairs(self) -> list[tuple[int, int]]:
        """The n glued pairs as (low, high) tuples in ascending order."""
        return [(i, p) for i, p in enumerate(self.partner, start=1) if i < p]


def validate_gluing(g: Gluing) -> None:
    """Raise a GluingError subclass naming the first violated invariant."""
    two_n = len(g.partner)
    if two_n % 2 != 0 or two_n == 0 or two_n != 2 * g.n:
        raise BadLengthError(
            f"partner table must have length 2n = {2 * g.n}, got {two_n}"
        )
    for i, p in enumerate(g.partner, start=1):
        if not 1 <= p <= two_n:
            raise NotInvolutionError(f"partner of {i} is {p}, outside 1..{two_n}")
        if p == i:
            raise FixedPointError(f"label {i} is glued to itself")
        if g.partner[p - 1] != i:
            raise NotInvolutionError(
                f"partner[{p}] = {g.partner[p - 1]} but partner[{i}] = {p}"
            )


def gluing_from_permutation(perm: Sequence[int]) -> Gluing:
    """Gluing obtained by conjugating the standard matching by ``perm``.

    The standard matching pairs 2k-1 with 2k.  Labels i and j end up glued
    exactly when perm(i) and perm(j) are such a standard pair, i.e.
    ``partner(i) = perm^-1(t(perm(i)))`` with t(2k-1) = 2k.  ``perm`` is
    given as the 1-based image sequence: perm(i) = perm[i - 1].
    """
    two_n = len(perm)
    if two_n % 2 != 0 or two_n == 0:
        raise BadLengthError(f"permutation length must be even and positive, got {two_n}")
    inverse = [0] * (two_n + 1)
    for i, v in enumerate(perm, start=1):
        v = int(v)
        if not 1 <= v <= two_n or inverse[v]:
            raise NotAPermutationError(f"input is not a bijection on 1..{two_n}")
        inverse[v] = i
    partner = [0] * two_n
    for i, v in enumerate(perm, start=1):
        v = int(v)
        t = v + 1 if v % 2 else v - 1
        partner[i - 1] = inverse[t]
    return Gluing(n=two_n // 2, partner=tuple(partner))


def build_adjacency(g: Gluing) -> AdjacencyMatrix:
    """Adjacency matrix of the 2n-cycle plus the glued matching.

    Entries count edges, so a glued pair that coincides with a cycle edge
    yields entry 2 (and the degenerate n=1 map yields a single entry 3).
    Rows always sum to exactly 3.
    """
    validate_gluing(g)
    two_n = 2 * g.n
    a = np.zeros((two_n, two_n), dtype=np.int64)
    idx = np.arange(two_n)
    succ = (idx + 1) % two_n
    a[idx, succ] += 1
    a[succ, idx] += 1
    mate = np.asarray(g.partner, dtype=np.int64) - 1
    a[idx, mate] += 1
    return a


@dataclass(frozen=True)
class EnsembleRecord:
    """One sampled map plus the provenance needed to regenerate it."""

    gluing: Gluing
    genus: int
    seed: int
    sample_index: int

    @property
    def n(self) -> int:
        return self.gluing.n

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.gluing.n,
                "partner": list(self.gluing.partner),
                "genus": self.genus,
                "seed": self.seed,
                "sample_index": self.sample_index,
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, line: str) -> "EnsembleRecord":
        try:
            obj = json.loads(line)
            gluing = Gluing(n=int(obj["n"]), partner=tuple(int(p) for p in obj["partner"]))
            return cls(
                gluing=gluing,
                genus=int(obj["genus"]),
                seed=int(obj["seed"]),
                sample_index=int(obj["sample_index"]),
            )
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise ParseError(f"bad ensemble record: {exc}") from exc


def write_records(path, records: Iterable[EnsembleRecord]) -> None:
    """Write records as JSON lines, one record per line."""
    if isinstance(path, (str, Path)):
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            write_records(fh, records)
        return
    for rec in records:
        path.write(rec.to_json() + "\n")


def read_records(path) -> list[EnsembleRecord]:
    """Read a JSON-lines ensemble file; raises ParseError on bad lines."""
    if isinstance(path, (str, Path)):
        with open(path, "r", encoding="utf-8") as fh:
            return read_records(fh)
    return [EnsembleRecord.from_json(line) for line in path if line.strip()]
