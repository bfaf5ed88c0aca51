"""Full spectra of map adjacency matrices.

The whole ascending spectrum is needed downstream (density and spacing
statistics), so this is a dense symmetric solve, delegated to LAPACK via
numpy.  Desk-scale matrices (up to a few thousand vertices) are cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergenceError
from .mapcore import AdjacencyMatrix


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues of one map's adjacency matrix.

    Always 2n values in [-3, 3]; the top value is 3 because the spanning
    cycle keeps the graph connected and three-regular.
    """

    values: np.ndarray
    n: int

    def __len__(self) -> int:
        return len(self.values)


def eigenvalues_symmetric(a: AdjacencyMatrix) -> Spectrum:
    """All eigenvalues of a symmetric matrix, ascending.

    Deterministic for a fixed input on one platform.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] % 2 != 0:
        raise ValueError("map adjacency matrices have even size 2n")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    try:
        values = np.linalg.eigvalsh(a.astype(np.float64))
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigensolver did not converge: {exc}") from exc
    values.setflags(write=False)
    return Spectrum(values=values, n=a.shape[0] // 2)
