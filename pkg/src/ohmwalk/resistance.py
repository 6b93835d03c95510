"""Effective resistance from the graph Laplacian, and the two Kirchhoffian indices.

Each edge is a unit resistor. The resistance matrix is obtained from the
Moore-Penrose pseudoinverse of the combinatorial Laplacian L = diag(d) - A,
computed with a single dense rank-completion solve instead of a full
eigendecomposition: M = (L + J/n)^-1 - J/n with J the all-ones matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .graphs import Graph


@dataclass(frozen=True)
class ResistanceData:
    """Effective-resistance matrix and the indices derived from it.

    Attributes
    ----------
    r : (n, n) ndarray
        Effective resistances R_ij; symmetric, zero diagonal.
    row_sums : (n,) ndarray
        R(i) = sum_j R_ij.
    kirchhoff : float
        R(G) = sum over unordered pairs of R_ij.
    degree_kirchhoff : float
        R*(G) = sum over unordered pairs of d_i d_j R_ij.
    """

    r: np.ndarray
    row_sums: np.ndarray
    kirchhoff: float
    degree_kirchhoff: float


def effective_resistance(g: Graph) -> ResistanceData:
    """Compute the full resistance matrix plus row sums and both indices."""
    n = g.n
    lap = np.diag(g.degree_vector()) - g.adjacency_matrix()
    ones_over_n = np.full((n, n), 1.0 / n)
    try:
        m = np.linalg.solve(lap + ones_over_n, np.eye(n)) - ones_over_n
    except np.linalg.LinAlgError as exc:
        raise NumericalError("Laplacian rank-completion solve failed") from exc
    diag = np.diag(m)
    r = diag[:, None] + diag[None, :] - 2.0 * m
    r = 0.5 * (r + r.T)
    np.fill_diagonal(r, 0.0)
    deg = g.degree_vector()
    data = ResistanceData(
        r=r,
        row_sums=r.sum(axis=1),
        kirchhoff=float(np.triu(r, 1).sum()),
        degree_kirchhoff=float(0.5 * deg @ r @ deg),
    )
    data.r.setflags(write=False)
    data.row_sums.setflags(write=False)
    return data


def kirchhoff_index(g: Graph) -> float:
    """R(G), the plain pair sum of effective resistances."""
    return effective_resistance(g).kirchhoff


def degree_kirchhoff_index(g: Graph) -> float:
    """R*(G), the degree-weighted pair sum of effective resistances."""
    return effective_resistance(g).degree_kirchhoff


def resistance_row_sums(g: Graph) -> np.ndarray:
    """The vector of per-vertex resistance sums R(i)."""
    return effective_resistance(g).row_sums
