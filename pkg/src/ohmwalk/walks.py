"""Simple-random-walk quantities: transition matrix, stationary law, hitting times, Kemeny's constant.

Hitting times use the first-passage convention H[i, i] = 0. They are computed
by two genuinely independent routes: dense linear solves against the
transition matrix, and a purely resistance-based formula; agreement between
the two is one of the package's standing checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .graphs import Graph
from .resistance import ResistanceData

REL_TOL = 1e-9
ABS_FLOOR = 1e-12


def transition_matrix(g: Graph) -> np.ndarray:
    """Row-stochastic P with P[i, j] = 1/d_i for each neighbor j of i."""
    return g.adjacency_matrix() / g.degree_vector()[:, None]


def stationary(g: Graph) -> np.ndarray:
    """Stationary distribution pi_i = d_i / (2|E|)."""
    deg = g.degree_vector()
    return deg / deg.sum()


def hitting_times_solve(g: Graph) -> np.ndarray:
    """Expected steps H[i, j] from i to the first visit of j, one dense solve per target.

    For target b the vector x with x_b = 0 and x_i = 1 + sum_j P_ij x_j solves
    (I - P') x = 1 on the system with row and column b deleted.
    """
    p = transition_matrix(g)
    n = g.n
    h = np.zeros((n, n))
    eye = np.eye(n - 1)
    ones = np.ones(n - 1)
    for b in range(n):
        keep = np.r_[0:b, b + 1 : n]
        try:
            x = np.linalg.solve(eye - p[np.ix_(keep, keep)], ones)
        except np.linalg.LinAlgError as exc:
            raise NumericalError(f"hitting-time system for target {b} is singular") from exc
        h[keep, b] = x
    return h


def hitting_times_tetali(g: Graph, rd: ResistanceData) -> np.ndarray:
    """Hitting times from resistances and degrees alone.

    H[a, b] = |E| R_ab + (s_b - s_a)/2 with s_x = sum_z d_z R_xz, i.e. the
    one-directional resistance formula. Orientation fixed so that on the star
    graph the center-to-leaf time exceeds the leaf-to-center time.
    """
    s = rd.r @ g.degree_vector()
    h = g.m * rd.r + 0.5 * (s[None, :] - s[:, None])
    np.fill_diagonal(h, 0.0)
    return h


def kemeny(
    g: Graph,
    rel_tol: float = REL_TOL,
    abs_floor: float = ABS_FLOOR,
    h: np.ndarray | None = None,
) -> float:
    """Kemeny's constant: the stationary-weighted mean hitting time.

    K_i = sum_j pi_j H[i, j] is computed for every start vertex i and the
    values must agree (start independence). A spread beyond tolerance aborts
    instead of averaging over a disagreement.
    """
    if h is None:
        h = hitting_times_solve(g)
    per_start = h @ stationary(g)
    mean = float(per_start.mean())
    spread = float(per_start.max() - per_start.min())
    if spread > max(rel_tol * abs(mean), abs_floor):
        raise NumericalError(
            f"Kemeny start dependence: spread {spread:.3e} against mean {mean:.6g}"
        )
    return mean


def kemeny_spectral(g: Graph) -> float:
    """Kemeny's constant from the transition spectrum: sum of 1/(1 - lambda).

    Uses the symmetrized operator D^-1/2 A D^-1/2, which has the same spectrum
    as P, so a symmetric eigensolver suffices. The unit eigenvalue is dropped
    by index after the ascending sort, never by value matching.
    """
    deg = g.degree_vector()
    sym = g.adjacency_matrix() / np.sqrt(np.outer(deg, deg))
    try:
        eigs = np.linalg.eigvalsh(sym)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("eigensolver failed on the symmetrized transition operator") from exc
    return float(np.sum(1.0 / (1.0 - eigs[:-1])))


def hitting_asymmetry(g: Graph, h: np.ndarray | None = None) -> np.ndarray:
    """Antisymmetric matrix of hitting-time asymmetries H[i, j] - H[j, i]."""
    if h is None:
        h = hitting_times_solve(g)
    return h - h.T


@dataclass(frozen=True)
class WalkData:
    """Bundle of all random-walk quantities for one graph."""

    p: np.ndarray
    pi: np.ndarray
    h: np.ndarray
    kemeny: float
    asymmetry: np.ndarray


def walk_data(g: Graph, rel_tol: float = REL_TOL) -> WalkData:
    """Compute the full WalkData bundle in one pass."""
    h = hitting_times_solve(g)
    data = WalkData(
        p=transition_matrix(g),
        pi=stationary(g),
        h=h,
        kemeny=kemeny(g, rel_tol=rel_tol, h=h),
        asymmetry=h - h.T,
    )
    for arr in (data.p, data.pi, data.h, data.asymmetry):
        arr.setflags(write=False)
    return data
