"""Automorphism enumeration, orbit partitions, and the symmetry classification ladder.

The ladder: regular -> walk-regular -> distance-regular, plus vertex/edge
transitivity from the automorphism group and the hitting-time symmetry (HS)
verdict from the walk module. Transitivity is decided by exhaustive
enumeration of the group, guarded by a configurable cap; correctness over
speed at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AutomorphismCapExceeded, NumericalError
from .graphs import Graph, distance_matrix
from .walks import hitting_times_solve

DEFAULT_AUTOMORPHISM_CAP = 10**6
AUTOMORPHISM_MAX_N = 64
HS_TOL = 1e-9


@dataclass(frozen=True)
class Permutation:
    """A bijection on 0..n-1, stored as the image vector."""

    image: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.image[v]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(v) = self(other(v))."""
        return Permutation(tuple(self.image[w] for w in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))

    def preserves(self, g: Graph) -> bool:
        """Post-hoc edge-by-edge check that this permutation is an automorphism."""
        if sorted(self.image) != list(range(g.n)):
            return False
        for u, v in g.edges:
            if not g.has_edge(self.image[u], self.image[v]):
                return False
        return True


@dataclass(frozen=True)
class OrbitPartition:
    """Disjoint classes covering the vertex set (or the edge set)."""

    classes: tuple[tuple, ...]


@dataclass(frozen=True)
class IntersectionArray:
    """Distance-regularity data (b_0..b_{D-1}; c_1..c_D)."""

    diameter: int
    b: tuple[int, ...]
    c: tuple[int, ...]


@dataclass(frozen=True)
class SymmetryReport:
    """Classification flags plus the evidence they were derived from.

    vertex_transitive, edge_transitive, automorphism_count and the orbit
    partitions are None when the automorphism group was not computed (n > 64
    or cap exceeded); they are never silently false.
    """

    regular: bool
    walk_regular: bool
    distance_regular: bool
    vertex_transitive: bool | None
    edge_transitive: bool | None
    hs: bool
    automorphism_count: int | None
    vertex_orbits: OrbitPartition | None
    edge_orbits: OrbitPartition | None
    intersection_array: IntersectionArray | None
    max_hitting_asymmetry: float


def _refine_colors(adjacency: tuple[tuple[int, ...], ...], colors: list[int]) -> list[int]:
    """Iterated neighborhood-color refinement to a stable partition.

    Class ids are canonical (assigned by sorted signature), so two refinements
    of structurally identical colorings produce identical id vectors.
    """
    n = len(adjacency)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in adjacency[v])))
            for v in range(n)
        ]
        rank = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [rank[sigs[v]] for v in range(n)]
        if new == colors:
            return colors
        colors = new


def automorphisms(g: Graph, cap: int = DEFAULT_AUTOMORPHISM_CAP) -> list[Permutation]:
    """Enumerate the full automorphism group by backtracking over vertex images.

    Candidate image sets start from the stable coloring of iterated
    neighborhood-degree refinement and are re-narrowed at every branch:
    assigning u -> w intersects every open candidate set with the neighbors
    (or non-neighbors) of w, so each accepted leaf is adjacency-consistent on
    all pairs. The returned list is sorted by image vector, hence
    deterministic, and always contains the identity.

    Raises AutomorphismCapExceeded as soon as more than `cap` automorphisms
    have been found.
    """
    n = g.n
    colors = _refine_colors(g.adjacency, [0] * n)
    color_mask: dict[int, int] = {}
    for v, c in enumerate(colors):
        color_mask[c] = color_mask.get(c, 0) | (1 << v)
    adj_mask = [0] * n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u

    found: list[tuple[int, ...]] = []
    image = [-1] * n

    def dfs(cand: list[int], open_mask: int) -> None:
        if open_mask == 0:
            found.append(tuple(image))
            if len(found) > cap:
                raise AutomorphismCapExceeded(cap)
            return
        # most-constrained open vertex; lowest id breaks ties
        u, best = -1, n + 1
        mm = open_mask
        while mm:
            bit = mm & -mm
            v = bit.bit_length() - 1
            mm ^= bit
            size = cand[v].bit_count()
            if size < best:
                u, best = v, size
                if size <= 1:
                    break
        rest = open_mask & ~(1 << u)
        au = adj_mask[u]
        options = cand[u]
        while options:
            wbit = options & -options
            options ^= wbit
            w = wbit.bit_length() - 1
            aw = adj_mask[w]
            naw = ~aw
            nxt = list(cand)
            ok = True
            mm = rest
            while mm:
                bit = mm & -mm
                x = bit.bit_length() - 1
                mm ^= bit
                cx = nxt[x] & ~wbit
                cx &= aw if (au >> x) & 1 else naw
                if cx == 0:
                    ok = False
                    break
                nxt[x] = cx
            if ok:
                image[u] = w
                dfs(nxt, rest)
                image[u] = -1

    dfs([color_mask[colors[v]] for v in range(n)], (1 << n) - 1)
    found.sort()
    return [Permutation(image=t) for t in found]


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _orbits_from(g: Graph, perms: list[Permutation]) -> tuple[OrbitPartition, OrbitPartition]:
    """Union-find closure of vertex and edge mappings over all given automorphisms."""
    n = g.n
    images = np.array([p.image for p in perms], dtype=np.int64)

    dsu = _DSU(n)
    vertex_pairs = np.unique(
        np.stack([np.tile(np.arange(n), len(perms)), images.reshape(-1)], axis=1),
        axis=0,
    )
    for a, b in vertex_pairs.tolist():
        dsu.union(a, b)
    by_root: dict[int, list[int]] = {}
    for v in range(n):
        by_root.setdefault(dsu.find(v), []).append(v)
    vclasses = tuple(tuple(sorted(c)) for c in sorted(by_root.values(), key=min))

    edge_list = sorted(g.edges)
    codes = {u * n + v: i for i, (u, v) in enumerate(edge_list)}
    base = np.array([u * n + v for u, v in edge_list], dtype=np.int64)
    mapped = np.sort(images[:, np.array(edge_list, dtype=np.int64)], axis=2)
    mapped_codes = mapped[:, :, 0] * n + mapped[:, :, 1]
    edge_pairs = np.unique(
        np.stack([np.tile(base, len(perms)), mapped_codes.reshape(-1)], axis=1), axis=0
    )
    edsu = _DSU(len(edge_list))
    for a, b in edge_pairs.tolist():
        edsu.union(codes[a], codes[b])
    eby_root: dict[int, list[int]] = {}
    for i in range(len(edge_list)):
        eby_root.setdefault(edsu.find(i), []).append(i)
    eclasses = tuple(
        tuple(edge_list[i] for i in sorted(c))
        for c in sorted(eby_root.values(), key=min)
    )
    return OrbitPartition(classes=vclasses), OrbitPartition(classes=eclasses)


def orbit_partitions(
    g: Graph, cap: int = DEFAULT_AUTOMORPHISM_CAP
) -> tuple[OrbitPartition, OrbitPartition]:
    """Vertex and edge orbit partitions under the full automorphism group."""
    return _orbits_from(g, automorphisms(g, cap))


def vertex_orbits(g: Graph, cap: int = DEFAULT_AUTOMORPHISM_CAP) -> OrbitPartition:
    return orbit_partitions(g, cap)[0]


def edge_orbits(g: Graph, cap: int = DEFAULT_AUTOMORPHISM_CAP) -> OrbitPartition:
    return orbit_partitions(g, cap)[1]


def is_walk_regular(g: Graph) -> bool:
    """Whether every adjacency-matrix power has a constant diagonal.

    Uses exact integer arithmetic (entries grow like d^k and would overflow
    doubles). Powers k = 2..n-1 suffice: the characteristic polynomial has
    degree n, so A^k for k >= n is an integer combination of lower powers and
    cannot break diagonal constancy on its own.
    """
    n = g.n
    power = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        power[u][v] = power[v][u] = 1
    for _ in range(2, n):
        power = [
            [sum(col) for col in zip(*(power[k] for k in g.adjacency[i]))]
            for i in range(n)
        ]
        first = power[0][0]
        if any(power[i][i] != first for i in range(1, n)):
            return False
    return True


def is_distance_regular(g: Graph) -> tuple[bool, IntersectionArray | None]:
    """Pair-counting check of distance regularity; returns the array when it holds.

    For every ordered pair (u, v) at distance j, the number of neighbors of u
    at distance j-1 from v must be a constant c_j and the number at distance
    j+1 a constant b_j.
    """
    if not g.is_regular():
        return False, None
    dist = distance_matrix(g)
    diam = int(dist.max())
    b_vals: list[int | None] = [g.degrees[0]] + [None] * (diam - 1)
    c_vals: list[int | None] = [None] * diam
    for u in range(g.n):
        du = dist[u]
        for v in range(g.n):
            j = int(dist[u, v])
            if j == 0:
                continue
            closer = 0
            farther = 0
            for w in g.adjacency[u]:
                dw = dist[w, v]
                if dw == j - 1:
                    closer += 1
                elif dw == j + 1:
                    farther += 1
            if c_vals[j - 1] is None:
                c_vals[j - 1] = closer
            elif c_vals[j - 1] != closer:
                return False, None
            if j < diam:
                if b_vals[j] is None:
                    b_vals[j] = farther
                elif b_vals[j] != farther:
                    return False, None
            elif farther != 0:
                return False, None
    return True, IntersectionArray(
        diameter=diam, b=tuple(b_vals), c=tuple(c_vals)
    )


def is_hs(g: Graph, tol: float = HS_TOL) -> bool:
    """Hitting-time symmetry: max |H_ij - H_ji| within tol of the largest hitting time."""
    h = hitting_times_solve(g)
    return float(np.abs(h - h.T).max()) <= tol * float(h.max())


def classify(
    g: Graph,
    cap: int = DEFAULT_AUTOMORPHISM_CAP,
    tol: float = HS_TOL,
) -> SymmetryReport:
    """Run the full classification ladder and cross-check the implication chain.

    Automorphism-dependent fields are left as None ("not computed") for
    n > 64 or when the group outgrows `cap`.
    """
    regular = g.is_regular()
    walk_regular = is_walk_regular(g)
    distance_regular, array = is_distance_regular(g)
    h = hitting_times_solve(g)
    max_asym = float(np.abs(h - h.T).max())
    hs = max_asym <= tol * float(h.max())

    vt: bool | None = None
    et: bool | None = None
    count: int | None = None
    vorb: OrbitPartition | None = None
    eorb: OrbitPartition | None = None
    if g.n <= AUTOMORPHISM_MAX_N:
        try:
            perms = automorphisms(g, cap)
        except AutomorphismCapExceeded:
            pass
        else:
            count = len(perms)
            vorb, eorb = _orbits_from(g, perms)
            vt = len(vorb.classes) == 1
            et = len(eorb.classes) == 1

    report = SymmetryReport(
        regular=regular,
        walk_regular=walk_regular,
        distance_regular=distance_regular,
        vertex_transitive=vt,
        edge_transitive=et,
        hs=hs,
        automorphism_count=count,
        vertex_orbits=vorb,
        edge_orbits=eorb,
        intersection_array=array,
        max_hitting_asymmetry=max_asym,
    )
    _check_consistency(report)
    return report


def _check_consistency(r: SymmetryReport) -> None:
    """The implication chain must hold on every classified graph."""
    if r.distance_regular and not r.walk_regular:
        raise NumericalError("inconsistent report: distance-regular but not walk-regular")
    if r.walk_regular and not r.regular:
        raise NumericalError("inconsistent report: walk-regular but not regular")
    if r.vertex_transitive and not r.hs:
        raise NumericalError("inconsistent report: vertex-transitive but not HS")
    if r.edge_transitive and r.regular and not r.hs:
        raise NumericalError("inconsistent report: edge-transitive regular but not HS")
