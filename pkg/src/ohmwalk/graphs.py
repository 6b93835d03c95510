"""Simple connected graphs: edge-list I/O, named families, LCF chords, conjoined composites.

Vertices are always labeled 0..n-1. Graphs are immutable after construction and
every constructor runs the same validation (simple, connected, n >= 2), so any
Graph instance handed around the package is safe to use.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphError


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def is_regular(self) -> bool:
        return min(self.degrees) == max(self.degrees)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def degree_vector(self) -> np.ndarray:
        return np.asarray(self.degrees, dtype=float)


@dataclass(frozen=True)
class CompositeSpec:
    """alpha copies of a base graph, glued at the base vertex `glue`."""

    base: Graph
    alpha: int
    glue: int = 0

    def __post_init__(self):
        if self.alpha < 1:
            raise GraphError(f"copy count must be >= 1, got {self.alpha}")
        if not 0 <= self.glue < self.base.n:
            raise GraphError(
                f"glue vertex {self.glue} out of range 0..{self.base.n - 1}"
            )


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    edge_lines: Sequence[int] | None = None,
) -> Graph:
    """Validate raw edges and assemble a Graph.

    Rejects self-loops, duplicate edges, out-of-range ids, and disconnected
    results. `edge_lines`, when given, maps each edge to its 1-based source
    line for error messages.
    """
    if n < 2:
        raise GraphError(f"graph needs at least 2 vertices, got {n}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for idx, (u, v) in enumerate(edges):
        line = edge_lines[idx] if edge_lines is not None else None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range 0..{n - 1} in edge ({u}, {v})", line)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}", line)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge {key}", line)
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    if not seen:
        raise GraphError("graph has no edges")

    reached = bytearray(n)
    reached[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not reached[y]:
                reached[y] = 1
                count += 1
                queue.append(y)
    if count != n:
        raise GraphError(
            f"graph is disconnected ({count} of {n} vertices reachable from vertex 0)"
        )

    return Graph(
        n=n,
        edges=frozenset(seen),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adj),
        degrees=tuple(len(nbrs) for nbrs in adj),
    )


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Lines hold "u v" 0-based integer pairs; '#' starts a comment; an optional
    header line "n <count>" fixes the vertex count (otherwise 1 + max id).
    """
    declared: int | None = None
    declared_line: int | None = None
    pairs: list[tuple[int, int]] = []
    pair_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if declared is not None:
                raise GraphError("duplicate 'n' header", lineno)
            if len(tokens) != 2:
                raise GraphError(f"malformed header line {line!r}", lineno)
            try:
                declared = int(tokens[1])
            except ValueError:
                raise GraphError(f"malformed header line {line!r}", lineno) from None
            declared_line = lineno
            continue
        if len(tokens) != 2:
            raise GraphError(f"malformed edge line {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphError(f"malformed edge line {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphError(f"negative vertex id in edge line {line!r}", lineno)
        pairs.append((u, v))
        pair_lines.append(lineno)
    if not pairs:
        raise GraphError("document contains no edges")
    max_id = max(max(u, v) for u, v in pairs)
    if declared is not None and declared <= max_id:
        raise GraphError(
            f"header declares n={declared} but vertex id {max_id} appears",
            declared_line,
        )
    n = declared if declared is not None else max_id + 1
    return build_graph(n, pairs, pair_lines)


def write_graph(g: Graph, comment: str | None = None) -> str:
    """Emit the edge-list document for `g` (parse_graph round-trips it)."""
    lines = []
    if comment is not None:
        lines.append(f"# generated: {comment}")
    lines.append(f"n {g.n}")
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def family_label(family: str, params: Sequence[int] = ()) -> str:
    """Canonical "family(p1,p2)" label used by the writer and the verify corpus."""
    return f"{family}({','.join(str(p) for p in params)})"


def lcf(offsets: Sequence[int], repeat: int) -> Graph:
    """Hamiltonian cycle 0-1-...-(n-1)-0 plus the chord {i, i + offsets[i mod len]} for every i.

    Generalized semantics: the chord relation need not be involutive, so a
    vertex may end up in more than one chord and degrees may exceed 3.
    Duplicate chords collapse silently; a chord that would duplicate a cycle
    edge (offset +-1 mod n) or form a self-loop (offset 0 mod n) is an error.
    """
    if not offsets:
        raise GraphError("offset list must not be empty")
    if repeat < 1:
        raise GraphError(f"repeat count must be >= 1, got {repeat}")
    n = len(offsets) * repeat
    if n < 3:
        raise GraphError(f"lcf graph needs at least 3 vertices, got {n}")
    for off in offsets:
        r = off % n
        if r == 0:
            raise GraphError(f"offset {off} is a self-loop mod {n}")
        if r in (1, n - 1):
            raise GraphError(f"offset {off} duplicates a cycle edge mod {n}")
    edges = {(i, i + 1) if i + 1 < n else (0, n - 1) for i in range(n)}
    for i in range(n):
        j = (i + offsets[i % len(offsets)]) % n
        edges.add((i, j) if i < j else (j, i))
    return build_graph(n, sorted(edges))


def conjoin(spec: CompositeSpec) -> Graph:
    """Glue alpha copies of the base at one shared vertex.

    The glue vertex becomes global vertex 0; copy t (t = 0..alpha-1) maps base
    vertex v != glue to t*(n-1) + rank(v) + 1 where rank skips the glue vertex.
    """
    base, alpha, c = spec.base, spec.alpha, spec.glue
    block = base.n - 1

    def gid(t: int, v: int) -> int:
        if v == c:
            return 0
        return t * block + (v if v < c else v - 1) + 1

    edges = []
    for t in range(alpha):
        for u, v in sorted(base.edges):
            a, b = gid(t, u), gid(t, v)
            edges.append((a, b) if a < b else (b, a))
    return build_graph(alpha * block + 1, edges)


def _complete(m: int) -> Graph:
    if m < 2:
        raise GraphError(f"complete(m) requires m >= 2, got {m}")
    return build_graph(m, combinations(range(m), 2))


def _cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle(k) requires k >= 3, got {k}")
    return build_graph(k, [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)])


def _path(k: int) -> Graph:
    if k < 2:
        raise GraphError(f"path(k) requires k >= 2, got {k}")
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def _star(leaves: int) -> Graph:
    if leaves < 1:
        raise GraphError(f"star(leaves) requires leaves >= 1, got {leaves}")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError(f"complete_bipartite(a,b) requires a,b >= 1, got ({a},{b})")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _hypercube(d: int) -> Graph:
    if d < 1:
        raise GraphError(f"hypercube(d) requires d >= 1, got {d}")
    n = 1 << d
    return build_graph(
        n, [(v, v ^ (1 << bit)) for v in range(n) for bit in range(d) if v < v ^ (1 << bit)]
    )


def _petersen() -> Graph:
    # Kneser construction: vertices are the 2-subsets of a 5-set, adjacent iff disjoint.
    pairs = list(combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in combinations(range(len(pairs)), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return build_graph(len(pairs), edges)


def _folkman() -> Graph:
    return lcf([5, -7, -7, 5], 5)


def _windmill(eta: int, k: int) -> Graph:
    if eta < 1:
        raise GraphError(f"windmill(eta,k) requires eta >= 1, got eta={eta}")
    if k < 1:
        raise GraphError(f"windmill(eta,k) requires k >= 1, got k={k}")
    return conjoin(CompositeSpec(base=_complete(k + 1), alpha=eta, glue=0))


_FAMILIES = {
    "complete": (_complete, 1),
    "cycle": (_cycle, 1),
    "path": (_path, 1),
    "star": (_star, 1),
    "complete_bipartite": (_complete_bipartite, 2),
    "hypercube": (_hypercube, 1),
    "petersen": (_petersen, 0),
    "folkman": (_folkman, 0),
    "windmill": (_windmill, 2),
}


def generate(family: str, params: Sequence[int] = ()) -> Graph:
    """Build a named graph family member; see _FAMILIES for the accepted names."""
    if family not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise GraphError(f"unknown family {family!r} (known: {known})")
    builder, arity = _FAMILIES[family]
    params = tuple(int(p) for p in params)
    if len(params) != arity:
        raise GraphError(
            f"family {family!r} takes {arity} parameter(s), got {len(params)}"
        )
    return builder(*params)


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs BFS shortest-path lengths (symmetric, zero diagonal)."""
    dist = np.full((g.n, g.n), -1, dtype=np.int64)
    for src in range(g.n):
        row = dist[src]
        row[src] = 0
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if row[y] < 0:
                    row[y] = row[x] + 1
                    queue.append(y)
    return dist


def diameter(g: Graph) -> int:
    return int(distance_matrix(g).max())
