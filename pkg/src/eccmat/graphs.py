"""Graphs, trees, distances, centers, and the diameter-based vertex partitions.

Vertices are integers 0..n-1 and every graph is simple and connected; both
properties are enforced at construction time so no later operation has to
re-check them. Trees additionally carry the n-1 edge invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import IntSymMatrix


class Graph:
    """Simple connected undirected graph with sorted adjacency lists."""

    __slots__ = ("n", "adj", "edge_count")

    def __init__(self, n: int, edges):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        nbrs = [set() for _ in range(n)]
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            count += 1
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.edge_count = count
        if self._reachable_from_zero() != n:
            raise ValueError("graph must be connected")

    def _reachable_from_zero(self) -> int:
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count

    def neighbors(self, v: int):
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self):
        """Edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, m={self.edge_count})"


class Tree(Graph):
    """Connected graph with exactly n-1 edges."""

    def __init__(self, n: int, edges):
        super().__init__(n, edges)
        if self.edge_count != n - 1:
            raise ValueError(f"tree on {n} vertices needs {n - 1} edges, got {self.edge_count}")


def bfs_distances(g: Graph, source: int):
    """Distance row from source, computed by breadth-first search."""
    if not 0 <= source < g.n:
        raise ValueError("source out of range")
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    adj = g.adj
    while frontier:
        nxt = []
        for u in frontier:
            du1 = dist[u] + 1
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du1
                    nxt.append(w)
        frontier = nxt
    return dist


def distance_matrix(g: Graph) -> IntSymMatrix:
    """All-pairs distances; symmetric with zero diagonal."""
    return IntSymMatrix([bfs_distances(g, s) for s in range(g.n)])


@dataclass(frozen=True)
class TreeMeta:
    """Eccentricities, diameter, centers, and distinguished vertices.

    distinguished holds, for even diameter, the neighbors of the center that
    lie on some diametrical path; distinguished_count is its size. For odd
    diameter the set is empty and the count is None.
    """

    ecc: tuple
    diameter: int
    centers: tuple
    distinguished: frozenset
    distinguished_count: int | None


def tree_meta(t: Tree, dist: IntSymMatrix | None = None) -> TreeMeta:
    """Compute eccentricities, centers, and the distinguished-vertex set."""
    if dist is None:
        dist = distance_matrix(t)
    ecc = tuple(max(row) for row in dist.rows)
    diameter = max(ecc)
    radius = min(ecc)
    centers = tuple(v for v in range(t.n) if ecc[v] == radius)
    if diameter % 2 == 1:
        if len(centers) != 2 or centers[1] not in t.adj[centers[0]]:
            raise RuntimeError("odd-diameter tree must have two adjacent centers")
        return TreeMeta(ecc, diameter, centers, frozenset(), None)
    if len(centers) != 1:
        raise RuntimeError("even-diameter tree must have a unique center")
    u0 = centers[0]
    d = diameter // 2
    distinguished = set()
    if d >= 1:
        # v is distinguished iff some deepest vertex lies in v's branch,
        # i.e. dist(v, w) = d - 1 for a vertex w at distance d from u0.
        row0 = dist.rows[u0]
        for w in range(t.n):
            if row0[w] == d:
                for v in t.adj[u0]:
                    if dist.rows[v][w] == d - 1:
                        distinguished.add(v)
                        break
    return TreeMeta(ecc, diameter, centers, frozenset(distinguished), len(distinguished))


@dataclass(frozen=True)
class VertexPartition:
    """Ordered disjoint vertex classes covering V(T).

    kind "odd": 4 classes (deep side 1, deep side 2, rest side 1, rest side 2).
    kind "even": 2l+1 classes (l deep classes, l mid classes, center class).
    """

    parts: tuple
    kind: str


def partition_vertices(
    t: Tree,
    meta: TreeMeta,
    kind: str | None = None,
    dist: IntSymMatrix | None = None,
) -> VertexPartition:
    """Split V(T) into the diameter-parity partition used by the inertia checks."""
    parity = "odd" if meta.diameter % 2 == 1 else "even"
    if kind is None:
        kind = parity
    elif kind != parity:
        raise ValueError(f"requested {kind} partition but diameter {meta.diameter} is {parity}")

    if dist is None:
        dist = distance_matrix(t)
    if kind == "odd":
        if meta.diameter < 3:
            raise ValueError("odd partition needs diameter >= 3")
        d = (meta.diameter - 1) // 2
        u0, v0 = meta.centers
        du = dist.rows[u0]
        dv = dist.rows[v0]
        side1 = [w for w in range(t.n) if du[w] < dv[w]]
        side2 = [w for w in range(t.n) if dv[w] < du[w]]
        parts = (
            frozenset(w for w in side1 if du[w] == d),
            frozenset(w for w in side2 if dv[w] == d),
            frozenset(w for w in side1 if du[w] < d),
            frozenset(w for w in side2 if dv[w] < d),
        )
    else:
        if meta.diameter < 4:
            raise ValueError("even partition needs diameter >= 4")
        d = meta.diameter // 2
        u0 = meta.centers[0]
        du = dist.rows[u0]
        branches = sorted(meta.distinguished)
        deep_parts = []
        mid_parts = []
        assigned = set()
        for ui in branches:
            di = dist.rows[ui]
            branch = [w for w in range(t.n) if di[w] == du[w] - 1]
            assigned.update(branch)
            deep_parts.append(frozenset(w for w in branch if du[w] == d))
            mid_parts.append(frozenset(w for w in branch if 0 < du[w] < d))
        center_part = frozenset(w for w in range(t.n) if w not in assigned)
        parts = tuple(deep_parts) + tuple(mid_parts) + (center_part,)

    covered = set()
    total = 0
    for p in parts:
        total += len(p)
        covered.update(p)
    if total != t.n or len(covered) != t.n:
        raise RuntimeError("partition classes must be disjoint and cover V(T)")
    return VertexPartition(parts, kind)


def diametrical_pairing(g: Graph, dist: IntSymMatrix | None = None):
    """The involution pairing each vertex with its unique diametral partner,
    or None when some vertex has zero or several partners."""
    if dist is None:
        dist = distance_matrix(g)
    diameter = max(max(row) for row in dist.rows)
    pairing = {}
    for v in range(g.n):
        partners = [w for w in range(g.n) if dist.rows[v][w] == diameter]
        if len(partners) != 1:
            return None
        pairing[v] = partners[0]
    return pairing


def read_edge_list(text: str) -> Graph:
    """Parse the "n m" header plus m "u v" lines into a Graph."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError("first line must be 'n m'") from None
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"bad edge line: {ln!r}") from None
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    """Serialize a graph in the edge-list text format."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines)


def read_graph6(line: str) -> Graph:
    """Decode one graph6 line (up to 62 vertices) into a Graph."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("invalid graph6 character")
    if data[0] == 63:
        raise ValueError("graph6 input with more than 62 vertices is not supported")
    n = data[0]
    if n < 1:
        raise ValueError("graph6 graph must have at least one vertex")
    need = n * (n - 1) // 2
    bits = []
    for b in data[1:]:
        for k in range(5, -1, -1):
            bits.append((b >> k) & 1)
    if len(bits) < need:
        raise ValueError("graph6 string too short")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, edges)


def read_graph6_file(text: str):
    """List of graphs, one per nonempty graph6 line."""
    return [read_graph6(ln) for ln in text.splitlines() if ln.strip()]
