"""Simple-graph core: construction, graph6 corpus I/O, cuts, vertex connectivity.

Vertices are always the dense integer range 0..n-1.  Graphs are immutable
after construction so they can be shared freely across worker processes.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text."""


class Graph:
    """Immutable simple undirected graph on vertex set {0, ..., n-1}."""

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        adj = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(frozenset(a) for a in adj))
        object.__setattr__(self, "_hash", hash((n, self.edges)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[Edge]:
        """Edges as sorted pairs in lexicographic order (deterministic)."""
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u] if 0 <= u < self.n and 0 <= v < self.n else False

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("min degree undefined for the empty graph")
        return min(len(a) for a in self.adj)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    # -- derived graphs ---------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, list(self.edges) + [(u, v)])

    def without_edge(self, u: int, v: int) -> "Graph":
        e = (u, v) if u < v else (v, u)
        if e not in self.edges:
            raise ValueError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def with_vertex(self, neighbors: Iterable[int] = ()) -> "Graph":
        """New graph with one extra vertex labelled n, joined to `neighbors`."""
        w = self.n
        return Graph(w + 1, list(self.edges) + [(x, w) for x in neighbors])

    # -- linear algebra views ---------------------------------------------

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def laplacian_matrix(self):
        import numpy as np

        a = self.adjacency_matrix()
        return np.diag(a.sum(axis=1)) - a

    # -- traversal --------------------------------------------------------

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == self.n

    def components(self) -> list[frozenset[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = {s}
            seen[s] = True
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.add(y)
                        queue.append(y)
            out.append(frozenset(comp))
        return out

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# -- constructors ---------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def linked_cliques(n: int, n1: int, links: int) -> Graph:
    """Two disjoint cliques (sizes n1 and n-n1) joined by `links` independent edges.

    The cross edges pair the lowest-labelled vertices of each clique:
    (0, n1), (1, n1+1), ..., (links-1, n1+links-1).
    """
    if not 1 <= n1 <= n - 1:
        raise ValueError(f"clique sizes must be positive: n={n}, n1={n1}")
    n2 = n - n1
    if not 0 <= links <= min(n1, n2):
        raise ValueError(
            f"links must satisfy 0 <= links <= min({n1},{n2}), got {links}"
        )
    edges = list(combinations(range(n1), 2))
    edges += list(combinations(range(n1, n), 2))
    edges += [(j, n1 + j) for j in range(links)]
    return Graph(n, edges)


def complete_split_graph(n: int) -> Graph:
    """An adjacent hub pair joined to an independent set of n-2 vertices."""
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got {n}")
    edges = [(0, 1)]
    edges += [(h, v) for h in (0, 1) for v in range(2, n)]
    return Graph(n, edges)


# -- graph6 codec ---------------------------------------------------------
#
# Standard 6-bit printable encoding: vertex count header, then the upper
# triangle of the adjacency matrix in column order x(0,1), x(0,2), x(1,2),
# x(0,3), ..., packed big-endian six bits per byte, each byte offset by 63.


def _g6_parse_n(data: bytes) -> tuple[int, int]:
    """Return (n, offset of the bit body).  Rejects non-minimal headers."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 2:
        raise Graph6Error("truncated length header")
    if data[1] != 126:
        if len(data) < 4:
            raise Graph6Error("truncated length header")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        if n < 63:
            raise Graph6Error("non-minimal length header")
        return n, 4
    if len(data) < 8:
        raise Graph6Error("truncated length header")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    if n < 258048:
        raise Graph6Error("non-minimal length header")
    return n, 8


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line.  Strict: trailing garbage or bad padding is an error."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error(f"non-ascii byte in graph6 string: {exc}") from None
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} at position {i} outside graph6 range")
    n, off = _g6_parse_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[off:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"body length {len(body)} != expected {nbytes} for n={n}"
        )
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    pad = nbytes * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    edges = []
    pos = nbits
    for v in range(1, n):
        for u in range(v):
            pos -= 1
            if bits >> pos & 1:
                edges.append((u, v))
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as a single graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    else:
        raise ValueError(f"n={n} too large for this writer")
    nbits = n * (n - 1) // 2
    bits = 0
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            bits = (bits << 1) | (1 if u in row else 0)
    pad = -nbits % 6
    bits <<= pad
    body = bytearray()
    for k in range((nbits + pad) // 6 - 1, -1, -1):
        body.append((bits >> 6 * k & 63) + 63)
    return (head + bytes(body)).decode("ascii")


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, stripped payload) skipping blank lines."""
    for i, raw in enumerate(lines, start=1):
        s = raw.strip()
        if s:
            yield i, s


# -- cut and induced-subgraph counting ------------------------------------


def _check_subset(g: Graph, s: Iterable[int]) -> frozenset[int]:
    fs = frozenset(s)
    for v in fs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return fs


def boundary_size(g: Graph, subset: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in `subset`.

    Requires a nonempty proper subset of the vertex set.
    """
    fs = _check_subset(g, subset)
    if not fs or len(fs) == g.n:
        raise ValueError("subset must be nonempty and proper")
    return sum(1 for u, v in g.edges if (u in fs) != (v in fs))


def induced_edge_count(g: Graph, subset: Iterable[int]) -> int:
    """Number of edges with both endpoints in `subset` (0 for empty subsets)."""
    fs = _check_subset(g, subset)
    return sum(1 for u, v in g.edges if u in fs and v in fs)


class VertexPartition:
    """A removed set Z plus a partition of the remaining vertices.

    Records the counts used by the packing inequality: `n_trivial` singleton
    parts, `n_nontrivial` larger parts, and `z_adjacency`, the number of
    edges joining a singleton part to Z.
    """

    __slots__ = ("graph", "z", "parts", "n_trivial", "n_nontrivial", "z_adjacency")

    def __init__(self, graph: Graph, z: Iterable[int], parts: Sequence[Iterable[int]]):
        zset = _check_subset(graph, z)
        rest = frozenset(range(graph.n)) - zset
        if not rest:
            raise ValueError("Z must leave at least one vertex")
        norm = []
        seen: set[int] = set()
        for p in parts:
            fp = frozenset(p)
            if not fp:
                raise ValueError("empty part not allowed")
            if not fp <= rest:
                raise ValueError("part overlaps Z or leaves the vertex range")
            if fp & seen:
                raise ValueError("parts must be disjoint")
            seen |= fp
            norm.append(fp)
        if seen != rest:
            raise ValueError("parts must cover every vertex outside Z")
        trivial = [p for p in norm if len(p) == 1]
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "z", zset)
        object.__setattr__(self, "parts", tuple(norm))
        object.__setattr__(self, "n_trivial", len(trivial))
        object.__setattr__(self, "n_nontrivial", len(norm) - len(trivial))
        zadj = 0
        for p in trivial:
            (v,) = p
            zadj += len(graph.adj[v] & zset)
        object.__setattr__(self, "z_adjacency", zadj)

    def __setattr__(self, name, value):
        raise AttributeError("VertexPartition is immutable")

    def __repr__(self):
        return (
            f"VertexPartition(|Z|={len(self.z)}, parts={len(self.parts)}, "
            f"trivial={self.n_trivial})"
        )


def partition_cut(g: Graph, vp: VertexPartition) -> int:
    """Edges of g - Z whose endpoints lie in different parts of vp."""
    if vp.graph != g:
        raise ValueError("partition was built for a different graph")
    where = {}
    for idx, p in enumerate(vp.parts):
        for v in p:
            where[v] = idx
    count = 0
    for u, v in g.edges:
        iu = where.get(u)
        iv = where.get(v)
        if iu is not None and iv is not None and iu != iv:
            count += 1
    return count


# -- vertex connectivity --------------------------------------------------
#
# Unit-capacity max flow on the split digraph (v_in -> v_out, capacity 1)
# gives the size of a minimum vertex cut between non-adjacent terminals.
# Minimising over a standard pair family yields kappa(G).


def _vertex_flow(g: Graph, s: int, t: int) -> int:
    """Max number of internally disjoint s-t paths; s,t must be non-adjacent."""
    # node 2v = in-copy, 2v+1 = out-copy; source = out(s), sink = in(t)
    cap: dict[tuple[int, int], int] = {}
    nbr: list[set[int]] = [set() for _ in range(2 * g.n)]

    def add(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        nbr[a].add(b)
        nbr[b].add(a)

    for v in range(g.n):
        if v not in (s, t):
            add(2 * v, 2 * v + 1, 1)
    for u, v in g.edges:
        add(2 * u + 1, 2 * v, g.n)
        add(2 * v + 1, 2 * u, g.n)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {src: src}
        queue = deque([src])
        while queue and snk not in parent:
            x = queue.popleft()
            for y in nbr[x]:
                if y not in parent and cap[(x, y)] > 0:
                    parent[y] = x
                    queue.append(y)
        if snk not in parent:
            return flow
        y = snk
        while y != src:
            x = parent[y]
            cap[(x, y)] -= 1
            cap[(y, x)] += 1
            y = x
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects g (or n-1 for K_n).

    For a fixed vertex u0 it suffices to minimise the terminal flow over
    all v outside N[u0] and over all non-adjacent pairs inside N(u0):
    any minimum cut misses some vertex of N[u0] or separates two
    neighbours of u0.
    """
    n = g.n
    if n <= 1:
        raise ValueError("connectivity needs at least 2 vertices")
    if g.is_complete():
        return n - 1
    if not g.is_connected():
        return 0
    u0 = min(range(n), key=g.degree)
    best = n - 1
    closed = set(g.adj[u0]) | {u0}
    for v in range(n):
        if v not in closed:
            best = min(best, _vertex_flow(g, u0, v))
            if best == 0:
                return 0
    for x, y in combinations(sorted(g.adj[u0]), 2):
        if y not in g.adj[x]:
            best = min(best, _vertex_flow(g, x, y))
            if best == 0:
                return 0
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """True when g has more than k vertices and no cut of fewer than k vertices."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return g.n >= 1
    if g.n <= k:
        return False
    return vertex_connectivity(g) >= k
