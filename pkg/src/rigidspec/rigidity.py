"""Combinatorial planar rigidity: pebble-game rank, verdict predicates,
canonical labelling, and inductive enumeration of minimally rigid graphs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graphcore import Graph, complete_split_graph, is_k_connected, write_graph6

Edge = tuple[int, int]


# -- (2,3) pebble game ----------------------------------------------------
#
# Each vertex starts with 2 pebbles; an edge is accepted when 4 pebbles can
# be gathered on its endpoints, which then costs one pebble and orients the
# edge.  Accepted edges form a maximum independent set in the count matroid
# whose independent sets are the (2,3)-sparse edge sets, so the accepted
# count is the generic planar rigidity rank.


def _find_pebble(root: int, blocked: tuple[int, int], peb: list[int],
                 out: list[set[int]]) -> bool:
    """Pull one pebble to `root` along reversed orientation paths.

    Blocked vertices cannot donate a pebble but may be traversed.
    """
    seen = {root}
    parent: dict[int, int] = {}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in out[x]:
            if y in seen:
                continue
            seen.add(y)
            parent[y] = x
            if y not in blocked and peb[y] > 0:
                peb[y] -= 1
                peb[root] += 1
                cur = y
                while cur != root:
                    p = parent[cur]
                    out[p].discard(cur)
                    out[cur].add(p)
                    cur = p
                return True
            stack.append(y)
    return False


def _run_pebble_game(n: int, edge_seq: Sequence[Edge]) -> list[Edge]:
    """Accepted edges for the given insertion order."""
    peb = [2] * n
    out: list[set[int]] = [set() for _ in range(n)]
    accepted: list[Edge] = []
    cap = max(0, 2 * n - 3)
    for u, v in edge_seq:
        if len(accepted) == cap:
            break
        while peb[u] + peb[v] < 4:
            if not (_find_pebble(u, (u, v), peb, out)
                    or _find_pebble(v, (u, v), peb, out)):
                break
        if peb[u] + peb[v] >= 4:
            peb[u] -= 1
            out[u].add(v)
            accepted.append((u, v))
    return accepted


def pebble_rank(g: Graph) -> int:
    """Rank of the edge set in the generic planar rigidity matroid."""
    return len(_run_pebble_game(g.n, g.edge_list()))


def independent_edge_basis(g: Graph) -> list[Edge]:
    """A maximum (2,3)-sparse subset of the edges, in insertion order."""
    return _run_pebble_game(g.n, g.edge_list())


# -- verdict predicates ---------------------------------------------------


def is_rigid(g: Graph) -> bool:
    """Generic planar rigidity: rank reaches 2n-3."""
    if g.n < 2:
        raise ValueError("rigidity predicate needs at least 2 vertices")
    return pebble_rank(g) == 2 * g.n - 3


def laman_check(g: Graph) -> bool:
    """Minimal rigidity: exactly 2n-3 edges, all independent."""
    if g.n < 2:
        raise ValueError("minimal rigidity needs at least 2 vertices")
    return g.m == 2 * g.n - 3 and pebble_rank(g) == g.m


def is_redundantly_rigid(g: Graph) -> bool:
    """Rigid, and still rigid after deleting any single edge.

    Only basis edges need rechecking: a non-basis edge is spanned by the
    basis, so deleting it cannot drop the rank.
    """
    if g.n < 2:
        raise ValueError("redundancy predicate needs at least 2 vertices")
    target = 2 * g.n - 3
    basis = independent_edge_basis(g)
    if len(basis) < target:
        return False
    if g.m == target:
        return False
    for e in basis:
        rest = [f for f in g.edge_list() if f != e]
        if len(_run_pebble_game(g.n, rest)) < target:
            return False
    return True


def is_globally_rigid(g: Graph) -> bool:
    """Unique generic realisation up to congruence.

    Complete graphs on at most 3 vertices qualify outright; otherwise the
    combinatorial characterisation is 3-connectivity plus redundant rigidity.
    """
    if g.n < 2:
        raise ValueError("global rigidity needs at least 2 vertices")
    if g.n <= 3:
        return g.is_complete()
    return is_k_connected(g, 3) and is_redundantly_rigid(g)


@dataclass(frozen=True)
class RigidityVerdict:
    rank: int
    rigid: bool
    minimally_rigid: bool
    redundantly_rigid: bool
    globally_rigid: bool

    def as_dict(self) -> dict:
        return {
            "rank": self.rank,
            "rigid": self.rigid,
            "minimally_rigid": self.minimally_rigid,
            "redundantly_rigid": self.redundantly_rigid,
            "globally_rigid": self.globally_rigid,
        }


def rigidity_verdict(g: Graph) -> RigidityVerdict:
    """All rigidity predicates in one pass.  Single vertices count as rigid."""
    if g.n < 1:
        raise ValueError("verdict needs at least 1 vertex")
    rank = pebble_rank(g)
    target = max(0, 2 * g.n - 3)
    rigid = rank == target
    minimal = g.m == 2 * g.n - 3 and rank == g.m
    if g.n == 1:
        redundant = True
    else:
        redundant = is_redundantly_rigid(g)
    if g.n == 1:
        glob = True
    else:
        glob = is_globally_rigid(g)
    return RigidityVerdict(rank, rigid, minimal, redundant, glob)


# -- canonical labelling --------------------------------------------------
#
# Iterated neighbourhood-colour refinement splits the vertices into
# label-invariant classes; a class-respecting backtracking search then
# maximises the upper-triangle bit string, which is exactly the graph6
# body, so the canonical form doubles as a corpus-ready graph6 line.


def _refine_classes(g: Graph) -> list[int]:
    n = g.n
    colour = [0] * n
    while True:
        sigs = [
            (colour[v], tuple(sorted(colour[w] for w in g.adj[v])))
            for v in range(n)
        ]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colour:
            return colour
        colour = new


def _are_twins(g: Graph, u: int, w: int) -> bool:
    return g.adj[u] - {w} == g.adj[w] - {u}


def canonical_graph(g: Graph) -> Graph:
    """Relabelling of g whose upper-triangle bit string is lexicographically
    largest among all labellings, computed exactly."""
    n = g.n
    if n <= 1:
        return g
    colour = _refine_classes(g)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colour):
        classes.setdefault(c, []).append(v)
    # position k draws from the class scheduled at k (classes in colour order)
    schedule: list[int] = []
    for c in sorted(classes):
        schedule.extend([c] * len(classes[c]))

    best_chunks: list[tuple[int, ...]] | None = None
    best_perm: list[int] | None = None

    def dfs(placed: list[int], used: set[int], chunks: list[tuple[int, ...]]):
        nonlocal best_chunks, best_perm
        k = len(placed)
        if k == n:
            if best_chunks is None or chunks > best_chunks:
                best_chunks = list(chunks)
                best_perm = list(placed)
            return
        # prune against the incumbent as soon as the prefix falls behind
        if best_chunks is not None and chunks < best_chunks[:k]:
            return
        cands = [v for v in classes[schedule[k]] if v not in used]
        scored: dict[tuple[int, ...], list[int]] = {}
        for v in cands:
            bits = tuple(1 if p in g.adj[v] else 0 for p in placed)
            scored.setdefault(bits, []).append(v)
        top = max(scored)
        survivors = scored[top]
        # collapse interchangeable candidates: swapping twins is an automorphism
        pruned: list[int] = []
        for v in survivors:
            if not any(_are_twins(g, v, w) for w in pruned):
                pruned.append(v)
        chunks.append(top)
        for v in pruned:
            placed.append(v)
            used.add(v)
            dfs(placed, used, chunks)
            used.discard(v)
            placed.pop()
        chunks.pop()

    dfs([], set(), [])
    assert best_perm is not None
    pos = {v: i for i, v in enumerate(best_perm)}
    return Graph(n, [(pos[u], pos[v]) for u, v in g.edges])


def canonical_form(g: Graph) -> str:
    """graph6 line of the canonical relabelling; equal iff isomorphic."""
    return write_graph6(canonical_graph(g))


def graphs_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)


# -- enumeration of minimally rigid graphs --------------------------------


def _extensions(g: Graph) -> Iterable[Graph]:
    """All single-vertex inductive extensions preserving minimal rigidity."""
    verts = range(g.n)
    # degree-2 attachment to any vertex pair
    for u, v in combinations(verts, 2):
        yield g.with_vertex((u, v))
    # edge split: remove uv, attach the new vertex to u, v and a third vertex
    for u, v in g.edge_list():
        base = g.without_edge(u, v)
        for w in verts:
            if w != u and w != v:
                yield base.with_vertex((u, v, w))


def enumerate_minimally_rigid(n: int) -> list[Graph]:
    """All minimally rigid graphs on n vertices, one per isomorphism class.

    Grown from a single edge by degree-2 additions and edge splits, with
    canonical-form deduplication at every level.  Practical for n <= 9.
    """
    if not 2 <= n <= 9:
        raise ValueError(f"enumeration supported for 2 <= n <= 9, got {n}")
    level: dict[str, Graph] = {}
    seed = Graph(2, [(0, 1)])
    level[canonical_form(seed)] = seed
    for _ in range(n - 2):
        nxt: dict[str, Graph] = {}
        for g in level.values():
            for h in _extensions(g):
                key = canonical_form(h)
                if key not in nxt:
                    nxt[key] = canonical_graph(h)
        level = nxt
    return [level[k] for k in sorted(level)]
