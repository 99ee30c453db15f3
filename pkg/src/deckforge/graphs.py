"""Small simple graphs on at most 64 vertices, stored as bitmask adjacency rows.

Vertices are labeled 0..n-1.  A vertex set is an int bitmask over those
labels.  All metric primitives (distance, eccentricity, girth, components)
live here; everything else in the package consumes them.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Optional

from .errors import InvalidVertexSet, NotConnected, ParseError

MAX_VERTICES = 64


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph.

    rows[v] is the neighborhood of v as a bitmask; the matrix is symmetric
    with zero diagonal.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError("row count does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} mentions vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u},{v})")
        self.n = n
        self.rows = rows
        self._hash = hash((n, rows))

    # -- basics ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"

    def vertices(self) -> range:
        return range(self.n)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.rows[v]):
                if u > v:
                    yield (v, u)

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2


# -- constructors -------------------------------------------------------


def graph_from_edges(n: int, edges) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: hub is vertex 0."""
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def spider_graph(*leg_lengths: int) -> Graph:
    """Spider with the given leg lengths; the root is vertex 0."""
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return graph_from_edges(nxt, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    rows = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph(offset, rows)


def relabel(g: Graph, perm) -> Graph:
    """Return the graph with vertex v renamed perm[v]."""
    rows = [0] * g.n
    for v in range(g.n):
        for u in bits(g.rows[v]):
            rows[perm[v]] |= 1 << perm[u]
    return Graph(g.n, rows)


# -- graph6 -------------------------------------------------------------

GRAPH6_HEADER = ">>graph6<<"


def graph6_encode(g: Graph) -> str:
    """Encode as graph6 (short form only, so n must be at most 62)."""
    n = g.n
    if n > 62:
        raise ValueError("graph6 short form supports at most 62 vertices")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for col in range(1, n):
        for row in range(col):
            acc = (acc << 1) | (g.rows[row] >> col & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 string; accepts and strips the optional header."""
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        s = s[base:]
    if not s:
        raise ParseError("empty graph6 string", base)
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise ParseError(f"unsupported vertex-count byte {s[0]!r}", base)
    if n == 0:
        raise ParseError("graph6 with zero vertices not supported", base)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != need:
        raise ParseError(
            f"expected {need} data bytes for n={n}, got {len(s) - 1}", base + 1
        )
    rows = [0] * n
    bitpos = 0
    for i, ch in enumerate(s[1:]):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ParseError(f"invalid graph6 byte {ch!r}", base + 1 + i)
        for b in range(5, -1, -1):
            if bitpos >= n * (n - 1) // 2:
                if val >> b & 1:
                    raise ParseError("nonzero padding bits", base + 1 + i)
                continue
            if val >> b & 1:
                # bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...
                col = _g6_col(bitpos)
                row = bitpos - col * (col - 1) // 2
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            bitpos += 1
    return Graph(n, rows)


def _g6_col(bitpos: int) -> int:
    # smallest col with col*(col-1)/2 > bitpos, minus one
    col = 1
    while (col + 1) * col // 2 <= bitpos:
        col += 1
    return col


# -- induced subgraphs --------------------------------------------------


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Restrict g to the vertex set `mask`, relabeling to 0..|mask|-1 while
    preserving the ascending order of the original labels."""
    if mask == 0 or mask & ~g.full_mask():
        raise InvalidVertexSet(f"mask {mask:#x} invalid for n={g.n}")
    verts = list(bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in bits(g.rows[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(verts), rows)


# -- metrics ------------------------------------------------------------


def distances_from(g: Graph, v: int, within: Optional[int] = None) -> list[int]:
    """BFS distances from v; -1 for unreachable vertices.

    `within` restricts the walk to a vertex mask (v must be in it).
    """
    if within is None:
        within = g.full_mask()
    dist = [-1] * g.n
    dist[v] = 0
    seen = 1 << v
    frontier = 1 << v
    d = 0
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.rows[u] & within
        nxt &= ~seen
        d += 1
        for u in bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return dist


def eccentricity(g: Graph, v: int) -> int:
    """Max distance from v to vertices of its own component."""
    return max(distances_from(g, v))


def component_of(g: Graph, v: int, within: Optional[int] = None) -> int:
    if within is None:
        within = g.full_mask()
    comp = 1 << v
    frontier = comp
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.rows[u] & within
        nxt &= ~comp
        comp |= nxt
        frontier = nxt
    return comp


def components(g: Graph, within: Optional[int] = None) -> list[int]:
    """Component vertex masks, ordered by smallest member."""
    if within is None:
        within = g.full_mask()
    out = []
    rem = within
    while rem:
        v = (rem & -rem).bit_length() - 1
        comp = component_of(g, v, within)
        out.append(comp)
        rem &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return component_of(g, 0) == g.full_mask()


def _require_connected(g: Graph):
    if not is_connected(g):
        raise NotConnected("operation defined only for connected graphs")


def diameter(g: Graph) -> int:
    _require_connected(g)
    return max(eccentricity(g, v) for v in range(g.n))


def radius(g: Graph) -> int:
    _require_connected(g)
    return min(eccentricity(g, v) for v in range(g.n))


def centers(g: Graph) -> int:
    """Mask of vertices of minimum eccentricity."""
    _require_connected(g)
    ecc = [eccentricity(g, v) for v in range(g.n)]
    r = min(ecc)
    mask = 0
    for v, e in enumerate(ecc):
        if e == r:
            mask |= 1 << v
    return mask


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for acyclic graphs."""
    best = None
    for root in range(g.n):
        # BFS from root; a non-tree edge at depths d(u), d(w) closes a cycle
        # of length d(u)+d(w)+1 through the root.
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            if best is not None and dist[u] * 2 >= best:
                break
            for w in bits(g.rows[u]):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u] and dist[w] >= dist[u]:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.n - 1 and is_connected(g)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees sorted descending, so sequences compare as multisets."""
    return tuple(sorted((popcount(r) for r in g.rows), reverse=True))
