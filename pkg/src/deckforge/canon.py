"""Exact canonical labeling and isomorphism testing.

A CanonicalCode is the graph6 string of a canonically relabeled copy of the
graph, so two graphs get the same code iff they are isomorphic and the code
decodes back to a member of the class.

The labeling is computed per component: tree components through a
center-rooted code (children ordered by subtree code), cyclic components
through branch-and-bound for the labeling whose adjacency bit string is
lexicographically smallest.  Components are then concatenated in sorted
order of (size, component code).  Everything is memoized, which is what
makes deck computation over millions of cards feasible.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import (
    Graph,
    bits,
    components,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    popcount,
)

CanonicalCode = str


# -- tree components ----------------------------------------------------


def _tree_centers(rows: list[int]) -> list[int]:
    """Centers of a connected tree given as repacked adjacency rows."""
    n = len(rows)
    if n == 1:
        return [0]
    deg = [popcount(r) for r in rows]
    alive = (1 << n) - 1
    remaining = n
    layer = [v for v in range(n) if deg[v] <= 1]
    while remaining > 2:
        nxt = []
        for v in layer:
            alive &= ~(1 << v)
            remaining -= 1
            for u in bits(rows[v] & alive):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return [v for v in range(n) if alive >> v & 1]


def _rooted_code(rows, root: int) -> str:
    """Nested-parentheses code of the tree rooted at `root`."""
    code = {}
    order = _postorder(rows, root)
    for v, parent in order:
        kids = sorted(code[u] for u in bits(rows[v]) if u != parent)
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def _postorder(rows, root):
    """(vertex, parent) pairs with children before parents."""
    out = []
    stack = [(root, -1)]
    while stack:
        v, p = stack.pop()
        out.append((v, p))
        for u in bits(rows[v]):
            if u != p:
                stack.append((u, v))
    out.reverse()
    return out


def _tree_canonical_perm(rows) -> list[int]:
    """Canonical labeling of a connected tree: root at the center with the
    smaller rooted code, then label in preorder with children sorted by
    subtree code."""
    centers = _tree_centers(rows)
    root = min(centers, key=lambda c: _rooted_code(rows, c))
    code = {}
    for v, parent in _postorder(rows, root):
        kids = sorted(code[u] for u in bits(rows[v]) if u != parent)
        code[v] = "(" + "".join(kids) + ")"
    perm = [0] * len(rows)
    counter = 0
    stack = [(root, -1)]
    while stack:
        v, p = stack.pop()
        perm[v] = counter
        counter += 1
        kids = sorted(
            (u for u in bits(rows[v]) if u != p),
            key=lambda u: code[u],
            reverse=True,  # stack pops in reverse
        )
        stack.extend((u, v) for u in kids)
    return perm


# -- cyclic components --------------------------------------------------


def _lexmin_perm(rows) -> list[int]:
    """Labeling minimizing the column-major upper-triangle bit string (the
    graph6 bit order).  Branch and bound: at depth i every unused vertex
    contributes a candidate column of its adjacencies to the placed prefix;
    only prefixes no worse than the best known complete string survive."""
    n = len(rows)
    full = (1 << n) - 1
    best_cols: list[int] = []
    best_perm: list[int] = []
    version = 0
    cur_cols: list[int] = []
    cur_perm: list[int] = []

    def dfs(used: int, cols: list[int], tight: bool):
        # cols[v]: adjacency bits of v to the placed prefix, column order
        nonlocal version
        i = len(cur_perm)
        if i == n:
            if not tight:
                best_cols[:] = cur_cols
                best_perm[:] = cur_perm
                version += 1
            return
        unused = full & ~used
        cands = sorted((cols[v], v) for v in bits(unused))
        seen_version = version
        accepted: list[tuple[int, int]] = []
        for col, v in cands:
            if best_cols:
                if version != seen_version:
                    # a descendant of an earlier sibling improved best; the
                    # new best extends our prefix, so we are tight again
                    tight = True
                    seen_version = version
                if tight and col > best_cols[i]:
                    break
                child_tight = tight and col == best_cols[i]
            else:
                child_tight = False
            # twin skip: if an already-explored sibling w has the same column
            # and the same adjacency to every other unplaced vertex, the
            # transposition (v w) is a symmetry of the remaining search
            twin = False
            for w_col, w in accepted:
                if w_col != col:
                    continue
                mask = unused & ~(1 << v) & ~(1 << w)
                if rows[v] & mask == rows[w] & mask:
                    twin = True
                    break
            if twin:
                continue
            accepted.append((col, v))
            child_cols = [
                (cols[u] << 1) | (rows[u] >> v & 1) for u in range(n)
            ]
            cur_cols.append(col)
            cur_perm.append(v)
            dfs(used | 1 << v, child_cols, child_tight)
            cur_cols.pop()
            cur_perm.pop()
    dfs(0, [0] * n, False)
    # best_perm is placement order: position -> vertex; invert
    perm = [0] * n
    for pos, v in enumerate(best_perm):
        perm[v] = pos
    return perm


@lru_cache(maxsize=200_000)
def _component_code(rows: tuple[int, ...]) -> str:
    """Canonical graph6 of a connected graph given as repacked rows."""
    n = len(rows)
    m = sum(popcount(r) for r in rows) // 2
    if m == n - 1:
        perm = _tree_canonical_perm(rows)
    elif m > n * (n - 1) // 4:
        # dense: label by the complement's lex-min ordering (iso-invariant
        # and the complement search tree is the sparse one)
        full = (1 << n) - 1
        comp_rows = tuple((full & ~rows[v]) & ~(1 << v) for v in range(n))
        perm = _lexmin_perm(comp_rows)
    else:
        perm = _lexmin_perm(rows)
    new_rows = [0] * n
    for v in range(n):
        for u in bits(rows[v]):
            new_rows[perm[v]] |= 1 << perm[u]
    return graph6_encode(Graph(n, new_rows))


@lru_cache(maxsize=200_000)
def _assemble(parts: tuple[tuple[int, str], ...]) -> str:
    """graph6 of the disjoint union of canonical components, given sorted
    (size, code) pairs."""
    rows = []
    offset = 0
    for size, code in parts:
        g = graph6_decode(code)
        rows.extend(r << offset for r in g.rows)
        offset += size
    return graph6_encode(Graph(offset, rows))


class SubgraphCoder:
    """Canonical codes for induced subgraphs of one host graph.

    Caches component codes by vertex mask, so sweeping all card subsets of
    a host revisits each connected piece only once.
    """

    def __init__(self, g: Graph):
        self.g = g
        self._comp_cache: dict[int, tuple[int, str]] = {}

    def _comp_entry(self, mask: int) -> tuple[int, str]:
        entry = self._comp_cache.get(mask)
        if entry is None:
            sub = induced_subgraph(self.g, mask)
            entry = (sub.n, _component_code(sub.rows))
            self._comp_cache[mask] = entry
        return entry

    def code(self, mask: int) -> CanonicalCode:
        """Canonical code of the induced subgraph on `mask`."""
        rows = self.g.rows
        parts = []
        rem = mask
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= rows[u] & mask
                frontier = nxt & ~comp
                comp |= frontier
            parts.append(self._comp_entry(comp))
            rem &= ~comp
        if len(parts) == 1:
            return parts[0][1]
        parts.sort()
        return _assemble(tuple(parts))


def canonical_form(g: Graph) -> CanonicalCode:
    """Deterministic, relabeling-invariant code for g (canonical graph6)."""
    parts = sorted(
        (popcount(mask), _component_code(induced_subgraph(g, mask).rows))
        for mask in components(g)
    )
    if len(parts) == 1:
        return parts[0][1]
    return _assemble(tuple(parts))


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g."""
    return graph6_decode(canonical_form(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)
