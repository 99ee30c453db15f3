"""Tree machinery: branch vertices, legs, spiders, spiderly recognition,
full-path counting, and the marking process that bounds j-center counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .deck import DeckParams
from .errors import BadCard, IsAPath, NotATree, OutOfValidityRange
from .graphs import (
    Graph,
    bits,
    centers,
    component_of,
    distances_from,
    induced_subgraph,
    is_forest,
    is_tree,
    popcount,
)


def branch_vertices(t: Graph) -> int:
    """Mask of vertices with degree at least 3."""
    if not is_tree(t):
        raise NotATree("branch vertices are defined for trees")
    mask = 0
    for v in range(t.n):
        if t.degree(v) >= 3:
            mask |= 1 << v
    return mask


def legs(t: Graph) -> list[list[int]]:
    """Leaf-to-nearest-branch-vertex paths of a non-path tree, as vertex
    lists starting at the branch vertex."""
    branches = branch_vertices(t)
    if branches == 0:
        raise IsAPath("a path has no legs")
    out = []
    for leaf in range(t.n):
        if t.degree(leaf) != 1:
            continue
        path = [leaf]
        prev = -1
        v = leaf
        while not branches >> v & 1:
            nxt = next(u for u in bits(t.rows[v]) if u != prev)
            path.append(nxt)
            prev, v = v, nxt
        path.reverse()
        out.append(path)
    out.sort(key=lambda p: (len(p), p))
    return out


@dataclass(frozen=True)
class SpiderShape:
    """Leg lengths (descending) and the root vertex of a spider."""

    leg_lengths: tuple[int, ...]
    root: int


def spider_shape(t: Graph) -> Optional[SpiderShape]:
    """The shape of t when t is a spider (at most one branch vertex)."""
    if not is_tree(t):
        return None
    branches = list(bits(branch_vertices(t)))
    if len(branches) > 1:
        return None
    if not branches:
        # a path: designate vertex 0's nearest leaf end as root
        dist = distances_from(t, 0)
        far = max(range(t.n), key=lambda v: dist[v])
        return SpiderShape((t.n - 1,) if t.n > 1 else (), far)
    root = branches[0]
    lengths = tuple(sorted((len(p) - 1 for p in legs(t)), reverse=True))
    return SpiderShape(lengths, root)


def is_ell_spiderly(
    t: Graph, params: DeckParams
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether t contains a spider rooted at some z covering every vertex
    farther than (n - ell - 2) / 2 from z.

    In a tree the spider's legs are paths descending from z, so a valid
    spider exists iff within each branch at z the too-far vertices are
    totally ordered by the ancestor relation.  Returns (verdict, witness)
    with witness = (root, spider vertex mask).
    """
    if not is_tree(t):
        raise NotATree("spiderly recognition is defined for trees")
    if params.n != t.n:
        raise ValueError("params.n must match the tree")
    limit = (params.n - params.ell - 2) / 2
    for z in range(t.n):
        dist = distances_from(t, z)
        far = [v for v in range(t.n) if dist[v] > limit]
        if not far:
            return True, (z, 1 << z)
        # branch id: the neighbor of z on the path to v
        branch_of = _first_steps(t, z)
        per_branch: dict[int, list[int]] = {}
        for v in far:
            per_branch.setdefault(branch_of[v], []).append(v)
        ok = True
        spider = 1 << z
        for group in per_branch.values():
            group.sort(key=lambda v: dist[v])
            for a, b in zip(group, group[1:]):
                if not _on_path(t, z, b, a, dist):
                    ok = False
                    break
            if not ok:
                break
            deepest = group[-1]
            spider |= _path_mask(t, z, deepest)
        if ok:
            return True, (z, spider)
    return False, None


def _first_steps(t: Graph, z: int) -> list[int]:
    """For each vertex, the neighbor of z its z-path goes through (z -> -1)."""
    first = [-1] * t.n
    dist = distances_from(t, z)
    order = sorted((v for v in range(t.n) if dist[v] > 0), key=lambda v: dist[v])
    for v in order:
        if dist[v] == 1:
            first[v] = v
        else:
            parent = next(u for u in bits(t.rows[v]) if dist[u] == dist[v] - 1)
            first[v] = first[parent]
    return first


def _on_path(t: Graph, z: int, far: int, mid: int, dist_z) -> bool:
    """Whether mid lies on the z..far path of the tree."""
    dist_mid = distances_from(t, mid)
    return dist_z[mid] + dist_mid[far] == dist_z[far]


def _path_mask(t: Graph, a: int, b: int) -> int:
    """Vertex mask of the unique a..b path."""
    dist_b = distances_from(t, b)
    mask = 1 << a
    v = a
    while v != b:
        v = next(u for u in bits(t.rows[v]) if dist_b[u] == dist_b[v] - 1)
        mask |= 1 << v
    return mask


def full_paths_count(t: Graph, params: DeckParams) -> int:
    """Number of paths with exactly n - ell vertices.  In a tree a path is
    determined by its endpoint pair, so this counts pairs at distance
    n - ell - 1."""
    if not is_tree(t):
        raise NotATree("full paths are counted in trees")
    if params.n != t.n:
        raise ValueError("params.n must match the tree")
    target = params.card_size - 1
    if target == 0:
        return t.n
    count = 0
    for v in range(t.n):
        dist = distances_from(t, v)
        count += sum(1 for u in range(v + 1, t.n) if dist[u] == target)
    return count


# -- the marking process ------------------------------------------------


@dataclass
class MarkingReport:
    """Outcome of one marking run on a forest with a chosen card."""

    center: int
    deep_neighbors: tuple[int, ...]  # Y: neighbors of z starting length-(j+1) card paths
    d_c: int
    marks: dict[int, int]  # j-center -> marked vertex
    num_j_centers: int
    ell: int
    bound: int  # 1 + d_C + ell
    at_bound: bool
    outside_all_marked: Optional[bool]  # only evaluated when at_bound
    host_is_tree: bool


def run_marking(
    f: Graph,
    card_vertices: int,
    j: int,
    center_choice: Optional[int] = None,
) -> MarkingReport:
    """Run the marking process for a connected radius-(j+1) card inside a
    forest.

    Each j-center of the card's component outside Y and the card center z
    marks the vertex at distance j beyond it on a path extending the z-path
    (smallest label on ties).  Injectivity of the marks is asserted.
    """
    from .vines import j_centers

    if j < 1:
        raise OutOfValidityRange("marking requires j >= 1")
    if not is_forest(f):
        raise NotATree("marking is defined in forests")
    card = induced_subgraph(f, card_vertices)
    card_verts = list(bits(card_vertices))
    pos = {v: i for i, v in enumerate(card_verts)}
    if card.edge_count != card.n - 1 or not is_tree(card):
        raise BadCard("card is not connected")
    card_centers = [card_verts[i] for i in bits(centers(card))]
    card_radius = max(distances_from(card, pos[card_centers[0]]))
    if card_radius != j + 1:
        raise BadCard(f"card has radius {card_radius}, expected {j + 1}")

    if center_choice is None:
        z = min(card_centers)
    else:
        if center_choice not in card_centers:
            raise BadCard(f"{center_choice} is not a center of the card")
        z = center_choice

    # Y: neighbors of z inside the card that start a length-(j+1) card path,
    # i.e. whose card branch away from z reaches depth j+1
    y_set = []
    for u in bits(f.rows[z] & card_vertices):
        branch = component_of(card, pos[u], within=card.full_mask() & ~(1 << pos[z]))
        if 1 + max(distances_from(card, pos[u], within=branch)) >= j + 1:
            y_set.append(u)
    d_c = len(y_set)

    comp = component_of(f, z)
    all_centers = j_centers(f, j)
    dist_z = distances_from(f, z)
    marks: dict[int, int] = {}
    excluded = set(y_set) | {z}
    for x in bits(all_centers & comp):
        if x in excluded:
            continue
        # descendants of x (away from z) at distance j from x
        away = component_of(f, x, within=f.full_mask() & ~_toward_z_mask(f, x, dist_z))
        dist_x = distances_from(f, x, within=away)
        candidates = [v for v in range(f.n) if dist_x[v] == j]
        if not candidates:
            raise AssertionError("j-center has no extension despite two deep branches")
        target = min(candidates)
        marks[x] = target
    marked = list(marks.values())
    assert len(set(marked)) == len(marked), "marking must be injective"
    assert all(not card_vertices >> v & 1 for v in marked), "marks land outside the card"

    num = popcount(all_centers)
    ell = f.n - card.n
    bound = 1 + d_c + ell
    at_bound = num == bound
    outside_all_marked = None
    if at_bound:
        outside = [v for v in range(f.n) if not card_vertices >> v & 1]
        outside_all_marked = all(v in marked for v in outside)
    return MarkingReport(
        center=z,
        deep_neighbors=tuple(sorted(y_set)),
        d_c=d_c,
        marks=marks,
        num_j_centers=num,
        ell=ell,
        bound=bound,
        at_bound=at_bound,
        outside_all_marked=outside_all_marked,
        host_is_tree=is_tree(f),
    )


def _toward_z_mask(f: Graph, x: int, dist_z) -> int:
    """Mask holding the neighbor of x on the path toward z (empty if x is z
    or in another component)."""
    if dist_z[x] <= 0:
        return 0
    for u in bits(f.rows[x]):
        if dist_z[u] == dist_z[x] - 1:
            return 1 << u
    return 0
