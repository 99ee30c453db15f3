"""Vines, balls, centers, and the deck parameter k.

A j-vine is a tree of diameter 2j, a j-evine a tree of diameter 2j+1.
A vertex is a j-center when it is the center of some induced j-vine of the
host graph; an edge is j-central when it is the central edge of some
induced j-evine.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .deck import Deck, DeckParams
from .errors import GirthTooSmall, NotACenter, NotAcyclicDeck
from .graphs import (
    Graph,
    bits,
    centers,
    component_of,
    components,
    diameter,
    distances_from,
    girth,
    induced_subgraph,
    is_forest,
    is_tree,
    popcount,
)


@dataclass(frozen=True)
class VineKind:
    """Either Vine(j) (diameter 2j) or Evine(j) (diameter 2j+1)."""

    evine: bool
    j: int

    def __repr__(self):
        return f"{'Evine' if self.evine else 'Vine'}({self.j})"

    @property
    def diameter(self) -> int:
        return 2 * self.j + 1 if self.evine else 2 * self.j


def Vine(j: int) -> VineKind:
    return VineKind(False, j)


def Evine(j: int) -> VineKind:
    return VineKind(True, j)


def classify_vine(t: Graph) -> Optional[VineKind]:
    """VineKind of t, or None when t is not a tree."""
    if not is_tree(t):
        return None
    d = diameter(t)
    return Evine((d - 1) // 2) if d % 2 else Vine(d // 2)


def ball(g: Graph, v: int, j: int) -> int:
    """Mask of vertices within distance j of v."""
    dist = distances_from(g, v)
    mask = 0
    for u, d in enumerate(dist):
        if 0 <= d <= j:
            mask |= 1 << u
    return mask


def eball(g: Graph, e: tuple[int, int], j: int) -> int:
    """Mask of vertices within distance j of either endpoint of e."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    return ball(g, u, j) | ball(g, v, j)


# -- j-centers ----------------------------------------------------------


def _branch_depths(g: Graph, v: int) -> list[int]:
    """For each neighbor u of v in a forest: the max distance from v along
    the branch through u (i.e. inside the component of g - v containing u)."""
    depths = []
    away = g.full_mask() & ~(1 << v)
    for u in bits(g.rows[v]):
        branch = component_of(g, u, within=away)
        depths.append(1 + max(distances_from(g, u, within=branch)))
    return depths


def _is_center_exhaustive(g: Graph, v: int, j: int) -> bool:
    """Search induced j-vines centered at v inside the j-ball at v."""
    b = ball(g, v, j)
    others = list(bits(b & ~(1 << v)))
    for sub in range(1 << len(others)):
        mask = 1 << v
        for i, u in enumerate(others):
            if sub >> i & 1:
                mask |= 1 << u
        t = induced_subgraph(g, mask)
        if is_tree(t) and diameter(t) == 2 * j:
            pos = popcount(mask & ((1 << v) - 1))
            if centers(t) >> pos & 1:
                return True
    return False


@lru_cache(maxsize=200_000)
def j_centers(g: Graph, j: int) -> int:
    """Mask of j-centers of g.

    Forests use branch depths (every subtree of a forest is induced);
    cyclic hosts fall back to exhaustive induced-subgraph search.
    """
    if j == 0:
        return g.full_mask()
    if is_forest(g):
        mask = 0
        for v in range(g.n):
            depths = sorted(_branch_depths(g, v), reverse=True)
            if len(depths) >= 2 and depths[1] >= j:
                mask |= 1 << v
        return mask
    mask = 0
    for v in range(g.n):
        if _is_center_exhaustive(g, v, j):
            mask |= 1 << v
    return mask


def _is_central_edge_exhaustive(g: Graph, u: int, v: int, j: int) -> bool:
    b = eball(g, (u, v), j)
    others = list(bits(b & ~(1 << u) & ~(1 << v)))
    pair = (1 << u) | (1 << v)
    for sub in range(1 << len(others)):
        mask = pair
        for i, w in enumerate(others):
            if sub >> i & 1:
                mask |= 1 << w
        t = induced_subgraph(g, mask)
        if is_tree(t) and diameter(t) == 2 * j + 1:
            pu = popcount(mask & ((1 << u) - 1))
            pv = popcount(mask & ((1 << v) - 1))
            c = centers(t)
            if c == (1 << pu) | (1 << pv):
                return True
    return False


def j_central_edges(g: Graph, j: int) -> list[tuple[int, int]]:
    """Edges that are central edges of induced j-evines, sorted."""
    out = []
    forest = is_forest(g)
    for u, v in g.edges():
        if j == 0:
            out.append((u, v))
        elif forest:
            away_u = component_of(g, u, within=g.full_mask() & ~(1 << v))
            away_v = component_of(g, v, within=g.full_mask() & ~(1 << u))
            du = max(distances_from(g, u, within=away_u))
            dv = max(distances_from(g, v, within=away_v))
            if du >= j and dv >= j:
                out.append((u, v))
        elif _is_central_edge_exhaustive(g, u, v, j):
            out.append((u, v))
    return out


def maximal_vine_at(g: Graph, at, kind: VineKind) -> Graph:
    """The unique maximal j-vine centered at a j-center (the j-ball), or the
    maximal j-evine at a j-central edge (the j-eball).  Valid only under the
    girth bound that makes maximal vines unique."""
    j = kind.j
    need = 2 * j + 3 if kind.evine else 2 * j + 2
    gi = girth(g)
    if gi is not None and gi < need:
        raise GirthTooSmall(f"girth {gi} < {need}")
    if kind.evine:
        u, v = at
        if (min(at), max(at)) not in j_central_edges(g, j):
            raise NotACenter(f"edge {at} is not a {j}-central edge")
        mask = eball(g, (u, v), j)
    else:
        if not j_centers(g, j) >> at & 1:
            raise NotACenter(f"vertex {at} is not a {j}-center")
        mask = ball(g, at, j)
    return induced_subgraph(g, mask)


# -- the parameter k ----------------------------------------------------


@lru_cache(maxsize=50_000)
def _vine_profile(g: Graph) -> tuple[dict, dict]:
    """Over all induced subtrees of g: for each j, whether a j-evine exists
    and the max vertex count over j-vines and j-evines."""
    evine_exists: dict[int, bool] = {}
    max_size: dict[int, int] = {}
    for mask in range(1, 1 << g.n):
        t = induced_subgraph(g, mask)
        if not is_tree(t):
            continue
        d = diameter(t)
        j = d // 2 if d % 2 == 0 else (d - 1) // 2
        if d % 2:
            evine_exists[j] = True
        max_size[j] = max(max_size.get(j, 0), t.n)
    return evine_exists, max_size


def k_of_graph(g: Graph, params: DeckParams) -> Optional[int]:
    """Largest k such that g has a k-evine and every j-vine/j-evine with
    j <= k has fewer than n - ell vertices.  None when undefined."""
    if params.n != g.n:
        raise ValueError("params.n must match the graph")
    if g.edge_count == 0:
        return None
    evine_exists, max_size = _vine_profile(g)
    cs = params.card_size
    best = None
    for j in range(g.n):
        if max_size.get(j, 0) >= cs:
            break
        if evine_exists.get(j):
            best = j
    return best


def k_from_deck(d: Deck) -> Optional[int]:
    """The value of k shared by all reconstructions of an acyclic deck.

    A j-vine/j-evine with exactly n - ell vertices inside a card must be the
    whole card, so the definition reduces to component-diameter checks:
    k is the largest j with some card component of diameter >= 2j+1 and no
    connected card of diameter <= 2j+1.
    """
    cards = d.decoded_cards()
    if not all(is_forest(card) for card, _ in cards):
        raise NotAcyclicDeck("deck has a cyclic card")
    dmax = 0
    dmin_conn = None
    has_edge = False
    for card, _ in cards:
        if card.edge_count:
            has_edge = True
        comp_masks = components(card)
        for comp in comp_masks:
            sub = induced_subgraph(card, comp)
            dc = diameter(sub)
            dmax = max(dmax, dc)
        if len(comp_masks) == 1:
            dc = diameter(card)
            dmin_conn = dc if dmin_conn is None else min(dmin_conn, dc)
    if not has_edge:
        return None
    best = None
    for j in range(d.card_size):
        if 2 * j + 1 > dmax:
            break
        if dmin_conn is not None and dmin_conn <= 2 * j + 1:
            break
        best = j
    return best
