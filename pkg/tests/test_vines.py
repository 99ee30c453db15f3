import random

import pytest

from deckforge.deck import DeckParams, compute_deck
from deckforge.errors import GirthTooSmall, NotACenter, NotAcyclicDeck
from deckforge.graphs import (
    bits,
    cycle_graph,
    diameter,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    induced_subgraph,
    is_tree,
    path_graph,
    popcount,
    spider_graph,
    star_graph,
)
from deckforge.search import enumerate_forests
from deckforge.deck import _decode_cached
from deckforge.vines import (
    Evine,
    Vine,
    ball,
    classify_vine,
    eball,
    j_central_edges,
    j_centers,
    k_from_deck,
    k_of_graph,
    maximal_vine_at,
)


def test_classify_vine():
    assert classify_vine(path_graph(5)) == Vine(2)
    assert classify_vine(path_graph(6)) == Evine(2)
    assert classify_vine(star_graph(3)) == Vine(1)
    assert classify_vine(path_graph(2)) == Evine(0)
    assert classify_vine(path_graph(1)) == Vine(0)
    assert classify_vine(cycle_graph(4)) is None
    assert Vine(2).diameter == 4 and Evine(2).diameter == 5


def test_ball_and_eball():
    p7 = path_graph(7)
    assert ball(p7, 3, 1) == 0b0011100
    assert ball(p7, 0, 2) == 0b0000111
    assert eball(p7, (3, 4), 1) == 0b0111100
    with pytest.raises(ValueError):
        eball(p7, (0, 2), 1)


def brute_j_centers(g, j):
    """Literal definition: v is a j-center when some induced subgraph is a
    j-vine with v among its centers."""
    from deckforge.graphs import centers

    out = 0
    for mask in range(1, 1 << g.n):
        t = induced_subgraph(g, mask)
        if is_tree(t) and diameter(t) == 2 * j:
            for i, v in enumerate(bits(mask)):
                if centers(t) >> i & 1:
                    out |= 1 << v
    return out


def brute_j_central_edges(g, j):
    from deckforge.graphs import centers

    out = set()
    for mask in range(1, 1 << g.n):
        t = induced_subgraph(g, mask)
        if is_tree(t) and diameter(t) == 2 * j + 1:
            vs = list(bits(mask))
            c = [vs[i] for i in bits(centers(t))]
            out.add((min(c), max(c)))
    return sorted(out)


def test_centers_against_brute_force():
    rng = random.Random(17)
    hosts = [
        path_graph(7),
        spider_graph(2, 2, 3),
        cycle_graph(7),
        disjoint_union(path_graph(4), star_graph(3)),
        graph_from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3)]),
    ]
    for _ in range(10):
        n = rng.randint(2, 7)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        hosts.append(graph_from_edges(n, edges))
    for g in hosts:
        for j in range(0, 4):
            assert j_centers(g, j) == brute_j_centers(g, j), (g.rows, j)
            assert j_central_edges(g, j) == brute_j_central_edges(g, j), (g.rows, j)


def test_maximal_vine_at():
    p7 = path_graph(7)
    t = maximal_vine_at(p7, 3, Vine(2))
    assert t.n == 5 and classify_vine(t) == Vine(2)
    t = maximal_vine_at(p7, (3, 4), Evine(1))
    assert t.n == 4
    with pytest.raises(NotACenter):
        maximal_vine_at(p7, 0, Vine(2))
    with pytest.raises(GirthTooSmall):
        maximal_vine_at(cycle_graph(5), 0, Vine(2))


def test_maximal_vine_not_unique_below_girth_bound():
    # (2j+1)-cycle plus two j-paths from one vertex: two maximal j-vines
    # contain the j-vine that avoids the far side of the cycle, so the
    # girth bound 2j+2 in maximal_vine_at is necessary
    j = 2
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(0, 5), (5, 6), (0, 7), (7, 8)]
    g = graph_from_edges(9, edges)
    # deleting the two cycle vertices farthest from 0 (vertices 2 and 3)
    h_mask = g.full_mask() & ~(1 << 2) & ~(1 << 3)
    h = induced_subgraph(g, h_mask)
    assert classify_vine(h) == Vine(j)
    containing = []
    for extra in (2, 3):
        t = induced_subgraph(g, h_mask | (1 << extra))
        if is_tree(t) and diameter(t) == 2 * j:
            containing.append(extra)
    assert len(containing) == 2
    with pytest.raises(GirthTooSmall):
        maximal_vine_at(g, 0, Vine(j))


def test_k_of_graph():
    assert k_of_graph(path_graph(7), DeckParams(7, 3)) == 0
    assert k_of_graph(empty_graph(4), DeckParams(4, 1)) is None
    # long path, small cards: k grows with what fits under the card size
    assert k_of_graph(path_graph(9), DeckParams(9, 4)) == 1
    assert k_of_graph(path_graph(11), DeckParams(11, 5)) == 1


def test_k_from_deck_matches_graph_small():
    for n in range(3, 8):
        for code in enumerate_forests(n):
            g = _decode_cached(code)
            for ell in range(1, (n - 1) // 2 + 1):
                params = DeckParams(n, ell)
                d = compute_deck(g, params.card_size)
                assert k_from_deck(d) == k_of_graph(g, params), (code, n, ell)


def test_k_from_deck_rejects_cyclic():
    with pytest.raises(NotAcyclicDeck):
        k_from_deck(compute_deck(cycle_graph(4), 4))
