import random

import networkx as nx
import pytest

from deckforge.errors import NotConnected, ParseError
from deckforge.graphs import (
    Graph,
    centers,
    complete_graph,
    components,
    cycle_graph,
    degree_sequence,
    diameter,
    disjoint_union,
    distances_from,
    empty_graph,
    girth,
    graph6_decode,
    graph6_encode,
    graph_from_edges,
    induced_subgraph,
    is_connected,
    is_forest,
    is_tree,
    path_graph,
    radius,
    spider_graph,
    star_graph,
)


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return graph_from_edges(n, edges)


def test_constructors():
    p5 = path_graph(5)
    assert p5.edge_count == 4 and is_tree(p5)
    c6 = cycle_graph(6)
    assert c6.edge_count == 6 and girth(c6) == 6
    k4 = complete_graph(4)
    assert k4.edge_count == 6 and girth(k4) == 3
    s = star_graph(4)
    assert degree_sequence(s) == (4, 1, 1, 1, 1)
    sp = spider_graph(1, 1, 2)
    assert sp.n == 5 and degree_sequence(sp) == (3, 2, 1, 1, 1)
    assert empty_graph(3).edge_count == 0


def test_validation():
    with pytest.raises(ValueError):
        Graph(2, [1, 0])  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, [3, 1])  # loop at vertex 0
    with pytest.raises(ValueError):
        Graph(1, [2])  # out of range


def test_distances_and_metrics():
    p4 = path_graph(4)
    assert distances_from(p4, 0) == [0, 1, 2, 3]
    assert diameter(p4) == 3 and radius(p4) == 2
    assert centers(p4) == 0b0110
    two = disjoint_union(path_graph(2), path_graph(3))
    assert distances_from(two, 0)[2] == -1
    with pytest.raises(NotConnected):
        diameter(two)


def test_components_and_forest():
    g = disjoint_union(cycle_graph(3), path_graph(2), empty_graph(1))
    comps = components(g)
    assert [bin(c).count("1") for c in comps] == [3, 2, 1]
    assert not is_connected(g)
    assert not is_forest(g)
    assert is_forest(disjoint_union(path_graph(3), path_graph(2)))
    assert is_tree(path_graph(1))
    assert not is_tree(empty_graph(2))


def test_girth_cases():
    assert girth(path_graph(6)) is None
    assert girth(cycle_graph(5)) == 5
    # C_5 with a chord has girth 3 or 4 depending on the chord
    g = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    assert girth(g) == 3
    h = graph_from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    assert girth(h) == 4


def test_induced_subgraph_order():
    g = path_graph(5)
    sub = induced_subgraph(g, 0b10101)  # vertices 0, 2, 4
    assert sub.n == 3 and sub.edge_count == 0
    sub = induced_subgraph(g, 0b00111)  # vertices 0, 1, 2
    assert sub.edge_count == 2 and is_tree(sub)


def test_graph6_known_values():
    # 5-cycle under this labeling packs to "Dhc"
    assert graph6_encode(cycle_graph(5)) == "Dhc"
    assert graph6_decode("Dhc") == cycle_graph(5)
    assert graph6_decode(">>graph6<<Dhc") == cycle_graph(5)
    assert graph6_encode(empty_graph(1)) == "@"
    assert graph6_encode(path_graph(2)) == "A_"


def test_graph6_round_trip_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 14)
        g = random_graph(rng, n, rng.random())
        s = graph6_encode(g)
        assert graph6_decode(s) == g
        nxg = nx.from_graph6_bytes(s.encode())
        assert nx.to_graph6_bytes(nxg, header=False).decode().strip() == s


def test_graph6_errors():
    with pytest.raises(ParseError):
        graph6_decode("")
    with pytest.raises(ParseError):
        graph6_decode("D\x1f_")  # byte below printable range
    with pytest.raises(ParseError):
        graph6_decode("DUW_")  # trailing garbage
    err = None
    try:
        graph6_decode("D\x1f_")
    except ParseError as exc:
        err = str(exc)
    assert "1" in err  # offset of the bad byte
