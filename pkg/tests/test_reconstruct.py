import random
from collections import Counter

import pytest

from deckforge.canon import canonical_form
from deckforge.deck import DeckParams, _decode_cached, compute_deck
from deckforge.errors import ExcludedCase, MissingBoundary, OutOfValidityRange
from deckforge.graphs import (
    cycle_graph,
    degree_sequence,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    path_graph,
    spider_graph,
    star_graph,
)
from deckforge.reconstruct import (
    CONNECTED,
    components_from_deck,
    degree_list_from_deck,
    j_center_count_from_deck,
    j_central_edge_count_from_deck,
    maximal_counts_direct,
    solve_maximal_counts,
)
from deckforge.search import enumerate_forests
from deckforge.vines import Vine, j_central_edges, j_centers, popcount


def forests_with_params(max_n):
    for n in range(3, max_n + 1):
        for code in enumerate_forests(n):
            for ell in range(1, (n - 1) // 2 + 1):
                yield _decode_cached(code), DeckParams(n, ell)


def test_counting_ladder_matches_brute_force():
    for g, params in forests_with_params(7):
        d = compute_deck(g, params.card_size)
        for family in (Vine(1), CONNECTED):
            direct = maximal_counts_direct(g, family)
            boundary = {
                code: direct.get(code, 0)
                for code in direct
                if _decode_cached(code).n >= d.card_size
            }
            # members at card size that are never maximal still need entries
            for card, _ in d.decoded_cards():
                from deckforge.reconstruct import family_contains

                if family_contains(family, card):
                    boundary.setdefault(canonical_form(card), direct.get(canonical_form(card), 0))
            table = solve_maximal_counts(d, family, boundary)
            solved = {c: m for c, m in table.m_counts.items() if m}
            assert solved == {c: m for c, m in direct.items() if m}, (g.rows, params, family)


def test_missing_boundary_raises():
    g = path_graph(7)
    d = compute_deck(g, 4)
    with pytest.raises(MissingBoundary):
        solve_maximal_counts(d, CONNECTED, {})


def test_components_from_deck():
    g = disjoint_union(path_graph(3), path_graph(2), empty_graph(2))
    d = compute_deck(g, 5)
    comps = components_from_deck(d)
    expected = Counter(
        {
            canonical_form(path_graph(3)): 1,
            canonical_form(path_graph(2)): 1,
            canonical_form(empty_graph(1)): 2,
        }
    )
    assert comps == expected


def test_components_from_deck_gives_up_on_big_component():
    # two connected cards: a component with more than n - ell vertices
    g = path_graph(7)
    assert components_from_deck(compute_deck(g, 5)) is None
    with pytest.raises(OutOfValidityRange):
        components_from_deck(compute_deck(path_graph(4), 2))


def test_degree_list_small_forests():
    for g, params in forests_with_params(8):
        if (params.n, params.ell) == (5, 2):
            continue
        d = compute_deck(g, params.card_size)
        assert degree_list_from_deck(d) == degree_sequence(g), (g.rows, params)


def test_degree_list_excluded_case():
    d = compute_deck(spider_graph(1, 1, 2), 3)
    with pytest.raises(ExcludedCase):
        degree_list_from_deck(d)


def test_degree_list_one_big_vertex():
    # K_{1,4} + P_2: the degree-4 vertex yields a single star card
    g = disjoint_union(star_graph(4), path_graph(2))
    d = compute_deck(g, 5)
    assert degree_list_from_deck(d) == (4, 1, 1, 1, 1, 1, 1)


def test_degree_list_two_big_vertices():
    # double star with two degree-4 hubs: exactly two star cards
    g = graph_from_edges(8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])
    d = compute_deck(g, 5)
    assert degree_list_from_deck(d) == degree_sequence(g)


def test_degree_list_threshold_case_adjacent_hubs():
    # n = 2*ell + 1 with adjacent hubs of degrees 4 and 3: ell + 2 star cards
    g = graph_from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)])
    d = compute_deck(g, 4)
    assert degree_list_from_deck(d) == degree_sequence(g)


def test_center_counts_from_deck():
    for g, params in forests_with_params(7):
        d = compute_deck(g, params.card_size)
        from deckforge.vines import k_from_deck

        k = k_from_deck(d)
        if k is None:
            continue
        for j in range(1, k + 1):
            assert j_center_count_from_deck(d, j) == popcount(j_centers(g, j))
            assert j_central_edge_count_from_deck(d, j) == len(j_central_edges(g, j))


def test_center_count_validity_window():
    d = compute_deck(path_graph(7), 4)
    with pytest.raises(OutOfValidityRange):
        j_center_count_from_deck(d, 5)
