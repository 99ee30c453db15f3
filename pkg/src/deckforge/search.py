"""Exhaustive enumeration and the verification campaigns: ambiguous-deck
searches, equal-deck tree pairs, deck classification, and the named
small counterexample constructions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .canon import CanonicalCode, canonical_form
from .deck import Deck, DeckParams, compute_deck, decks_equal, _decode_cached
from .errors import BudgetExceeded, InvalidParameter
from .graphs import (
    Graph,
    component_of,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    is_forest,
    path_graph,
)

TREE_BUDGET = 13
FOREST_BUDGET = 11
CYCLIC_BUDGET = 11


@dataclass
class SearchReport:
    """Outcome of one exhaustive search, with verified witnesses."""

    kind: str
    params: dict
    stage_counts: dict = field(default_factory=dict)
    witnesses: list[tuple[CanonicalCode, CanonicalCode]] = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "stage_counts": self.stage_counts,
            "witnesses": [list(w) for w in self.witnesses],
            "seconds": round(self.seconds, 3),
        }


# -- enumeration --------------------------------------------------------


@lru_cache(maxsize=None)
def enumerate_trees(n: int, budget: int = TREE_BUDGET) -> tuple[CanonicalCode, ...]:
    """Canonical codes of all free trees on n vertices, one per class.

    Grown by leaf augmentation from the (n-1)-vertex trees with canonical
    deduplication.
    """
    if n > budget:
        raise BudgetExceeded(f"trees on {n} vertices exceed budget {budget}")
    if n < 1:
        raise InvalidParameter("n must be positive")
    if n == 1:
        return (canonical_form(empty_graph(1)),)
    out = set()
    for code in enumerate_trees(n - 1, budget):
        t = _decode_cached(code)
        for v in range(t.n):
            rows = list(t.rows) + [1 << v]
            rows[v] |= 1 << t.n
            out.add(canonical_form(Graph(t.n + 1, rows)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def enumerate_forests(n: int, budget: int = FOREST_BUDGET) -> tuple[CanonicalCode, ...]:
    """Canonical codes of all forests on exactly n vertices.

    Built as multisets of trees summing to n; distinct component multisets
    give distinct classes, so no deduplication is needed.
    """
    if n > budget:
        raise BudgetExceeded(f"forests on {n} vertices exceed budget {budget}")
    out = []
    for choice in _tree_multisets(n, n, budget):
        graphs = [_decode_cached(code) for code in choice]
        out.append(canonical_form(disjoint_union(*graphs)))
    return tuple(sorted(out))


def _tree_multisets(n: int, max_part: int, budget: int):
    """Multisets of tree codes whose sizes sum to n, largest part first."""
    if n == 0:
        yield ()
        return
    for part in range(min(n, max_part), 0, -1):
        trees_here = enumerate_trees(part, budget)
        for count in range(1, n // part + 1):
            for combo in combinations_with_replacement(trees_here, count):
                for rest in _tree_multisets(n - part * count, part - 1, budget):
                    yield combo + rest


def enumerate_cyclic_candidates(
    params: DeckParams, budget: int = CYCLIC_BUDGET
) -> tuple[CanonicalCode, ...]:
    """All n-vertex graphs with a cycle, girth at least n - ell + 1, and at
    most n - 1 edges (the edge count forced by an acyclic partner).

    Under n >= 2*ell + 1 such a graph has exactly one cycle: plant each
    admissible cycle length and attach forest edges without closing new
    cycles, deduplicating canonically.
    """
    n, ell = params.n, params.ell
    if n > budget:
        raise BudgetExceeded(f"cyclic candidates on {n} vertices exceed budget {budget}")
    min_girth = max(3, n - ell + 1)
    out: set[CanonicalCode] = set()
    for c in range(min_girth, n):  # c = n would need n edges, over the cap
        base_rows = list(cycle_graph(c).rows) + [0] * (n - c)
        base = Graph(n, base_rows)
        level = {canonical_form(base): base}
        out.update(level)
        for _ in range(n - 1 - c):
            nxt: dict[CanonicalCode, Graph] = {}
            for g in level.values():
                for u in range(n):
                    comp_u = component_of(g, u)
                    for v in range(u + 1, n):
                        if comp_u >> v & 1:
                            continue  # same component: the edge would close a cycle
                        rows = list(g.rows)
                        rows[u] |= 1 << v
                        rows[v] |= 1 << u
                        h = Graph(n, rows)
                        code = canonical_form(h)
                        if code not in nxt:
                            nxt[code] = h
            out.update(nxt)
            level = nxt
    return tuple(sorted(out))


# -- deck searches ------------------------------------------------------


def _deck_key(g: Graph, j: int) -> str:
    return compute_deck(g, j).serialize()


def _decks_by_key(codes, j: int, jobs: int = 1) -> dict[str, list[CanonicalCode]]:
    groups: dict[str, list[CanonicalCode]] = {}
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            keys = pool.map(_deck_worker, [(code, j) for code in codes], chunksize=16)
            for code, key in zip(codes, keys):
                groups.setdefault(key, []).append(code)
    else:
        for code in codes:
            groups.setdefault(_deck_key(_decode_cached(code), j), []).append(code)
    return groups


def _deck_worker(item) -> str:
    code, j = item
    return _deck_key(_decode_cached(code), j)


def find_ambiguous(
    params: DeckParams,
    budget: int = CYCLIC_BUDGET,
    jobs: int = 1,
) -> SearchReport:
    """All (acyclic F, nonacyclic H) pairs of n-vertex graphs sharing the
    same (n - ell)-deck."""
    t0 = time.perf_counter()
    n, j = params.n, params.card_size
    forests = enumerate_forests(n, budget=max(budget, FOREST_BUDGET))
    cyclic = enumerate_cyclic_candidates(params, budget=budget)
    forest_groups = _decks_by_key(forests, j, jobs)
    witnesses = []
    for h_code in cyclic:
        h = _decode_cached(h_code)
        key = _deck_key(h, j)
        for f_code in forest_groups.get(key, []):
            witnesses.append((f_code, h_code))
    witnesses.sort()
    for f_code, h_code in witnesses:
        assert decks_equal(
            compute_deck(_decode_cached(f_code), j),
            compute_deck(_decode_cached(h_code), j),
        )
    report = SearchReport(
        kind="ambiguous",
        params={"n": n, "ell": params.ell, "card_size": j},
        stage_counts={
            "acyclic_candidates": len(forests),
            "cyclic_candidates": len(cyclic),
            "pairs": len(witnesses),
        },
        witnesses=witnesses,
        seconds=time.perf_counter() - t0,
    )
    return report


def find_equal_deck_tree_pairs(
    n: int, j: int, budget: int = TREE_BUDGET, jobs: int = 1
) -> SearchReport:
    """All unordered pairs of non-isomorphic n-vertex trees with equal
    j-decks."""
    t0 = time.perf_counter()
    trees = enumerate_trees(n, budget=budget)
    groups = _decks_by_key(trees, j, jobs)
    witnesses = []
    for members in groups.values():
        for a, b in combinations(sorted(members), 2):
            witnesses.append((a, b))
    witnesses.sort()
    for a, b in witnesses:
        assert decks_equal(
            compute_deck(_decode_cached(a), j), compute_deck(_decode_cached(b), j)
        )
    return SearchReport(
        kind="equal-deck-tree-pairs",
        params={"n": n, "card_size": j},
        stage_counts={"trees": len(trees), "pairs": len(witnesses)},
        witnesses=witnesses,
        seconds=time.perf_counter() - t0,
    )


# -- named constructions ------------------------------------------------


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    ell: int
    graphs: tuple[Graph, ...]
    card_size: int  # card size at which the construction's claim holds


def named_counterexample(name: str, ell: int) -> NamedConstruction:
    """The small constructions showing sharpness of the thresholds."""
    if name == "spinoza_west":
        # P_{2l} and C_{l+1} + P_{l-1} share the l-deck
        if ell < 2:
            raise InvalidParameter("spinoza_west needs ell >= 2")
        pair = (path_graph(2 * ell), disjoint_union(cycle_graph(ell + 1), path_graph(ell - 1)))
        return NamedConstruction(name, ell, pair, ell)
    if name == "nydl":
        # both trees: a (2l-1)-path plus a leaf at the center or a center neighbor
        if ell < 2:
            raise InvalidParameter("nydl needs ell >= 2")
        base = 2 * ell - 1
        center = (base - 1) // 2
        t1 = _path_plus_leaf(base, center)
        t2 = _path_plus_leaf(base, center + 1)
        return NamedConstruction(name, ell, (t1, t2), ell)
    if name == "split_paths":
        # P_l + P_l and P_{l+1} + P_{l-1} share the l-deck
        if ell < 2:
            raise InvalidParameter("split_paths needs ell >= 2")
        pair = (
            disjoint_union(path_graph(ell), path_graph(ell)),
            disjoint_union(path_graph(ell + 1), path_graph(ell - 1)),
        )
        return NamedConstruction(name, ell, pair, ell)
    if name == "theta_isolated":
        # isolated vertex plus four paths of length l/2 with common endpoints
        if ell < 4 or ell % 2:
            raise InvalidParameter("theta_isolated needs even ell >= 4")
        half = ell // 2
        edges = []
        nxt = 2
        for _ in range(4):
            prev = 0
            for step in range(half):
                target = 1 if step == half - 1 else nxt
                edges.append((prev, target))
                if step != half - 1:
                    prev = nxt
                    nxt += 1
        theta = graph_from_edges(nxt, edges)
        g = disjoint_union(theta, empty_graph(1))
        return NamedConstruction(name, ell, (g,), ell - 1)
    if name == "chorded_cycle":
        # (2l-2)-cycle plus two diametric chords making l-cycles, plus K_1
        if ell < 3 or ell % 2 == 0:
            raise InvalidParameter("chorded_cycle needs odd ell >= 3")
        c = 2 * ell - 2
        offset = (ell - 1) // 2
        edges = [(i, (i + 1) % c) for i in range(c)]
        edges.append((0, ell - 1))
        edges.append((offset, offset + ell - 1))
        g = disjoint_union(graph_from_edges(c, edges), empty_graph(1))
        return NamedConstruction(name, ell, (g,), ell - 1)
    if name == "two_cycles":
        # C_{2l-2} and C_{l-1} + C_{l-1} share the (l-2)-deck
        if ell < 5:
            raise InvalidParameter("two_cycles needs ell >= 5 (cycles need length >= 4)")
        pair = (
            cycle_graph(2 * ell - 2),
            disjoint_union(cycle_graph(ell - 1), cycle_graph(ell - 1)),
        )
        return NamedConstruction(name, ell, pair, ell - 2)
    raise InvalidParameter(f"unknown construction {name!r}")


NAMED_CONSTRUCTIONS = (
    "spinoza_west",
    "nydl",
    "split_paths",
    "theta_isolated",
    "chorded_cycle",
    "two_cycles",
)


def _path_plus_leaf(path_len: int, attach: int) -> Graph:
    edges = [(i, i + 1) for i in range(path_len - 1)]
    edges.append((attach, path_len))
    return graph_from_edges(path_len + 1, edges)


# -- deck classification ------------------------------------------------


@dataclass
class Classification:
    verdict: str  # all-acyclic | all-nonacyclic | ambiguous | no-reconstruction
    acyclic_witnesses: list[CanonicalCode]
    nonacyclic_witnesses: list[CanonicalCode]


def classify_deck(d: Deck, budget: int = CYCLIC_BUDGET) -> Classification:
    """Enumerate all n-vertex reconstructions of a deck and classify it."""
    from .deck import edge_count_from_deck

    n = d.n
    j = d.card_size
    ell = n - j
    edges = edge_count_from_deck(d)
    acyclic = []
    if edges <= n - 1:
        for code in enumerate_forests(n, budget=max(budget, FOREST_BUDGET)):
            g = _decode_cached(code)
            if g.edge_count == edges and compute_deck(g, j) == d:
                acyclic.append(code)
    # the pruned enumeration assumes an acyclic partner: girth above card
    # size and at most n - 1 edges; otherwise fall back to brute force
    if d.is_acyclic() and edges <= n - 1 and n >= 2 * ell + 1:
        candidates = enumerate_cyclic_candidates(DeckParams(n, ell), budget=budget)
    else:
        candidates = _all_cyclic_graphs(n, edges, budget=min(budget, 7))
    nonacyclic = []
    for code in candidates:
        g = _decode_cached(code)
        if g.edge_count == edges and compute_deck(g, j) == d:
            nonacyclic.append(code)
    if acyclic and nonacyclic:
        verdict = "ambiguous"
    elif acyclic:
        verdict = "all-acyclic"
    elif nonacyclic:
        verdict = "all-nonacyclic"
    else:
        verdict = "no-reconstruction"
    return Classification(verdict, sorted(acyclic), sorted(nonacyclic))


@lru_cache(maxsize=None)
def _all_cyclic_graphs(n: int, edges: int, budget: int) -> tuple[CanonicalCode, ...]:
    """Every n-vertex graph with the given edge count containing a cycle.
    Brute force over edge subsets; only for tiny n."""
    if n > budget:
        raise BudgetExceeded(
            f"full graph enumeration on {n} vertices exceeds budget {budget}"
        )
    slots = list(combinations(range(n), 2))
    out = set()
    for chosen in combinations(slots, edges):
        g = graph_from_edges(n, chosen)
        if not is_forest(g):
            out.add(canonical_form(g))
    return tuple(sorted(out))
