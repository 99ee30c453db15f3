"""Named verification suites: exhaustive small-case checks of the package's
structural claims.  Each suite returns a table of (check, passed, detail)
rows; the CLI `verify` subcommand and the acceptance tests run them.
"""

from __future__ import annotations

import random
from math import comb
from typing import Callable, Optional

from .deck import DeckParams, compute_deck, decks_equal, derive_subdeck, _decode_cached
from .errors import DeckforgeError
from .graphs import (
    degree_sequence,
    diameter,
    girth,
    graph_from_edges,
    induced_subgraph,
    is_connected,
    is_forest,
    is_tree,
    popcount,
    radius,
)
from .reconstruct import (
    CONNECTED,
    _family_members_in_cards,
    degree_list_from_deck,
    maximal_counts_direct,
    solve_maximal_counts,
)
from .search import (
    enumerate_cyclic_candidates,
    enumerate_forests,
    enumerate_trees,
    find_ambiguous,
    find_equal_deck_tree_pairs,
    named_counterexample,
)
from .trees import full_paths_count, is_ell_spiderly, run_marking, spider_shape
from .vines import Vine, k_from_deck, k_of_graph

Row = tuple[str, bool, str]


def _row(name: str, ok: bool, detail: str = "") -> Row:
    return (name, ok, detail)


# -- individual suites ---------------------------------------------------


def suite_ambiguous(budget: int = 11, jobs: int = 1) -> list[Row]:
    """Exhaustive ambiguous-deck searches at desk scale."""
    rows = []
    cases = [(5, 2, 1), (7, 3, 0), (9, 4, 0)]
    if budget >= 11:
        cases.append((11, 5, 0))
    for n, ell, expected in cases:
        if n > budget:
            continue
        report = find_ambiguous(DeckParams(n, ell), budget=max(budget, n), jobs=jobs)
        got = len(report.witnesses)
        rows.append(
            _row(
                f"ambiguous({n},{ell})",
                got == expected,
                f"{got} pairs, expected {expected} ({report.seconds:.1f}s)",
            )
        )
    return rows


def suite_sharpness(budget: int = 13, jobs: int = 1) -> list[Row]:
    """The named constructions behave as claimed and the claims are tight."""
    rows = []
    pair_cases = (
        [("spinoza_west", ell) for ell in (2, 3, 4, 5)]
        + [("nydl", ell) for ell in (2, 3, 4, 5)]
        + [("split_paths", ell) for ell in (3, 4, 5)]
        + [("two_cycles", 5)]
    )
    for name, ell in pair_cases:
        c = named_counterexample(name, ell)
        a, b = c.graphs
        if a.n > budget:
            continue
        equal = decks_equal(compute_deck(a, c.card_size), compute_deck(b, c.card_size))
        rows.append(_row(f"{name}({ell}) equal at {c.card_size}", equal))
        if c.card_size + 1 <= a.n:
            differ = not decks_equal(
                compute_deck(a, c.card_size + 1), compute_deck(b, c.card_size + 1)
            )
            rows.append(_row(f"{name}({ell}) differ at {c.card_size + 1}", differ))
    single_cases = [("theta_isolated", ell) for ell in (4, 6)] + [
        ("chorded_cycle", ell) for ell in (3, 5)
    ]
    for name, ell in single_cases:
        c = named_counterexample(name, ell)
        (g,) = c.graphs
        if g.n > budget:
            continue
        ok = (
            g.n == 2 * ell - 1
            and not is_connected(g)
            and not is_forest(g)
            and compute_deck(g, ell - 1).is_acyclic()
        )
        rows.append(_row(f"{name}({ell}) disconnected, acyclic ({ell - 1})-deck", ok))
        if ell - 1 >= 3:
            tight = not compute_deck(g, ell).is_acyclic()
            rows.append(_row(f"{name}({ell}) cyclic {ell}-deck", tight))
    return rows


def suite_tree_pairs(budget: int = 13, jobs: int = 1) -> list[Row]:
    """Equal-deck pairs among the 13-vertex trees at card size 7."""
    if budget < 13:
        return [_row("tree-pairs(13,7)", False, f"budget {budget} < 13, skipped")]
    report = find_equal_deck_tree_pairs(13, 7, budget=budget, jobs=jobs)
    trees = report.stage_counts["trees"]
    rows = [
        _row("1301 trees on 13 vertices", trees == 1301, f"got {trees}"),
        _row(
            "equal-deck pair exists at card size 7",
            len(report.witnesses) >= 1,
            f"{len(report.witnesses)} pairs ({report.seconds:.1f}s)",
        ),
    ]
    for a, b in report.witnesses:
        ok = decks_equal(
            compute_deck(_decode_cached(a), 7), compute_deck(_decode_cached(b), 7)
        ) and a != b
        rows.append(_row(f"re-verify pair {a} {b}", ok))
    return rows


def _forest_cases(max_n: int):
    """(graph, params) over all forests and every ell with n >= 2*ell + 1."""
    for n in range(3, max_n + 1):
        for code in enumerate_forests(n, budget=max_n):
            g = _decode_cached(code)
            for ell in range(1, (n - 1) // 2 + 1):
                yield g, DeckParams(n, ell)


def _acyclic_deck_cyclic_cases(pairs=((7, 3), (9, 4))):
    """(graph, params) over cyclic candidates whose deck is acyclic."""
    for n, ell in pairs:
        params = DeckParams(n, ell)
        for code in enumerate_cyclic_candidates(params, budget=n):
            g = _decode_cached(code)
            gi = girth(g)
            if gi is not None and gi > params.card_size:
                yield g, params


def suite_degrees(budget: int = 10, jobs: int = 1) -> list[Row]:
    """Degree lists recovered from decks match the true degree sequences."""
    rows = []
    checked = 0
    failures = []
    for g, params in _forest_cases(min(budget, 10)):
        if (params.n, params.ell) == (5, 2):
            continue
        d = compute_deck(g, params.card_size)
        got = degree_list_from_deck(d)
        checked += 1
        if got != degree_sequence(g):
            failures.append((params.n, params.ell, got, degree_sequence(g)))
    rows.append(
        _row(
            f"forest degree lists n<={min(budget, 10)}",
            not failures,
            f"{checked} cases" + (f"; first failure {failures[0]}" if failures else ""),
        )
    )
    checked = 0
    failures = []
    cyc_pairs = tuple((n, e) for n, e in ((7, 3), (9, 4)) if n <= budget)
    for g, params in _acyclic_deck_cyclic_cases(cyc_pairs):
        d = compute_deck(g, params.card_size)
        got = degree_list_from_deck(d)
        checked += 1
        if got != degree_sequence(g):
            failures.append((params.n, params.ell, got))
    rows.append(
        _row(
            "cyclic-host degree lists (7,3),(9,4)",
            not failures,
            f"{checked} cases" + (f"; first failure {failures[0]}" if failures else ""),
        )
    )
    return rows


def suite_counting(budget: int = 9, jobs: int = 1) -> list[Row]:
    """The counting ladder reproduces brute-force maximal-subgraph counts."""
    rows = []
    for label, families in [
        ("1-vines", lambda g, p: [Vine(1)]),
        ("j-vines up to k", lambda g, p: [Vine(j) for j in range(1, (k_of_graph(g, p) or 0) + 1)]),
        ("connected", lambda g, p: [CONNECTED]),
    ]:
        checked = 0
        failures = []
        for g, params in _forest_cases(min(budget, 9)):
            d = compute_deck(g, params.card_size)
            for family in families(g, params):
                direct = maximal_counts_direct(g, family)
                # supply boundary counts (possibly zero) for every member at
                # or above card size that the solver will encounter
                big = {
                    code
                    for code in _family_members_in_cards(d, family)
                    if _decode_cached(code).n >= d.card_size
                }
                big.update(
                    code
                    for code in direct
                    if _decode_cached(code).n >= d.card_size
                )
                boundary = {code: direct.get(code, 0) for code in big}
                table = solve_maximal_counts(d, family, boundary)
                solved = {code: m for code, m in table.m_counts.items() if m}
                checked += 1
                if solved != {code: m for code, m in direct.items() if m}:
                    failures.append((params.n, params.ell, family))
        rows.append(
            _row(
                f"counting ladder, {label}",
                not failures,
                f"{checked} cases"
                + (f"; first failure {failures[0]}" if failures else ""),
            )
        )
    return rows


def suite_kprop(budget: int = 10, jobs: int = 1) -> list[Row]:
    """k computed from the deck agrees with k computed from the graph."""
    checked = 0
    failures = []
    cases = list(_forest_cases(min(budget, 10)))
    cases.extend(_acyclic_deck_cyclic_cases(tuple(p for p in ((7, 3), (9, 4)) if p[0] <= budget)))
    for g, params in cases:
        d = compute_deck(g, params.card_size)
        if not d.is_acyclic():
            continue
        checked += 1
        kg = k_of_graph(g, params)
        kd = k_from_deck(d)
        if kg != kd:
            failures.append((params.n, params.ell, kg, kd))
    return [
        _row(
            "k from deck == k from graph",
            not failures,
            f"{checked} cases" + (f"; first failure {failures[0]}" if failures else ""),
        )
    ]


def suite_girth_diam(budget: int = 9, jobs: int = 1) -> list[Row]:
    """Cyclic hosts with acyclic decks have girth >= 2k+4 and connected
    cards with diameter 2k+2 or 2k+3."""
    girth_fail = []
    diam_fail = []
    checked = 0
    for g, params in _acyclic_deck_cyclic_cases(
        tuple(p for p in ((7, 3), (9, 4)) if p[0] <= budget)
    ):
        d = compute_deck(g, params.card_size)
        k = k_from_deck(d)
        if k is None:
            continue
        checked += 1
        gi = girth(g)
        if gi is not None and gi < 2 * k + 4:
            girth_fail.append((params.n, params.ell, gi, k))
        conn_diams = [
            diameter(card) for card, _ in d.decoded_cards() if is_connected(card)
        ]
        if conn_diams and not (
            min(conn_diams) >= 2 * k + 2 and min(conn_diams) <= 2 * k + 3
        ):
            diam_fail.append((params.n, params.ell, min(conn_diams), k))
    return [
        _row(
            "girth >= 2k+4",
            not girth_fail,
            f"{checked} hosts" + (f"; first failure {girth_fail[0]}" if girth_fail else ""),
        ),
        _row(
            "min connected card diameter in [2k+2, 2k+3]",
            not diam_fail,
            f"first failure {diam_fail[0]}" if diam_fail else "",
        ),
    ]


def suite_marking(budget: int = 11, jobs: int = 1) -> list[Row]:
    """The marking bound on j-centers, over every forest and every connected
    radius-(j+1) card."""
    checked = 0
    bound_fail = []
    witness_fail = []
    for n in range(3, budget + 1):
        for code in enumerate_forests(n, budget=budget):
            f = _decode_cached(code)
            for card_vertices in range(1, 1 << n):
                size = popcount(card_vertices)
                if size < 3 or size == n:
                    continue
                card = induced_subgraph(f, card_vertices)
                if card.edge_count != card.n - 1 or not is_tree(card):
                    continue
                r = radius(card)
                j = r - 1
                if j < 1:
                    continue
                report = run_marking(f, card_vertices, j)
                checked += 1
                if report.num_j_centers > report.bound:
                    bound_fail.append((n, card_vertices, j))
                elif report.at_bound and not (
                    report.host_is_tree and report.outside_all_marked
                ):
                    witness_fail.append((n, card_vertices, j))
    return [
        _row(
            "#j-centers <= 1 + d_C + ell",
            not bound_fail,
            f"{checked} runs" + (f"; first failure {bound_fail[0]}" if bound_fail else ""),
        ),
        _row(
            "equality witnesses are trees, all outside vertices marked",
            not witness_fail,
            f"first failure {witness_fail[0]}" if witness_fail else "",
        ),
    ]


def suite_spiderly(budget: int = 12, jobs: int = 1) -> list[Row]:
    """Spiderly trees carry at most ell + 3 full paths, with the single
    known exception."""
    checked = 0
    failures = []
    exceptions = []
    for n in range(3, budget + 1):
        for code in enumerate_trees(n, budget=max(budget, 13)):
            t = _decode_cached(code)
            for ell in range(1, (n - 1) // 2 + 1):
                params = DeckParams(n, ell)
                verdict, _ = is_ell_spiderly(t, params)
                if not verdict:
                    continue
                checked += 1
                paths = full_paths_count(t, params)
                if paths <= ell + 3:
                    continue
                shape = spider_shape(t)
                if ell == 2 and shape is not None and shape.leg_lengths == (1, 1, 1, 1):
                    exceptions.append((n, ell, paths))
                else:
                    failures.append((n, ell, code, paths))
    rows = [
        _row(
            "spiderly trees have <= ell+3 full paths",
            not failures,
            f"{checked} spiderly cases"
            + (f"; first failure {failures[0]}" if failures else ""),
        )
    ]
    if budget >= 5:
        rows.append(
            _row(
                "sole exception is the 4-leg unit spider at ell=2",
                exceptions == [(5, 2, 6)],
                f"exceptions {exceptions}",
            )
        )
    return rows


def suite_deck_consistency(budget: int = 12, jobs: int = 1) -> list[Row]:
    """Subdeck derivation and multiplicity totals, on random graphs and the
    exhaustive forest families."""
    rng = random.Random(20260823)
    rows = []
    failures = []
    for _ in range(1000):
        n = rng.randint(4, min(budget, 12))
        p = rng.uniform(0.1, 0.9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = graph_from_edges(n, edges)
        j = rng.randint(2, n)
        d = compute_deck(g, j)
        if d.total != comb(n, j):
            failures.append(("total", n, j))
            continue
        if derive_subdeck(d) != compute_deck(g, j - 1):
            failures.append(("subdeck", n, j))
    rows.append(
        _row(
            "1000 random graphs",
            not failures,
            f"first failure {failures[0]}" if failures else "",
        )
    )
    failures = []
    checked = 0
    for g, params in _forest_cases(min(budget, 9)):
        j = params.card_size
        if j < 2:
            continue
        d = compute_deck(g, j)
        checked += 1
        if d.total != comb(g.n, j) or derive_subdeck(d) != compute_deck(g, j - 1):
            failures.append((g.n, params.ell))
    rows.append(
        _row(
            "exhaustive forests n<=9",
            not failures,
            f"{checked} cases" + (f"; first failure {failures[0]}" if failures else ""),
        )
    )
    return rows


SUITES: dict[str, Callable[..., list[Row]]] = {
    "ambiguous": suite_ambiguous,
    "sharpness": suite_sharpness,
    "tree-pairs": suite_tree_pairs,
    "degrees": suite_degrees,
    "counting": suite_counting,
    "kprop": suite_kprop,
    "girth-diam": suite_girth_diam,
    "marking": suite_marking,
    "spiderly": suite_spiderly,
    "deck-consistency": suite_deck_consistency,
}


def run_suite(name: str, budget: Optional[int] = None, jobs: int = 1) -> list[Row]:
    if name not in SUITES:
        raise DeckforgeError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    fn = SUITES[name]
    if budget is None:
        return fn(jobs=jobs)
    return fn(budget=budget, jobs=jobs)
