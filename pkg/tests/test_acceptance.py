"""Acceptance gate: eleven exhaustive small-scale checks, each printing one
pass/fail line with its runtime.  Budgets are wall-clock upper bounds.
"""

import sys
import time

from deckforge.canon import canonical_form
from deckforge.deck import DeckParams, _decode_cached, compute_deck, decks_equal
from deckforge.graphs import (
    cycle_graph,
    disjoint_union,
    empty_graph,
    spider_graph,
)
from deckforge.search import find_ambiguous, find_equal_deck_tree_pairs
from deckforge.verify import run_suite


def report(num: int, ok: bool, seconds: float, detail: str = "") -> None:
    line = f"CRITERION {num:2d}: {'PASS' if ok else 'FAIL'} ({seconds:.1f}s) {detail}"
    print(line.rstrip(), file=sys.__stdout__, flush=True)
    assert ok, line


def suite_ok(rows):
    return all(ok for _, ok, _ in rows), "; ".join(
        f"{name}: {detail}" if detail else name for name, ok, detail in rows if not ok
    )


def test_criterion_01_chair_pair():
    t0 = time.perf_counter()
    chair = spider_graph(1, 1, 2)
    other = disjoint_union(cycle_graph(4), empty_graph(1))
    equal = decks_equal(compute_deck(chair, 3), compute_deck(other, 3))
    rep = find_ambiguous(DeckParams(5, 2))
    expected = [(canonical_form(chair), canonical_form(other))]
    elapsed = time.perf_counter() - t0
    ok = equal and rep.witnesses == expected and elapsed < 1.0
    report(1, ok, elapsed, "chair / 4-cycle pair is the unique ambiguity at (5,2)")


def test_criterion_02_no_ambiguity_at_desk_scale():
    details = []
    ok = True
    total = 0.0
    for n, ell, budget in [(7, 3, 60.0), (9, 4, 60.0), (11, 5, 1800.0)]:
        rep = find_ambiguous(DeckParams(n, ell), budget=11)
        total += rep.seconds
        good = rep.witnesses == [] and rep.seconds < budget
        ok = ok and good
        details.append(f"({n},{ell}): {len(rep.witnesses)} pairs")
    report(2, ok, total, "; ".join(details))


def test_criterion_03_sharpness():
    t0 = time.perf_counter()
    rows = run_suite("sharpness")
    elapsed = time.perf_counter() - t0
    ok, detail = suite_ok(rows)
    ok = ok and elapsed < 60.0
    report(3, ok, elapsed, detail or f"{len(rows)} sharpness checks")


def test_criterion_04_tree_pair_rediscovery():
    t0 = time.perf_counter()
    rep = find_equal_deck_tree_pairs(13, 7)
    verified = all(
        decks_equal(compute_deck(_decode_cached(a), 7), compute_deck(_decode_cached(b), 7))
        for a, b in rep.witnesses
    )
    elapsed = time.perf_counter() - t0
    ok = (
        rep.stage_counts["trees"] == 1301
        and len(rep.witnesses) >= 1
        and verified
        and elapsed < 600.0
    )
    report(4, ok, elapsed, f"{len(rep.witnesses)} equal-deck tree pairs at (13,7)")


def test_criterion_05_degree_lists():
    t0 = time.perf_counter()
    rows = run_suite("degrees", budget=10)
    elapsed = time.perf_counter() - t0
    ok, detail = suite_ok(rows)
    ok = ok and elapsed < 300.0
    report(5, ok, elapsed, detail or rows[0][2])


def test_criterion_06_counting_oracle():
    t0 = time.perf_counter()
    rows = run_suite("counting", budget=9)
    elapsed = time.perf_counter() - t0
    ok, detail = suite_ok(rows)
    ok = ok and elapsed < 600.0
    report(6, ok, elapsed, detail or "; ".join(r[2] for r in rows))


def test_criterion_07_k_agreement():
    t0 = time.perf_counter()
    rows = run_suite("kprop", budget=10)
    elapsed = time.perf_counter() - t0
    ok, detail = suite_ok(rows)
    report(7, ok, elapsed, detail or rows[0][2])


def test_criterion_08_girth_and_diameter():
    t0 = time.perf_counter()
    rows = run_suite("girth-diam", budget=9)
    elapsed = time.perf_counter() - t0
    ok, detail = suite_ok(rows)
    report(8, ok, elapsed, detail or rows[0][2])


def test_criterion_09_marking_bound():
    t0 = time.perf_counter()
    rows = run_suite("marking", budget=11)
    elapsed = time.perf_counter() - t0
    ok, detail = suite_ok(rows)
    ok = ok and elapsed < 1800.0
    report(9, ok, elapsed, detail or rows[0][2])


def test_criterion_10_spiderly_bound():
    t0 = time.perf_counter()
    rows = run_suite("spiderly", budget=12)
    elapsed = time.perf_counter() - t0
    ok, detail = suite_ok(rows)
    report(10, ok, elapsed, detail or rows[0][2])


def test_criterion_11_deck_consistency():
    t0 = time.perf_counter()
    rows = run_suite("deck-consistency", budget=12)
    elapsed = time.perf_counter() - t0
    ok, detail = suite_ok(rows)
    report(11, ok, elapsed, detail or "; ".join(r[2] for r in rows))
