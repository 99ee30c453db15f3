import json
import os

import pytest

from deckforge.cli import main
from deckforge.deck import Deck, compute_deck
from deckforge.graphs import (
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph6_encode,
    path_graph,
    spider_graph,
)


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_deck_subcommand(tmp_path, capsys):
    path = write(tmp_path, "chair.g6", graph6_encode(spider_graph(1, 1, 2)) + "\n")
    assert main(["deck", "--input", path, "--card-size", "3"]) == 0
    out = capsys.readouterr().out
    lines = [ln for ln in out.splitlines() if ln]
    assert lines[0] == "DECK n=5 j=3"
    assert len(lines) == 4  # header + three card classes
    assert sum(int(ln.split()[1]) for ln in lines[1:]) == 10


def test_deck_ell_flag_and_conflict(tmp_path, capsys):
    path = write(tmp_path, "p.g6", graph6_encode(path_graph(6)) + "\n")
    assert main(["deck", "--input", path, "--ell", "2"]) == 0
    assert "j=4" in capsys.readouterr().out
    assert main(["deck", "--input", path, "--ell", "2", "--card-size", "3"]) == 2


def test_compare_chair_pair(tmp_path, capsys):
    a = write(tmp_path, "a.g6", graph6_encode(spider_graph(1, 1, 2)) + "\n")
    b = write(
        tmp_path,
        "b.g6",
        graph6_encode(disjoint_union(cycle_graph(4), empty_graph(1))) + "\n",
    )
    assert main(["compare", "--input", a, b, "--card-size", "3"]) == 0
    assert capsys.readouterr().out.strip() == "EQUAL"
    assert main(["compare", "--input", a, b, "--card-size", "4"]) == 0
    assert capsys.readouterr().out.strip() == "DIFFER"


def test_parse_error_reports_offset(tmp_path, capsys):
    path = write(tmp_path, "bad.g6", "D\x1f_\n")
    assert main(["deck", "--input", path, "--card-size", "3"]) == 2


def test_degrees_subcommand(tmp_path, capsys):
    g = disjoint_union(path_graph(4), path_graph(3))
    deck_file = write(tmp_path, "d.deck", compute_deck(g, 5).serialize())
    assert main(["degrees", "--input", deck_file]) == 0
    assert capsys.readouterr().out.split() == ["2", "2", "2", "1", "1", "1", "1"]


def test_classify_subcommand(tmp_path, capsys):
    deck_file = write(
        tmp_path, "d.deck", compute_deck(spider_graph(1, 1, 2), 3).serialize()
    )
    assert main(["classify", "--input", deck_file]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "ambiguous"


def test_search_subcommand_json(capsys):
    assert main(["search", "--n", "5", "--ell", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["stage_counts"]["pairs"] == 1
    assert main(["search", "--n", "7", "--ell", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "0 ambiguous pairs"


def test_search_requires_params(capsys):
    assert main(["search"]) == 2


def test_counterexample_subcommand(capsys):
    assert main(["counterexample", "spinoza_west", "--ell", "3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 3 and out[2].startswith("decks EQUAL")
    assert main(["counterexample", "theta_isolated", "--ell", "3"]) == 2


def test_budget_exit_code(capsys):
    assert main(["search", "--n", "20", "--ell", "9", "--budget-vertices", "12"]) == 3


def test_verify_subcommand(capsys):
    assert main(["verify", "--suite", "sharpness", "--budget-vertices", "9"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out


def test_cache_round_trip(tmp_path, capsys):
    g6 = graph6_encode(path_graph(6))
    path = write(tmp_path, "p.g6", g6 + "\n")
    cache = str(tmp_path / "cache")
    args = ["deck", "--input", path, "--card-size", "4", "--cache-dir", cache]
    assert main(args) == 0
    first = capsys.readouterr().out
    entries = os.listdir(cache)
    assert len(entries) == 1
    assert main(args) == 0
    assert capsys.readouterr().out == first
    # corrupt entry: recomputed, not trusted
    cache_file = os.path.join(cache, entries[0])
    with open(cache_file, "w") as fh:
        fh.write("garbage\n")
    assert main(args) == 0
    assert capsys.readouterr().out == first
    with open(cache_file) as fh:
        assert fh.read().startswith("DECK n=6 j=4")


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    path = write(tmp_path, "p.g6", graph6_encode(path_graph(5)) + "\n")
    cache = str(tmp_path / "envcache")
    monkeypatch.setenv("DECKFORGE_CACHE", cache)
    assert main(["deck", "--input", path, "--card-size", "3"]) == 0
    assert os.listdir(cache)
