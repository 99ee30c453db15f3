"""Command-line front end: deck computation, comparisons, reconstruction
queries, searches, and the verification suites.

Exit codes: 0 success or all-pass, 1 verification failure, 2 usage or input
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from typing import Optional

from .canon import canonical_form
from .deck import Deck, DeckParams, compute_deck
from .errors import BudgetExceeded, DeckforgeError, ParseError
from .graphs import Graph, graph6_decode, graph6_encode
from .reconstruct import degree_list_from_deck
from .search import (
    NAMED_CONSTRUCTIONS,
    classify_deck,
    find_ambiguous,
    named_counterexample,
)
from .verify import SUITES, run_suite


def _read_graphs(path: str) -> list[Graph]:
    """Parse a newline-delimited graph6 file."""
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh]
    graphs = [graph6_decode(ln) for ln in lines if ln]
    if not graphs:
        raise ParseError(f"{path}: no graphs found")
    return graphs


def _cache_dir(args) -> Optional[str]:
    return args.cache_dir or os.environ.get("DECKFORGE_CACHE")


def cached_deck(g: Graph, j: int, cache_dir: Optional[str]) -> Deck:
    """compute_deck memoized on disk, one file per (canonical code, j).

    Unreadable or mismatched cache entries are recomputed and overwritten.
    """
    if cache_dir is None:
        return compute_deck(g, j)
    code = canonical_form(g)
    digest = hashlib.sha256(code.encode("ascii")).hexdigest()[:24]
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, f"{digest}_{j}.deck")
    if os.path.exists(path):
        try:
            with open(path, "r", encoding="ascii") as fh:
                d = Deck.deserialize(fh.read())
            if d.n == g.n and d.card_size == j:
                return d
        except (DeckforgeError, ValueError, OSError):
            pass  # corrupt entry: fall through and recompute
    d = compute_deck(g, j)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(d.serialize())
    return d


def _card_size(args, n: int) -> int:
    if args.card_size is not None and args.ell is not None:
        if args.card_size != n - args.ell:
            raise DeckforgeError(
                f"--card-size {args.card_size} and --ell {args.ell} disagree for n={n}"
            )
    if args.card_size is not None:
        return args.card_size
    if args.ell is not None:
        return n - args.ell
    raise DeckforgeError("one of --card-size or --ell is required")


def _emit(args, text_lines: list[str], payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for ln in text_lines:
            print(ln)


# -- subcommands ---------------------------------------------------------


def cmd_deck(args) -> int:
    graphs = _read_graphs(args.input[0])
    serialized = []
    for g in graphs:
        d = cached_deck(g, _card_size(args, g.n), _cache_dir(args))
        serialized.append(d.serialize())
    _emit(args, [s.rstrip("\n") for s in serialized], {"decks": serialized})
    return 0


def cmd_compare(args) -> int:
    a = _read_graphs(args.input[0])[0]
    b = _read_graphs(args.input[1])[0]
    if a.n != b.n:
        raise DeckforgeError(f"graphs have {a.n} and {b.n} vertices")
    j = _card_size(args, a.n)
    cache = _cache_dir(args)
    verdict = "EQUAL" if cached_deck(a, j, cache) == cached_deck(b, j, cache) else "DIFFER"
    _emit(args, [verdict], {"verdict": verdict, "card_size": j})
    return 0


def cmd_degrees(args) -> int:
    with open(args.input[0], "r", encoding="ascii") as fh:
        d = Deck.deserialize(fh.read())
    degrees = degree_list_from_deck(d)
    _emit(args, [" ".join(map(str, degrees))], {"degrees": list(degrees)})
    return 0


def cmd_classify(args) -> int:
    with open(args.input[0], "r", encoding="ascii") as fh:
        d = Deck.deserialize(fh.read())
    budget = args.budget_vertices or 11
    result = classify_deck(d, budget=budget)
    lines = [result.verdict]
    lines.extend(f"acyclic {code}" for code in result.acyclic_witnesses)
    lines.extend(f"nonacyclic {code}" for code in result.nonacyclic_witnesses)
    _emit(
        args,
        lines,
        {
            "verdict": result.verdict,
            "acyclic": result.acyclic_witnesses,
            "nonacyclic": result.nonacyclic_witnesses,
        },
    )
    return 0


def cmd_search(args) -> int:
    if args.n is None or args.ell is None:
        raise DeckforgeError("search requires --n and --ell")
    budget = args.budget_vertices or max(args.n, 11)
    report = find_ambiguous(DeckParams(args.n, args.ell), budget=budget, jobs=args.jobs)
    lines = [f"{len(report.witnesses)} ambiguous pairs"]
    lines.extend(f"{f} {h}" for f, h in report.witnesses)
    _emit(args, lines, report.to_dict())
    return 0


def cmd_counterexample(args) -> int:
    if args.ell is None:
        raise DeckforgeError("counterexample requires --ell")
    c = named_counterexample(args.name, args.ell)
    lines = [graph6_encode(g) for g in c.graphs]
    if len(c.graphs) == 2:
        a, b = c.graphs
        cache = _cache_dir(args)
        same = cached_deck(a, c.card_size, cache) == cached_deck(b, c.card_size, cache)
        verdict = f"decks {'EQUAL' if same else 'DIFFER'} at card size {c.card_size}"
        ok = same
    else:
        (g,) = c.graphs
        acyclic = cached_deck(g, c.card_size, _cache_dir(args)).is_acyclic()
        verdict = f"deck at card size {c.card_size} {'acyclic' if acyclic else 'cyclic'}"
        ok = acyclic
    lines.append(verdict)
    _emit(
        args,
        lines,
        {
            "name": c.name,
            "ell": c.ell,
            "card_size": c.card_size,
            "graphs": [graph6_encode(g) for g in c.graphs],
            "verified": ok,
        },
    )
    return 0 if ok else 1


def cmd_verify(args) -> int:
    if not args.suite:
        raise DeckforgeError(f"--suite is required; known: {', '.join(sorted(SUITES))}")
    rows = run_suite(args.suite, budget=args.budget_vertices, jobs=args.jobs)
    width = max(len(name) for name, _, _ in rows)
    lines = [
        f"{name:<{width}}  {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        for name, ok, detail in rows
    ]
    all_ok = all(ok for _, ok, _ in rows)
    lines.append(f"{'all passed' if all_ok else 'FAILURES PRESENT'}")
    _emit(
        args,
        lines,
        {
            "suite": args.suite,
            "rows": [{"check": n, "passed": ok, "detail": d} for n, ok, d in rows],
            "all_passed": all_ok,
        },
    )
    return 0 if all_ok else 1


# -- entry point ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deckforge",
        description="Deck computation, reconstruction, and exhaustive verification "
        "for small graphs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, inputs=0):
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--ell", type=int, default=None)
        p.add_argument("--card-size", type=int, default=None)
        if inputs:
            p.add_argument("--input", nargs=inputs, required=True, metavar="PATH")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--cache-dir", default=None)
        p.add_argument("--budget-vertices", type=int, default=None)

    common(sub.add_parser("deck", help="compute the j-deck of graph6 input"), inputs=1)
    common(sub.add_parser("compare", help="compare the j-decks of two graphs"), inputs=2)
    common(sub.add_parser("degrees", help="degree list from a deck file"), inputs=1)
    common(sub.add_parser("classify", help="classify a deck by its reconstructions"), inputs=1)
    common(sub.add_parser("search", help="exhaustive ambiguous-deck search"))
    p = sub.add_parser("counterexample", help="emit a named construction")
    p.add_argument("name", choices=NAMED_CONSTRUCTIONS)
    common(p)
    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), default=None)
    common(p)
    return parser


COMMANDS = {
    "deck": cmd_deck,
    "compare": cmd_compare,
    "degrees": cmd_degrees,
    "classify": cmd_classify,
    "search": cmd_search,
    "counterexample": cmd_counterexample,
    "verify": cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.subcommand](args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DeckforgeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
