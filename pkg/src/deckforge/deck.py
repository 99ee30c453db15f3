"""Decks of induced subgraphs and deck-level arithmetic.

A Deck is the multiset of canonical codes of all C(n, j) induced j-vertex
subgraphs of an n-vertex graph.  Besides construction and equality this
module derives the (j-1)-deck, recovers induced-subgraph counts s(F, G)
without seeing G, and recovers the edge count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .canon import CanonicalCode, SubgraphCoder, canonical_form
from .errors import InconsistentDeck, InvalidCardSize, OutOfValidityRange, ParseError
from .graphs import Graph, graph6_decode, graph_from_edges, is_forest


@dataclass(frozen=True)
class DeckParams:
    """The pair (n, ell); cards carry n - ell vertices."""

    n: int
    ell: int

    def __post_init__(self):
        if self.ell < 0 or self.ell >= self.n:
            raise OutOfValidityRange(f"ell={self.ell} invalid for n={self.n}")

    @property
    def card_size(self) -> int:
        return self.n - self.ell

    def require_threshold(self):
        """Enforce n >= 2*ell + 1 where a claim needs it."""
        if self.n < 2 * self.ell + 1:
            raise OutOfValidityRange(
                f"(n, ell)=({self.n}, {self.ell}) violates n >= 2*ell + 1"
            )


class Deck:
    """Multiset of canonical card codes with its source parameters."""

    __slots__ = ("n", "card_size", "cards")

    def __init__(self, n: int, card_size: int, cards: Counter):
        if not 1 <= card_size <= n:
            raise InvalidCardSize(f"card size {card_size} outside 1..{n}")
        self.n = n
        self.card_size = card_size
        self.cards = Counter(cards)

    @property
    def total(self) -> int:
        return sum(self.cards.values())

    def __eq__(self, other):
        return (
            isinstance(other, Deck)
            and self.n == other.n
            and self.card_size == other.card_size
            and self.cards == other.cards
        )

    def __repr__(self):
        return f"Deck(n={self.n}, j={self.card_size}, classes={len(self.cards)})"

    def decoded_cards(self) -> list[tuple[Graph, int]]:
        """(card graph, multiplicity) pairs in sorted code order."""
        return [(_decode_cached(code), mult) for code, mult in sorted(self.cards.items())]

    def is_acyclic(self) -> bool:
        return all(is_forest(card) for card, _ in self.decoded_cards())

    # -- serialization --------------------------------------------------

    def serialize(self) -> str:
        lines = [f"DECK n={self.n} j={self.card_size}"]
        lines.extend(f"{code} {mult}" for code, mult in sorted(self.cards.items()))
        return "\n".join(lines) + "\n"

    @classmethod
    def deserialize(cls, text: str) -> "Deck":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("DECK "):
            raise ParseError("missing DECK header line")
        fields = dict(item.split("=") for item in lines[0].split()[1:])
        n = int(fields["n"])
        j = int(fields["j"])
        cards: Counter = Counter()
        for ln in lines[1:]:
            code, mult = ln.split()
            card = graph6_decode(code)
            if card.n != j:
                raise InconsistentDeck(f"card {code} has {card.n} vertices, expected {j}")
            cards[code] += int(mult)
        return cls(n, j, cards)


@lru_cache(maxsize=100_000)
def _decode_cached(code: CanonicalCode) -> Graph:
    return graph6_decode(code)


def compute_deck(g: Graph, j: int) -> Deck:
    """The j-deck of g: canonical codes over all C(n, j) vertex subsets."""
    if not 1 <= j <= g.n:
        raise InvalidCardSize(f"card size {j} outside 1..{g.n}")
    coder = SubgraphCoder(g)
    cards: Counter = Counter()
    for subset in combinations(range(g.n), j):
        mask = 0
        for v in subset:
            mask |= 1 << v
        cards[coder.code(mask)] += 1
    return Deck(g.n, j, cards)


def decks_equal(a: Deck, b: Deck) -> bool:
    return a == b


def derive_subdeck(d: Deck) -> Deck:
    """The (j-1)-deck: every smaller card arises n-j+1 times from vertex
    deletions inside the j-cards."""
    if d.card_size < 2:
        raise InvalidCardSize("cannot derive below card size 1")
    raw: Counter = Counter()
    for card, mult in d.decoded_cards():
        coder = SubgraphCoder(card)
        full = card.full_mask()
        for v in range(card.n):
            raw[coder.code(full & ~(1 << v))] += mult
    divisor = d.n - d.card_size + 1
    cards: Counter = Counter()
    for code, total in raw.items():
        q, r = divmod(total, divisor)
        if r:
            raise InconsistentDeck(
                f"card {code} arises {total} times, not divisible by {divisor}"
            )
        cards[code] = q
    return Deck(d.n, d.card_size - 1, cards)


def count_induced_direct(g: Graph, f: Graph) -> int:
    """s(F, G): vertex subsets of g inducing a copy of f."""
    if f.n > g.n:
        return 0
    target = canonical_form(f)
    coder = SubgraphCoder(g)
    count = 0
    for subset in combinations(range(g.n), f.n):
        mask = 0
        for v in subset:
            mask |= 1 << v
        if coder.code(mask) == target:
            count += 1
    return count


def count_induced_from_deck(d: Deck, f: Graph) -> int:
    """s(F, G) recovered from the deck alone.

    Every occurrence of F is seen in C(n - |F|, j - |F|) cards, so the sum
    of per-card counts weighted by multiplicity divides exactly.
    """
    if f.n > d.card_size:
        raise InvalidCardSize(
            f"pattern has {f.n} vertices, larger than card size {d.card_size}"
        )
    total = 0
    for card, mult in d.decoded_cards():
        if mult and f.n <= card.n:
            total += count_induced_direct(card, f) * mult
    divisor = comb(d.n - f.n, d.card_size - f.n)
    q, r = divmod(total, divisor)
    if r:
        raise InconsistentDeck(
            f"occurrence total {total} not divisible by {divisor}"
        )
    return q


_K2 = graph_from_edges(2, [(0, 1)])


def edge_count_from_deck(d: Deck) -> int:
    if d.card_size < 2:
        raise InvalidCardSize("edge count needs card size at least 2")
    return count_induced_from_deck(d, _K2)
