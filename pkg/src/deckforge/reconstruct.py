"""Quantities recoverable from an acyclic deck without seeing the graph:
maximal-subgraph counts, component multisets, degree lists, and
j-center / j-central-edge counts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Union

from .canon import CanonicalCode, canonical_form
from .deck import (
    Deck,
    _decode_cached,
    count_induced_direct,
    count_induced_from_deck,
    edge_count_from_deck,
)
from .errors import (
    ExcludedCase,
    InconsistentInput,
    MissingBoundary,
    NotAcyclicDeck,
    OutOfValidityRange,
)
from .graphs import Graph, diameter, is_connected, star_graph
from .vines import VineKind, classify_vine, k_from_deck

# A family is either a vine kind or the family of connected graphs.
Family = Union[VineKind, str]
CONNECTED: Family = "connected"


def family_contains(family: Family, g: Graph) -> bool:
    if family == CONNECTED:
        return is_connected(g)
    kind = classify_vine(g)
    return kind == family


@dataclass
class CountingTable:
    """s(F, G) and m(F, G) per family member code.

    s_counts holds None for boundary members too large to be counted from
    the deck.
    """

    family: Family
    s_counts: dict[CanonicalCode, Optional[int]] = field(default_factory=dict)
    m_counts: dict[CanonicalCode, int] = field(default_factory=dict)

    @property
    def total_maximal(self) -> int:
        return sum(self.m_counts.values())

    def serialize(self) -> str:
        lines = [f"COUNTS family={self.family!r}"]
        for code in sorted(self.m_counts):
            s = self.s_counts.get(code)
            lines.append(f"{code} {'?' if s is None else s} {self.m_counts[code]}")
        return "\n".join(lines) + "\n"


_PAIR_COUNT_CACHE: dict[tuple[CanonicalCode, CanonicalCode], int] = {}


def _count_in(f_code: CanonicalCode, h_code: CanonicalCode) -> int:
    """s(F, H) between family members, memoized by code pair."""
    key = (f_code, h_code)
    val = _PAIR_COUNT_CACHE.get(key)
    if val is None:
        val = count_induced_direct(_decode_cached(h_code), _decode_cached(f_code))
        _PAIR_COUNT_CACHE[key] = val
    return val


def _family_members_in_cards(d: Deck, family: Family) -> set[CanonicalCode]:
    """Codes of family members occurring as induced subgraphs of cards."""
    from .canon import SubgraphCoder

    members: set[CanonicalCode] = set()
    verdict: dict[CanonicalCode, bool] = {}
    for card, _ in d.decoded_cards():
        coder = SubgraphCoder(card)
        for mask in range(1, 1 << card.n):
            code = coder.code(mask)
            ok = verdict.get(code)
            if ok is None:
                ok = family_contains(family, _decode_cached(code))
                verdict[code] = ok
            if ok:
                members.add(code)
    return members


def solve_maximal_counts(
    d: Deck,
    family: Family,
    boundary: dict[CanonicalCode, int],
) -> CountingTable:
    """Determine m(F, G) for every family member from the deck alone.

    Valid when every family subgraph of the (unknown) source graph lies in a
    unique maximal one and `boundary` supplies m(F, G) for members with at
    least n - ell vertices.  Works down the vertex-count ladder via
    s(F, G) = sum_H s(F, H) m(H, G).
    """
    members = _family_members_in_cards(d, family)
    members.update(boundary)
    table = CountingTable(family)
    for code in sorted(members, key=lambda c: (-_decode_cached(c).n, c)):
        size = _decode_cached(code).n
        if size >= d.card_size:
            if code not in boundary:
                raise MissingBoundary(
                    f"no boundary count for {size}-vertex family member {code}"
                )
            table.m_counts[code] = boundary[code]
            table.s_counts[code] = (
                count_induced_from_deck(d, _decode_cached(code))
                if size <= d.card_size
                else None
            )
            continue
        s = count_induced_from_deck(d, _decode_cached(code))
        m = s
        for h_code, h_m in table.m_counts.items():
            if h_m and _decode_cached(h_code).n > size:
                m -= _count_in(code, h_code) * h_m
        if m < 0:
            raise InconsistentInput(
                f"solved m({code}) = {m} < 0; unique-maximality precondition fails"
            )
        table.s_counts[code] = s
        table.m_counts[code] = m
    return table


# -- components ---------------------------------------------------------


def components_from_deck(d: Deck) -> Optional[Counter]:
    """Full component multiset (codes), when the deck certifies that no
    component exceeds n - ell vertices; None when it cannot (more than one
    connected card)."""
    ell = d.n - d.card_size
    if d.n <= 2 * ell:
        raise OutOfValidityRange(f"components need n > 2*ell, got ({d.n}, {ell})")
    connected_cards = {
        code: mult
        for code, mult in d.cards.items()
        if is_connected(_decode_cached(code))
    }
    if sum(connected_cards.values()) > 1:
        return None
    table = solve_maximal_counts(d, CONNECTED, connected_cards)
    result = Counter({code: m for code, m in table.m_counts.items() if m > 0})
    total = sum(_decode_cached(code).n * m for code, m in result.items())
    if total != d.n:
        raise InconsistentInput(
            f"components cover {total} vertices, expected {d.n}"
        )
    return result


# -- degree lists -------------------------------------------------------


def _star_code(leaves: int) -> CanonicalCode:
    return canonical_form(star_graph(leaves))


def degree_list_from_deck(d: Deck) -> tuple[int, ...]:
    """Degree list of any reconstruction of an acyclic deck, via the star
    cards and the maximal-star counting ladder."""
    ell = d.n - d.card_size
    n = d.n
    if n < 2 * ell + 1:
        raise OutOfValidityRange(f"degree list needs n >= 2*ell+1, got ({n}, {ell})")
    if (n, ell) == (5, 2):
        raise ExcludedCase(
            "(n, ell) = (5, 2): an acyclic and a nonacyclic graph share a deck here"
        )
    if not d.is_acyclic():
        raise NotAcyclicDeck("degree recovery is defined for acyclic decks")
    m_edges = edge_count_from_deck(d)

    if ell == 1:
        degrees = []
        for card, mult in d.decoded_cards():
            degrees.extend([m_edges - card.edge_count] * mult)
        if len(degrees) != n or sum(degrees) != 2 * m_edges:
            raise InconsistentInput("per-card edge subtraction inconsistent")
        return tuple(sorted(degrees, reverse=True))

    # now n - ell >= 4; star cards reveal the big vertices
    cs = d.card_size
    star_cards = d.cards.get(_star_code(cs - 1), 0)
    if star_cards == 0:
        boundary: dict[CanonicalCode, int] = {}
    elif star_cards == 2:
        # two big vertices, both of degree n - ell - 1
        boundary = {_star_code(cs - 1): 2}
    elif n == 2 * ell + 1 and star_cards == ell + 2:
        # two adjacent big vertices with degrees n - ell - 1 and n - ell
        boundary = {_star_code(cs - 1): 1, _star_code(cs): 1}
    else:
        big_degree = None
        for deg in range(cs - 1, n):
            if comb(deg, cs - 1) == star_cards:
                big_degree = deg
                break
        if big_degree is None:
            raise InconsistentInput(f"{star_cards} star cards match no single degree")
        boundary = {_star_code(big_degree): 1}
        # the star card itself is a non-maximal family member of card size
        boundary.setdefault(_star_code(cs - 1), 0)

    table = solve_maximal_counts(d, VineKind(False, 1), boundary)
    counts: Counter = Counter()
    for code, m in table.m_counts.items():
        if m:
            counts[_decode_cached(code).n - 1] += m
    deg_sum_high = sum(t * c for t, c in counts.items())
    deg1 = 2 * m_edges - deg_sum_high
    deg0 = n - sum(counts.values()) - deg1
    if deg1 < 0 or deg0 < 0:
        raise InconsistentInput("degree balance went negative")
    degrees = []
    for t, c in counts.items():
        degrees.extend([t] * c)
    degrees.extend([1] * deg1)
    degrees.extend([0] * deg0)
    return tuple(sorted(degrees, reverse=True))


# -- center counts ------------------------------------------------------


def _check_center_validity(d: Deck, j: int) -> None:
    k = k_from_deck(d)
    if k is None:
        raise OutOfValidityRange("deck has no edges; k is undefined")
    if j <= k:
        return
    if j == k + 1:
        diam_target = 2 * k + 2
        for card, _ in d.decoded_cards():
            if is_connected(card) and diameter(card) == diam_target:
                raise OutOfValidityRange(
                    f"j = k+1 needs no card of diameter {diam_target}"
                )
        return
    raise OutOfValidityRange(f"j = {j} exceeds k+1 = {k + 1}")


def j_center_count_from_deck(d: Deck, j: int) -> int:
    """Number of j-centers shared by all reconstructions (valid for j <= k,
    or j = k+1 when no card has diameter 2k+2)."""
    _check_center_validity(d, j)
    table = solve_maximal_counts(d, VineKind(False, j), {})
    return table.total_maximal


def j_central_edge_count_from_deck(d: Deck, j: int) -> int:
    """Number of j-central edges shared by all reconstructions (j <= k)."""
    k = k_from_deck(d)
    if k is None or j > k:
        raise OutOfValidityRange(f"j-central edges need j <= k = {k}")
    table = solve_maximal_counts(d, VineKind(True, j), {})
    return table.total_maximal


# -- brute-force oracles (for verification) -----------------------------


def maximal_counts_direct(g: Graph, family: Family) -> Counter:
    """m(F, G) by exhaustive enumeration of maximal family occurrences."""
    from .canon import SubgraphCoder
    from .graphs import induced_subgraph

    coder = SubgraphCoder(g)
    occurrences: list[int] = []
    for mask in range(1, 1 << g.n):
        if family_contains(family, induced_subgraph(g, mask)):
            occurrences.append(mask)
    occ_set = set(occurrences)
    counts: Counter = Counter()
    for mask in occurrences:
        if any(
            other != mask and other & mask == mask for other in occ_set
        ):
            continue
        counts[coder.code(mask)] += 1
    return counts
