"""Exception hierarchy shared by all deckforge modules."""


class DeckforgeError(Exception):
    """Base class for all errors raised by deckforge."""


class InvalidVertexSet(DeckforgeError):
    """A vertex set is empty or contains vertices outside the graph."""


class NotConnected(DeckforgeError):
    """An operation defined only for connected graphs got a disconnected one."""


class InvalidCardSize(DeckforgeError):
    """Requested card size is outside 1..n."""


class InconsistentDeck(DeckforgeError):
    """A multiset claimed to be a deck fails an exact-divisibility check."""


class GirthTooSmall(DeckforgeError):
    """The girth precondition for unique maximal vines does not hold."""


class NotACenter(DeckforgeError):
    """The given vertex (or edge) does not center any vine of the requested radius."""


class NotAcyclicDeck(DeckforgeError):
    """An operation requiring an acyclic deck got a deck with a cyclic card."""


class InconsistentInput(DeckforgeError):
    """Solved counts went negative or an exactness check failed; the input
    cannot come from a graph satisfying the operation's preconditions."""


class MissingBoundary(DeckforgeError):
    """A required boundary count for a large family member was not supplied."""


class ExcludedCase(DeckforgeError):
    """The (n, ell) pair is explicitly excluded from the operation's validity."""


class OutOfValidityRange(DeckforgeError):
    """Parameters fall outside the range where the operation is defined."""


class NotATree(DeckforgeError):
    """A tree-only operation received a graph that is not a tree."""


class IsAPath(DeckforgeError):
    """legs() is undefined for paths (no branch vertex)."""


class BadCard(DeckforgeError):
    """The card handed to the marking process is not connected or has the
    wrong radius."""


class InvalidParameter(DeckforgeError):
    """A named construction got a parameter outside its valid range."""


class BudgetExceeded(DeckforgeError):
    """An enumeration was requested beyond its configured vertex budget."""


class ParseError(DeckforgeError):
    """Malformed graph6 input.

    Carries the byte offset of the first offending byte when known.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset
