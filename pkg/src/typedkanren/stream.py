"""Lazy interleaving streams that drive the backtracking search.

A stream has one of three shapes: the empty stream, a cons cell holding an
element plus the rest of the stream, or a suspended node wrapping a
zero-argument producer. Suspensions are what make the search lazy; the merge
below swaps its operands whenever the first one suspends, so two sources are
interleaved fairly instead of the first (possibly infinite) one being
exhausted before the second is ever touched.

Suspensions are memoized: forcing a node twice returns the same structure
without re-running the producer. Consumers that share a stream (for example
the per-variable answer streams of one query) therefore never redo search
work another consumer already paid for.

Streams are single-consumer per thread: immutable apart from the suspension
memo, which must not be raced from two threads.
"""

from typing import Any, Callable, List, Optional


class Stream:
    """Marker base class for stream nodes."""

    __slots__ = ()


class _Empty(Stream):
    __slots__ = ()

    def __repr__(self) -> str:
        return "mzero"


EMPTY = _Empty()


class Cons(Stream):
    __slots__ = ("head", "tail")

    def __init__(self, head: Any, tail: Stream):
        self.head = head
        self.tail = tail


class Suspended(Stream):
    """A delayed stream; forcing performs exactly one scheduling step."""

    __slots__ = ("_producer", "_value")

    def __init__(self, producer: Callable[[], Stream]):
        self._producer = producer
        self._value: Optional[Stream] = None

    def force(self) -> Stream:
        producer = self._producer
        if producer is not None:
            self._value = producer()
            self._producer = None  # drop closure: frees captures, makes forcing idempotent
        return self._value  # type: ignore[return-value]


def unit(x: Any) -> Stream:
    """One-element stream containing exactly ``x``."""
    return Cons(x, EMPTY)


def mzero() -> Stream:
    """The empty stream."""
    return EMPTY


def suspend(producer: Callable[[], Stream]) -> Stream:
    """Delay a stream; the producer runs only when the node is forced."""
    return Suspended(producer)


def mplus(s1: Stream, s2: Stream) -> Stream:
    """Merge two streams, interleaving whenever the first one suspends.

    When ``s1`` suspends, the delayed recursive call swaps the arguments, so
    a value buried d suspensions deep in ``s2`` surfaces after at most 2d+2
    forcing steps regardless of how unproductive ``s1`` is.
    """
    if s1 is EMPTY:
        return s2
    if type(s1) is Suspended:
        return Suspended(lambda: mplus(s2, s1.force()))
    return Cons(s1.head, mplus(s1.tail, s2))


def bind(s: Stream, f: Callable[[Any], Stream]) -> Stream:
    """Merge ``f(x)`` for every ``x`` in ``s``.

    The results are combined with ``mplus``, so an ``f(x)`` producing
    infinitely many elements cannot starve the ``f`` images of later
    elements of ``s``.
    """
    if s is EMPTY:
        return EMPTY
    if type(s) is Suspended:
        return Suspended(lambda: bind(s.force(), f))
    return mplus(f(s.head), bind(s.tail, f))


def take(n: Optional[int], s: Stream) -> List[Any]:
    """First ``n`` elements of ``s`` in stream order; all of them if ``n`` is None.

    Forces no more of the stream than needed; with ``n=None`` this terminates
    only for finite streams.
    """
    out: List[Any] = []
    while n is None or len(out) < n:
        while type(s) is Suspended:
            s = s.force()
        if s is EMPTY:
            break
        out.append(s.head)
        s = s.tail
    return out
