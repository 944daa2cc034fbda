"""Top-level query interface: numerals, reified answers, run.

``run`` allocates query variables (as many as the numeral says), applies the
goal, and hands the handler one lazy stream of reified answers per
variable. The streams are coherent: their k-th elements all come from the
k-th answer state, and each answer reifies only against its own state, so a
variable can never be read in a state that did not descend from the one that
created it.
"""

from typing import Any, Callable, List, Optional

from .facade import (
    AnswerView,
    FreeVar,
    Handle,
    LogicValue,
    Value,
    _BY_TAG,
    project,
    reify_term,
)
from .state import State, fresh_var, initial_state
from .stream import EMPTY, Cons, Stream, Suspended, take
from .term import Atom, Composite, Term, Var


class Numeral:
    """Size witness: how many query variables a run allocates."""

    __slots__ = ("count",)

    def __init__(self, count: int):
        if count < 1:
            raise ValueError("a numeral counts at least one query variable")
        self.count = count

    def __repr__(self) -> str:
        return f"Numeral({self.count})"


q = Numeral(1)
qr = Numeral(2)
qrs = Numeral(3)


def succ(n: Numeral) -> Numeral:
    """The next numeral: one more query variable."""
    return Numeral(n.count + 1)


class Reified:
    """One query variable's view of one answer.

    Pairs the raw answer term with a read-only view of its own final state;
    all reification happens against that state and no other.
    """

    __slots__ = ("term", "view")

    def __init__(self, term: Term, view: AnswerView):
        self.term = term
        self.view = view

    def reify(self) -> LogicValue:
        """Tagged form with free variables explicit (fresh numbering per call)."""
        return reify_term(self.view, self.term)

    def prj(self) -> Any:
        """The ground host value; raises NotGroundError if any variable is free."""
        return project(self.reify())

    def __repr__(self) -> str:
        return f"Reified({self.term!r})"


def destruct(r: Reified):
    """One-level view of an answer.

    A free variable comes back as a FreeVar carrying its reified forbidden
    list; anything else comes back as ``Value`` whose payload is the
    primitive, or the top constructor applied to Reified children.
    """
    t = r.view.walk_deep(r.term)
    if type(t) is Var:
        lv = reify_term(r.view, t)
        return lv
    if type(t) is Atom:
        return Value(t.payload)
    assert type(t) is Composite
    spec = _BY_TAG[t.tag]
    children = (Reified(a, r.view) for a in t.args)
    return Value(spec.cls(*children))


def _map_states(f: Callable[[State], Reified], s: Stream) -> Stream:
    if s is EMPTY:
        return EMPTY
    if type(s) is Suspended:
        return Suspended(lambda: _map_states(f, s.force()))
    return Cons(f(s.head), Suspended(lambda: _map_states(f, s.tail)))


def run(n: Numeral, goal_builder: Callable[..., Any], handler: Callable[..., Any]) -> Any:
    """Run a query.

    ``goal_builder`` receives ``n`` fresh query variables and returns the
    goal; ``handler`` receives ``n`` lazy streams of Reified answers and its
    result is returned. Forcing the streams is what drives the search.
    """
    st = initial_state()
    handles: List[Handle] = []
    for _ in range(n.count):
        v, st = fresh_var(st)
        handles.append(Handle(v, (st.env.anchor,)))
    answers = goal_builder(*handles)(st)
    streams = [
        _map_states(lambda ans, t=h.term: Reified(t, AnswerView(ans)), answers)
        for h in handles
    ]
    return handler(*streams)


def stream_take(n: Optional[int], s: Stream) -> List[Any]:
    """First ``n`` answers (all of them when ``n`` is None)."""
    return take(n, s)


def stream_head(s: Stream) -> Any:
    """The first answer; raises ValueError when the stream is provably empty.

    Diverges, like the underlying search, when no answer exists but the
    search space is infinite.
    """
    got = take(1, s)
    if not got:
        raise ValueError("empty answer stream")
    return got[0]
