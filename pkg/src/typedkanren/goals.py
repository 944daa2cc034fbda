"""Goal constructors and combinators.

A goal maps a search state to a lazy stream of successor states. The two
primitive goals are unification (eq) and disequality (neq); conjunction
combines result streams with bind, disjunction merges them with mplus, and
conde is the n-ary disjunction with every alternative suspended so that
recursive relations do not loop while the stream is being built.

Goals support ``&`` and ``|`` as conjunction and disjunction.
"""

from typing import Any, Callable, Iterable, Tuple

from .constraints import add_diseq, verify_store
from .facade import Handle, encode, union_anchors
from .state import Env, State, fresh_var, unify
from .stream import EMPTY, Stream, Suspended, bind, mplus, unit
from .term import ForeignVariableError, Var, VarId


class Goal:
    __slots__ = ("_fn",)

    def __init__(self, fn: Callable[[State], Stream]):
        self._fn = fn

    def __call__(self, st: State) -> Stream:
        return self._fn(st)

    def __and__(self, other: "Goal") -> "Goal":
        return conj(self, other)

    def __or__(self, other: "Goal") -> "Goal":
        return disj(self, other)


succeed = Goal(unit)
fail = Goal(lambda st: EMPTY)


def eq(t1: Any, t2: Any) -> Goal:
    """Unify the two terms; yields at most one state.

    On success the new bindings are pushed through the constraint store,
    which may still reject the state. Variables from another run raise
    ForeignVariableError rather than unifying nonsense.
    """
    h1 = encode(t1)
    h2 = encode(t2)
    u1, u2 = h1.term, h2.term
    anchors = union_anchors(h1.anchors, h2.anchors)

    def step(st: State) -> Stream:
        anchor = st.env.anchor
        for a in anchors:
            if a is not anchor:
                raise ForeignVariableError(
                    "a variable in this unification belongs to a different run"
                )
        r = unify(u1, u2, st.subst)
        if r is None:
            return EMPTY
        s2, prefix = r
        if not prefix:  # no new bindings: the store cannot have changed
            return unit(st)
        if not st.constraints:
            return unit(State(st.env, s2, st.constraints))
        st2 = verify_store(State(st.env, s2, st.constraints))
        return EMPTY if st2 is None else unit(st2)

    return Goal(step)


def neq(t1: Any, t2: Any) -> Goal:
    """Forbid the two terms from ever becoming equal on this branch."""
    h1 = encode(t1)
    h2 = encode(t2)
    u1, u2 = h1.term, h2.term
    anchors = union_anchors(h1.anchors, h2.anchors)

    def step(st: State) -> Stream:
        anchor = st.env.anchor
        for a in anchors:
            if a is not anchor:
                raise ForeignVariableError(
                    "a variable in this disequality belongs to a different run"
                )
        st2 = add_diseq(u1, u2, st)
        return EMPTY if st2 is None else unit(st2)

    return Goal(step)


def conj(g1: Goal, g2: Goal) -> Goal:
    f1, f2 = g1._fn, g2._fn
    return Goal(lambda st: bind(f1(st), f2))


def conj_all(*goals: Goal) -> Goal:
    """n-ary conjunction, associated to the left."""
    if not goals:
        return succeed
    fns = tuple(g._fn for g in goals)

    def step(st: State) -> Stream:
        s = fns[0](st)
        for f in fns[1:]:
            s = bind(s, f)
        return s

    return Goal(step)


def disj(g1: Goal, g2: Goal) -> Goal:
    # both disjuncts receive the same input state
    f1, f2 = g1._fn, g2._fn
    return Goal(lambda st: mplus(f1(st), f2(st)))


def conde(alternatives: Iterable[Goal]) -> Goal:
    """Disjunction of a list of goals, each suspended (inverse-eta).

    Equivalent to a left-associated ``disj`` over suspended alternatives;
    the empty list is the failing goal.
    """
    fns = tuple(g._fn for g in alternatives)
    if not fns:
        return fail

    def step(st: State) -> Stream:
        out: Stream = Suspended(lambda f=fns[0]: f(st))
        for f in fns[1:]:
            out = mplus(out, Suspended(lambda f=f: f(st)))
        return out

    return Goal(step)


def call_fresh(body: Callable[[Handle], Goal]) -> Goal:
    """Apply an abstracted goal to a freshly allocated variable."""

    def step(st: State) -> Stream:
        v, st2 = fresh_var(st)
        return body(Handle(v, (st2.env.anchor,)))(st2)

    return Goal(step)


def fresh(body: Callable[..., Goal]) -> Goal:
    """Introduce as many fresh variables as ``body`` takes (1 to 5).

    Equivalent to nesting ``call_fresh``; variables are allocated left to
    right. Nest ``fresh`` for more than five.
    """
    n = body.__code__.co_argcount
    if not 1 <= n <= 5:
        raise ValueError("fresh takes a function of 1 to 5 parameters")

    def step(st: State) -> Stream:
        env = st.env
        base = env.next_index
        anchor = env.anchor
        anchors = (anchor,)
        handles = [Handle(Var(VarId(base + i, anchor)), anchors) for i in range(n)]
        st2 = State(Env(base + n, anchor), st.subst, st.constraints)
        return body(*handles)(st2)

    return Goal(step)


def delay(producer: Callable[[], Goal]) -> Goal:
    """Inverse-eta delay: build the goal only when the stream is forced.

    Needed for recursive calls that are not already guarded by ``fresh`` or
    ``conde``, e.g. directly self-referential disjuncts.
    """
    return Goal(lambda st: Suspended(lambda: producer()(st)))
