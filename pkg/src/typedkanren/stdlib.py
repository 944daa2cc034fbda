"""Relational standard library: logic lists, Peano naturals, pairs, options.

The list constructors follow the usual shorthand: ``nil()`` is the empty
list, ``h % t`` conses, ``singleton(x)`` is the one-element list and
``list_of(xs)`` injects a whole Python list. Lists project back to Python
lists; Peano numbers project to O/S constructor towers, converted with
``from_nat`` / ``from_nat_list``.
"""

import dataclasses
from typing import Any, List as PyList

from .facade import Functor, Handle, encode, inj, union_anchors
from .goals import Goal, conde, conj, eq, fresh
from .run import q, run, stream_take
from .term import Composite


# --- logic lists -------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Nil:
    pass


@dataclasses.dataclass(frozen=True)
class Cons:
    head: Any
    tail: Any


def _list_from_host(xs):
    return Cons(xs[0], list(xs[1:])) if xs else Nil()


def _list_to_host(v):
    return [] if isinstance(v, Nil) else [v.head] + v.tail


LIST = Functor(
    "list",
    [Nil, Cons],
    from_host=_list_from_host,
    to_host=_list_to_host,
    host_types=(list,),
)

# built on every relation step, so these skip the generic distrib machinery
_NIL = Handle(Composite("Nil", ()), ())


def nil() -> Handle:
    return _NIL


def cons(h: Any, t: Any) -> Handle:
    eh = encode(h)
    et = encode(t)
    return Handle(
        Composite("Cons", (eh.term, et.term)), union_anchors(eh.anchors, et.anchors)
    )


def singleton(x: Any) -> Handle:
    return cons(x, nil())


def list_of(xs) -> Handle:
    """Inject a Python sequence as a proper logic list."""
    out = nil()
    for x in reversed(list(xs)):
        out = cons(x, out)
    return out


# h % t as the cons operator, 5 % rest lifting the left side first
Handle.__mod__ = lambda self, other: cons(self, other)
Handle.__rmod__ = lambda self, other: cons(encode(other), self)


# --- pairs -------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Pair:
    fst: Any
    snd: Any


PAIR = Functor("pair", [Pair])


def inj_pair(a: Any, b: Any) -> Handle:
    return inj(PAIR.distrib(Pair(a, b)))


# --- options -----------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Some:
    value: Any


@dataclasses.dataclass(frozen=True)
class Nothing:
    pass


OPTION = Functor("option", [Some, Nothing])


def some(x: Any) -> Handle:
    return inj(OPTION.distrib(Some(x)))


def nothing() -> Handle:
    return inj(OPTION.distrib(Nothing()))


# --- Peano naturals ----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class O:
    pass


@dataclasses.dataclass(frozen=True)
class S:
    pred: Any


PEANO = Functor("peano", [O, S])


def o() -> Handle:
    return inj(PEANO.distrib(O()))


def s(n: Any) -> Handle:
    return inj(PEANO.distrib(S(n)))


def inj_nat(n: int) -> Handle:
    if n < 0:
        raise ValueError("Peano naturals are nonnegative")
    out = o()
    for _ in range(n):
        out = s(out)
    return out


def from_nat(v) -> int:
    n = 0
    while isinstance(v, S):
        v = v.pred
        n += 1
    if not isinstance(v, O):
        raise ValueError(f"not a ground Peano natural: {v!r}")
    return n


def inj_nat_list(xs) -> Handle:
    """Inject a Python integer list as a logic list of Peano naturals."""
    return list_of([inj_nat(x) for x in xs])


def from_nat_list(vs) -> PyList[int]:
    """Projected logic list of Peano naturals back to Python integers."""
    return [from_nat(v) for v in vs]


# --- relations ---------------------------------------------------------------

def appendo(x: Any, y: Any, xy: Any) -> Goal:
    """xy is the concatenation of x and y."""
    return conde(
        [
            conj(eq(x, nil()), eq(y, xy)),
            fresh(
                lambda h, t: conj(
                    eq(x, cons(h, t)),
                    fresh(lambda ty: conj(eq(xy, cons(h, ty)), appendo(t, y, ty))),
                )
            ),
        ]
    )


def reverso(a: Any, b: Any) -> Goal:
    """b is a reversed."""
    return conde(
        [
            conj(eq(a, nil()), eq(b, nil())),
            fresh(
                lambda h, t: conj(
                    eq(a, cons(h, t)),
                    fresh(lambda a1: conj(appendo(a1, singleton(h), b), reverso(t, a1))),
                )
            ),
        ]
    )


def leo(a: Any, b: Any) -> Goal:
    """Peano a <= b."""
    return conde(
        [
            eq(a, o()),
            fresh(lambda a1, b1: conj(eq(a, s(a1)), conj(eq(b, s(b1)), leo(a1, b1)))),
        ]
    )


def gto(a: Any, b: Any) -> Goal:
    """Peano a > b."""
    return conde(
        [
            fresh(lambda a1: conj(eq(a, s(a1)), eq(b, o()))),
            fresh(lambda a1, b1: conj(eq(a, s(a1)), conj(eq(b, s(b1)), gto(a1, b1)))),
        ]
    )


def minmaxo(a: Any, b: Any, mn: Any, mx: Any) -> Goal:
    """mn and mx are a and b in order; ties take the first clause."""
    return conde(
        [
            conj(eq(mn, a), conj(eq(mx, b), leo(a, b))),
            conj(eq(mx, a), conj(eq(mn, b), gto(a, b))),
        ]
    )


def smallesto(l: Any, sm: Any, rest: Any) -> Goal:
    """sm is the least element of nonempty l; rest is l without one copy of it."""
    return conde(
        [
            conj(eq(l, singleton(sm)), eq(rest, nil())),
            fresh(
                lambda h, t, s1, t1, mx: conj(
                    eq(rest, cons(mx, t1)),
                    conj(
                        eq(l, cons(h, t)),
                        conj(minmaxo(h, s1, sm, mx), smallesto(t, s1, t1)),
                    ),
                )
            ),
        ]
    )


def same_lengtho(a: Any, b: Any) -> Goal:
    """a and b are lists of the same length."""
    return conde(
        [
            conj(eq(a, nil()), eq(b, nil())),
            fresh(
                lambda h, t, h2, t2: conj(
                    eq(a, cons(h, t)),
                    conj(eq(b, cons(h2, t2)), same_lengtho(t, t2)),
                )
            ),
        ]
    )


def sorto(x: Any, y: Any) -> Goal:
    """y is x sorted ascending (Peano elements).

    The length coupling pins the free side's skeleton to the ground side's,
    and smallesto runs before the recursive call. Without both, one
    direction degenerates into unbounded generate-and-test: ground sorting
    diverges around five elements one way, permutation enumeration around
    four the other way.
    """
    return conde(
        [
            conj(eq(x, nil()), eq(y, nil())),
            fresh(
                lambda sm, xs, xs1: conj(
                    eq(y, cons(sm, xs1)),
                    conj(
                        same_lengtho(x, y),
                        conj(smallesto(x, sm, xs), sorto(xs, xs1)),
                    ),
                )
            ),
        ]
    )


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def perm(l) -> PyList[PyList[int]]:
    """All permutations of an integer list, as the lists that sort to sorted(l).

    Requests exactly len(l)! answers; asking for more would search forever.
    """
    want = _factorial(len(l))
    return run(
        q,
        lambda qv: fresh(
            lambda r: conj(sorto(inj_nat_list(l), r), sorto(qv, r))
        ),
        lambda answers: [from_nat_list(a.prj()) for a in stream_take(want, answers)],
    )
