"""Relational type inference for the simply typed lambda calculus.

One relation serves as type checker, type inferencer and inhabitation
solver, depending on which arguments are left free. Variable names are
string atoms; environments are logic lists of (name, type) pairs with the
nearest binding first, so shadowing falls out of lookup order plus the
disequality on names.
"""

import dataclasses
from typing import Any

from .facade import Functor, Handle, inj
from .goals import Goal, conde, conj, eq, fresh, neq
from .stdlib import cons, inj_pair, nil


@dataclasses.dataclass(frozen=True)
class V:
    name: Any


@dataclasses.dataclass(frozen=True)
class App:
    fn: Any
    arg: Any


@dataclasses.dataclass(frozen=True)
class Abs:
    param: Any
    body: Any


LAM = Functor("lam", [V, App, Abs])


def v(name: Any) -> Handle:
    return inj(LAM.distrib(V(name)))


def app(fn: Any, arg: Any) -> Handle:
    return inj(LAM.distrib(App(fn, arg)))


def abs_(param: Any, body: Any) -> Handle:
    return inj(LAM.distrib(Abs(param, body)))


@dataclasses.dataclass(frozen=True)
class P:
    name: Any


@dataclasses.dataclass(frozen=True)
class Arr:
    arg: Any
    res: Any


SIMPLE_TYPE = Functor("simple_type", [P, Arr])


def p(name: Any) -> Handle:
    return inj(SIMPLE_TYPE.distrib(P(name)))


def arr(a: Any, b: Any) -> Handle:
    return inj(SIMPLE_TYPE.distrib(Arr(a, b)))


def lookupo(name: Any, env: Any, typ: Any) -> Goal:
    """typ is the type bound to name in env; nearest binding wins."""
    return fresh(
        lambda a1, t1, tl: conj(
            eq(env, cons(inj_pair(a1, t1), tl)),
            conde(
                [
                    conj(eq(a1, name), eq(t1, typ)),
                    conj(neq(a1, name), lookupo(name, tl, typ)),
                ]
            ),
        )
    )


def _infero(gamma: Any, expr: Any, typ: Any) -> Goal:
    return conde(
        [
            fresh(lambda x: conj(eq(expr, v(x)), lookupo(x, gamma, typ))),
            fresh(
                lambda m, n, t: conj(
                    eq(expr, app(m, n)),
                    conj(_infero(gamma, m, arr(t, typ)), _infero(gamma, n, t)),
                )
            ),
            fresh(
                lambda x, l, t, t1: conj(
                    eq(expr, abs_(x, l)),
                    conj(
                        eq(typ, arr(t, t1)),
                        _infero(cons(inj_pair(x, t), gamma), l, t1),
                    ),
                )
            ),
        ]
    )


def infero(expr: Any, typ: Any) -> Goal:
    """expr has type typ under the empty environment."""
    return _infero(nil(), expr, typ)
