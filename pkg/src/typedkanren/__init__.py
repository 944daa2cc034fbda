"""Typed miniKanren embedding.

Relational programs are goals built from unification (eq), disequality
(neq), conjunction, disjunction, conde and fresh; ``run`` executes them and
hands back lazy streams of reified answers. See ``typedkanren.stdlib`` for
lists, Peano naturals, sorting and permutations, ``typedkanren.arith`` for
relational binary arithmetic and ``typedkanren.stlc`` for the lambda-calculus
type inferencer.
"""

from .facade import (
    AnswerView,
    FreeVar,
    Functor,
    Handle,
    LogicValue,
    NotGroundError,
    ReifyError,
    Value,
    encode,
    inj,
    lift,
    project,
    reify_value,
    render_value,
)
from .goals import Goal, call_fresh, conde, conj, delay, disj, eq, fail, fresh, neq, succeed
from .run import Numeral, Reified, destruct, q, qr, qrs, run, stream_head, stream_take, succ
from .state import initial_state
from .term import ForeignVariableError

__all__ = [
    "AnswerView",
    "ForeignVariableError",
    "FreeVar",
    "Functor",
    "Goal",
    "Handle",
    "LogicValue",
    "NotGroundError",
    "Numeral",
    "Reified",
    "ReifyError",
    "Value",
    "call_fresh",
    "conde",
    "conj",
    "delay",
    "destruct",
    "disj",
    "encode",
    "eq",
    "fail",
    "fresh",
    "inj",
    "initial_state",
    "lift",
    "neq",
    "project",
    "q",
    "qr",
    "qrs",
    "reify_value",
    "render_value",
    "run",
    "stream_head",
    "stream_take",
    "succ",
    "succeed",
]
