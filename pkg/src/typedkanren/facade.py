"""Typed wrappers over core terms: injection in, reification out.

A Handle is a phantom-typed wrapper around one core term. Its two type
parameters track the plain host type and the logic (variable-admitting)
shape of the value; neither has any runtime footprint, so static checkers
can reject mixed-type unifications while the engine keeps working on one
untyped representation.

User datatypes plug in through a Functor: a description of the type's
constructors from which injection (``distrib``), reification and projection
are all derived. Constructors are plain frozen dataclasses; their field
order is the constructor's argument order. Optional host hooks let a
datatype present itself as a friendlier host value (logic lists project to
Python lists, for instance).

Reified answers are LogicValues: either ``Value(payload)`` where the payload
is a primitive or a constructor application over LogicValues, or
``FreeVar(k, forbidden)`` for an unresolved variable together with the
reified terms its disequality constraints rule out. Free variables are
numbered densely by first occurrence in a preorder traversal, fresh per
reification, which keeps goldens stable.
"""

import dataclasses
from typing import Any, Callable, Dict, Generic, List, Optional, Tuple, Type, TypeVar

from .constraints import constraints_for
from .state import State
from .term import Atom, Composite, Term, Var, VarId, walk_deep

U = TypeVar("U")  # host ("tagless") type
L = TypeVar("L")  # logic ("tagged") type

_PRIMITIVES = (int, bool, str)


class NotGroundError(Exception):
    """Projection met a free variable: the answer is not a value."""


class ReifyError(Exception):
    """A term mentions a constructor tag nobody registered (corrupted term)."""


class Handle(Generic[U, L]):
    """Phantom-typed handle over one core term.

    ``anchors`` caches the distinct run anchors of the term's variables;
    goal constructors read it instead of rescanning the term, and builders
    that combine handles precompute the union so ground terms stay free.
    """

    __slots__ = ("term", "_anchors")

    def __init__(self, term: Term, _anchors: Optional[Tuple] = None):
        self.term = term
        self._anchors = _anchors

    @property
    def anchors(self) -> Tuple:
        a = self._anchors
        if a is None:
            seen = {}
            stack = [self.term]
            while stack:
                t = stack.pop()
                if type(t) is Var:
                    seen[id(t.vid.anchor)] = t.vid.anchor
                elif type(t) is Composite:
                    stack.extend(t.args)
            a = self._anchors = tuple(seen.values())
        return a

    def __repr__(self) -> str:
        return f"Handle({self.term!r})"


def union_anchors(a: Tuple, b: Tuple) -> Tuple:
    """Union of two anchor tuples, cheap for the overwhelmingly common cases."""
    if not a:
        return b
    if not b or a == b:
        return a
    seen = {id(x): x for x in a}
    for x in b:
        seen.setdefault(id(x), x)
    return tuple(seen.values())

    # installed by typedkanren.stdlib: h % t builds a logic list cell
    def __mod__(self, other):  # pragma: no cover - replaced on stdlib import
        raise TypeError("import typedkanren.stdlib to use % as the list constructor")

    def __rmod__(self, other):  # pragma: no cover - replaced on stdlib import
        raise TypeError("import typedkanren.stdlib to use % as the list constructor")


def lift(x: U) -> Handle:
    """Shallow injection of a primitive into the logic domain."""
    if type(x) not in _PRIMITIVES:
        raise TypeError(f"lift expects int, bool or str, got {type(x).__name__}")
    return Handle(Atom(x))


def inj(h: Handle) -> Handle:
    """Record one tagging level in the phantom type; identity at runtime."""
    return h


# --- functor registry -------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class CtorSpec:
    tag: str
    cls: type
    fields: Tuple[str, ...]
    functor: "Functor"


_BY_TAG: Dict[str, CtorSpec] = {}
_BY_CLS: Dict[type, CtorSpec] = {}
_HOST_ENCODERS: Dict[type, Callable[[Any], Any]] = {}


class Functor:
    """One logical datatype: its constructors plus derived conversions.

    ``ctors`` are frozen dataclasses; each registers globally under its class
    name as the constructor tag. ``from_host``/``to_host`` optionally convert
    between a host representation and a one-level constructor application
    (both sides recurse through the generic machinery), and ``host_types``
    names the host types ``from_host`` accepts.
    """

    def __init__(
        self,
        name: str,
        ctors: List[type],
        from_host: Optional[Callable[[Any], Any]] = None,
        to_host: Optional[Callable[[Any], Any]] = None,
        host_types: Tuple[type, ...] = (),
    ):
        self.name = name
        self.ctors: Dict[str, CtorSpec] = {}
        self.to_host = to_host
        for cls in ctors:
            tag = cls.__name__
            fields = tuple(f.name for f in dataclasses.fields(cls))
            spec = CtorSpec(tag, cls, fields, self)
            if tag in _BY_TAG and _BY_TAG[tag].cls is not cls:
                raise ValueError(f"constructor tag {tag!r} is already registered")
            self.ctors[tag] = spec
            _BY_TAG[tag] = spec
            _BY_CLS[cls] = spec
        if from_host is not None:
            for t in host_types:
                _HOST_ENCODERS[t] = from_host

    def fmap(self, f: Callable[[Any], Any], value: Any) -> Any:
        """Rebuild a constructor application with ``f`` applied to each child."""
        spec = _BY_CLS[type(value)]
        return spec.cls(*(f(getattr(value, n)) for n in spec.fields))

    def distrib(self, value: Any) -> Handle:
        """Build the composite term for a one-level constructor application.

        The children may be Handles, primitives, or further ground values;
        anything not already injected goes through ``encode``.
        """
        spec = self.ctors.get(type(value).__name__)
        if spec is None or spec.cls is not type(value):
            raise TypeError(f"{value!r} is not a constructor of functor {self.name}")
        anchors: Tuple = ()
        args = []
        for n in spec.fields:
            h = encode(getattr(value, n))
            args.append(h.term)
            anchors = union_anchors(anchors, h.anchors)
        return Handle(Composite(spec.tag, tuple(args)), anchors)


_ATOM_CACHE: Dict[Tuple[type, Any], Handle] = {}


def _atom_handle(x: Any) -> Handle:
    # atoms are immutable, so small ones are shared; keyed by type because
    # True and 1 are different atoms
    key = (type(x), x)
    h = _ATOM_CACHE.get(key)
    if h is None:
        h = Handle(Atom(x), ())
        if len(_ATOM_CACHE) < 4096:
            _ATOM_CACHE[key] = h
    return h


def encode(x: Any) -> Handle:
    """Deep injection: handles pass through, primitives become atoms,
    registered constructor applications and host values become composites."""
    if isinstance(x, Handle):
        return x
    if isinstance(x, Term):
        return Handle(x)
    if type(x) in _PRIMITIVES:
        return _atom_handle(x)
    hook = _HOST_ENCODERS.get(type(x))
    if hook is not None:
        x = hook(x)
    spec = _BY_CLS.get(type(x))
    if spec is not None:
        return spec.functor.distrib(x)
    raise TypeError(f"cannot inject {x!r} into the logic domain")


# --- logic values -----------------------------------------------------------

class LogicValue:
    """Marker base class for reified answers."""

    __slots__ = ()


class FreeVar(LogicValue):
    """An unresolved variable with its reified forbidden terms."""

    __slots__ = ("index", "forbidden")

    def __init__(self, index: int, forbidden: Tuple[LogicValue, ...] = ()):
        self.index = index
        self.forbidden = forbidden

    def __eq__(self, other: object) -> bool:
        return (
            type(other) is FreeVar
            and self.index == other.index
            and self.forbidden == other.forbidden
        )

    def __hash__(self) -> int:
        return hash((self.index, self.forbidden))

    def __repr__(self) -> str:
        if self.forbidden:
            return f"FreeVar({self.index}, forbidden={list(self.forbidden)!r})"
        return f"FreeVar({self.index})"


class Value(LogicValue):
    """A resolved node: primitive payload or constructor over LogicValues."""

    __slots__ = ("payload",)

    def __init__(self, payload: Any):
        self.payload = payload

    def __eq__(self, other: object) -> bool:
        return type(other) is Value and self.payload == other.payload

    def __hash__(self) -> int:
        return hash(("Value", str(self.payload)))

    def __repr__(self) -> str:
        return f"Value({self.payload!r})"


class AnswerView:
    """Read-only window onto one answer state.

    This is all a reifier may see of the engine: deep resolution through the
    answer's substitution, and the per-variable forbidden terms.
    """

    __slots__ = ("state",)

    def __init__(self, state: State):
        self.state = state

    def walk_deep(self, t: Term) -> Term:
        return walk_deep(self.state.subst, t)

    def constraints_for(self, vid: VarId) -> List[Term]:
        return constraints_for(self.state, vid)


def reify_term(view: AnswerView, t: Term) -> LogicValue:
    """Reify a term against one answer.

    Free variables get dense display indices by first occurrence; each
    variable's disequality constraints are expanded once, and a variable met
    again while its own constraints are being expanded renders as a bare
    FreeVar, which is what makes mutually constrained variables terminate.
    """
    names: Dict[VarId, int] = {}
    done: Dict[VarId, FreeVar] = {}
    expanding: set = set()

    def go(u: Term) -> LogicValue:
        if type(u) is Var:
            vid = u.vid
            if vid in expanding:
                return FreeVar(names[vid], ())
            hit = done.get(vid)
            if hit is not None:
                return hit
            idx = names.setdefault(vid, len(names))
            expanding.add(vid)
            forbidden = tuple(go(ft) for ft in view.constraints_for(vid))
            expanding.discard(vid)
            fv = FreeVar(idx, forbidden)
            done[vid] = fv
            return fv
        if type(u) is Atom:
            return Value(u.payload)
        assert type(u) is Composite
        spec = _BY_TAG.get(u.tag)
        if spec is None:
            raise ReifyError(f"unregistered constructor tag {u.tag!r}")
        return Value(spec.cls(*(go(a) for a in u.args)))

    return go(view.walk_deep(t))


def reify_value(view: AnswerView, h: Handle) -> LogicValue:
    """Reify a handle against one answer (see ``reify_term``)."""
    return reify_term(view, h.term)


def project(lv: LogicValue) -> Any:
    """Extract the ground host value; raises NotGroundError on any free variable."""
    if type(lv) is FreeVar:
        raise NotGroundError("not a value")
    payload = lv.payload  # type: ignore[union-attr]
    if type(payload) in _PRIMITIVES:
        return payload
    spec = _BY_CLS[type(payload)]
    value = spec.cls(*(project(getattr(payload, n)) for n in spec.fields))
    if spec.functor.to_host is not None:
        return spec.functor.to_host(value)
    return value


def render_value(lv: LogicValue) -> str:
    """Printable form: payloads like terms, ``_.k`` for free variables,
    ``_.k{=/= t1, t2}`` when a variable carries forbidden terms."""
    if type(lv) is FreeVar:
        base = f"_.{lv.index}"
        if lv.forbidden:
            return base + "{=/= " + ", ".join(render_value(f) for f in lv.forbidden) + "}"
        return base
    payload = lv.payload  # type: ignore[union-attr]
    if type(payload) in _PRIMITIVES:
        return str(payload)
    spec = _BY_CLS[type(payload)]
    if not spec.fields:
        return spec.tag
    inner = ", ".join(render_value(getattr(payload, n)) for n in spec.fields)
    return f"{spec.tag}({inner})"
