"""Untyped core terms and their traversals.

Everything the search engine manipulates is a Term: a logic variable, a
constructor application (Composite) or a primitive leaf (Atom). The typed
layer wraps these without changing them, so a single unification algorithm
serves every user datatype.

Variables carry the anchor of the run that created them: an opaque token
minted once per top-level query. Operations reject variables whose anchor
differs from the ambient run's, which stops a variable captured from one
query from silently colliding with an unrelated variable of another.
"""

from typing import Any, Iterator, List, Tuple, Union

Payload = Union[int, bool, str]


class ForeignVariableError(Exception):
    """A logic variable was used outside the run that created it."""


class Anchor:
    """Opaque per-run token; compared by identity."""

    __slots__ = ()

    def __repr__(self) -> str:
        return f"<anchor {id(self):#x}>"


class VarId:
    """Identity of a logic variable: creation index within a run, plus the run's anchor."""

    __slots__ = ("index", "anchor")

    def __init__(self, index: int, anchor: Anchor):
        self.index = index
        self.anchor = anchor

    def __eq__(self, other: object) -> bool:
        return (
            type(other) is VarId
            and self.index == other.index
            and self.anchor is other.anchor
        )

    def __hash__(self) -> int:
        return hash((self.index, id(self.anchor)))

    def __repr__(self) -> str:
        return f"VarId({self.index})"


class Term:
    """Marker base class for core terms."""

    __slots__ = ()


class Var(Term):
    __slots__ = ("vid",)

    def __init__(self, vid: VarId):
        self.vid = vid

    def __eq__(self, other: object) -> bool:
        return type(other) is Var and self.vid == other.vid

    def __hash__(self) -> int:
        return hash(self.vid)

    def __repr__(self) -> str:
        return f"Var({self.vid.index})"


class Composite(Term):
    __slots__ = ("tag", "args")

    def __init__(self, tag: str, args: Tuple[Term, ...]):
        self.tag = tag
        self.args = args

    def __eq__(self, other: object) -> bool:
        return (
            type(other) is Composite
            and self.tag == other.tag
            and self.args == other.args
        )

    def __hash__(self) -> int:
        return hash((self.tag, self.args))

    def __repr__(self) -> str:
        return f"Composite({self.tag!r}, {list(self.args)!r})"


class Atom(Term):
    __slots__ = ("payload",)

    def __init__(self, payload: Payload):
        self.payload = payload

    def __eq__(self, other: object) -> bool:
        if type(other) is not Atom:
            return NotImplemented
        p, q = self.payload, other.payload
        # type-strict: True and 1 are different atoms
        return type(p) is type(q) and p == q

    def __hash__(self) -> int:
        return hash(self.payload)

    def __repr__(self) -> str:
        return f"Atom({self.payload!r})"


def walk(s, t: Term) -> Term:
    """Resolve ``t`` through the triangular substitution ``s``.

    Follows variable bindings until an unbound variable or a non-variable
    term is reached. Terminates because extensions are occurs-checked, so
    binding chains are acyclic. The result is never a variable bound in
    ``s``.
    """
    while type(t) is Var:
        bound = s.lookup(t.vid.index)
        if bound is None:
            return t
        t = bound
    return t


def walk_deep(s, t: Term) -> Term:
    """Resolve ``t`` and, recursively, every subterm; only free vars remain."""
    t = walk(s, t)
    if type(t) is Composite:
        return Composite(t.tag, tuple(walk_deep(s, a) for a in t.args))
    return t


def occurs(s, vid: VarId, t: Term) -> bool:
    """True iff ``vid`` appears anywhere in ``t`` after walking through ``s``."""
    stack: List[Term] = [t]
    while stack:
        u = walk(s, stack.pop())
        if type(u) is Var:
            if u.vid == vid:
                return True
        elif type(u) is Composite:
            stack.extend(u.args)
    return False


def term_size(t: Term) -> int:
    """Node count of ``t``."""
    n = 0
    stack: List[Term] = [t]
    while stack:
        u = stack.pop()
        n += 1
        if type(u) is Composite:
            stack.extend(u.args)
    return n


def variables(t: Term) -> Iterator[Var]:
    """All variable occurrences in ``t``, left to right."""
    if type(t) is Var:
        yield t
    elif type(t) is Composite:
        for a in t.args:
            yield from variables(a)


def assert_anchored(t: Term, anchor: Anchor) -> None:
    """Raise ForeignVariableError if any variable in ``t`` belongs to another run."""
    for v in variables(t):
        if v.vid.anchor is not anchor:
            raise ForeignVariableError(
                f"variable {v.vid.index} was created by a different run"
            )


def render(t: Term) -> str:
    """Canonical textual form: atoms verbatim, composites as ``Tag(arg, ...)``,
    free variables as ``_.k`` numbered by first occurrence left to right.
    Zero-argument composites render as the bare tag."""
    names: dict = {}

    def go(u: Term) -> str:
        if type(u) is Var:
            k = names.setdefault(u.vid, len(names))
            return f"_.{k}"
        if type(u) is Atom:
            return str(u.payload)
        assert type(u) is Composite
        if not u.args:
            return u.tag
        return f"{u.tag}({', '.join(go(a) for a in u.args)})"

    return go(t)
