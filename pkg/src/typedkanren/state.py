"""Search states and the unification algorithm.

A state is the triple (environment, substitution, constraint store). The
environment allocates fresh variables; the substitution is triangular (a
binding's image may itself contain bound variables, resolved lazily by
walk); the constraint store holds pending disequalities.

``unify`` returns, besides the extended substitution, the *prefix*: the list
of bindings this call added, in addition order. The disequality machinery
is built on prefixes, which saves it from diffing substitutions.
"""

from typing import List, Optional, Tuple

from .pmap import _EMPTY_NODE, _assoc, _items
from .term import Anchor, Atom, Composite, Term, Var, VarId, occurs, walk

Prefix = List[Tuple[VarId, Term]]
Constraint = Tuple[Tuple[VarId, Term], ...]
ConstraintStore = Tuple[Constraint, ...]


class Substitution:
    """Triangular substitution: variable index -> term, resolved by walk.

    Persistent; ``bind`` returns an extended copy sharing structure with the
    original, so sibling branches of the search tree stay cheap. The trie
    from ``pmap`` is inlined here because lookup sits on the hottest path of
    the whole engine.
    """

    __slots__ = ("_root", "_size")

    def __init__(self, _root=None, _size: int = 0):
        self._root = _root
        self._size = _size

    def lookup(self, index: int) -> Optional[Term]:
        node = self._root
        if node is None:
            return None
        shift = 0
        while True:
            e = node[(index >> shift) & 31]
            if e is None:
                return None
            if len(e) == 2:
                return e[1] if e[0] == index else None
            node = e
            shift += 5

    def bind(self, vid: VarId, t: Term) -> "Substitution":
        # only ever called for unbound vids (unify discipline)
        root = self._root if self._root is not None else _EMPTY_NODE
        return Substitution(_assoc(root, 0, vid.index, t), self._size + 1)

    def __len__(self) -> int:
        return self._size

    def items(self):
        if self._root is not None:
            yield from _items(self._root)

    def __repr__(self) -> str:
        inner = ", ".join(f"_{k} -> {v!r}" for k, v in sorted(self.items()))
        return f"Substitution({inner})"


EMPTY_SUBST = Substitution()


class Env:
    """Fresh-variable counter plus the run anchor."""

    __slots__ = ("next_index", "anchor")

    def __init__(self, next_index: int, anchor: Anchor):
        self.next_index = next_index
        self.anchor = anchor


class State:
    __slots__ = ("env", "subst", "constraints")

    def __init__(self, env: Env, subst: Substitution, constraints: ConstraintStore):
        self.env = env
        self.subst = subst
        self.constraints = constraints

    def __repr__(self) -> str:
        return (
            f"State(next={self.env.next_index}, subst={self.subst!r}, "
            f"constraints={self.constraints!r})"
        )


def initial_state() -> State:
    """Empty substitution and store, fresh anchor, counter at zero."""
    return State(Env(0, Anchor()), EMPTY_SUBST, ())


def fresh_var(st: State) -> Tuple[Var, State]:
    """Allocate the next variable of the run; returns it with the bumped state."""
    env = st.env
    v = Var(VarId(env.next_index, env.anchor))
    return v, State(Env(env.next_index + 1, env.anchor), st.subst, st.constraints)


def extend(s: Substitution, vid: VarId, t: Term) -> Substitution:
    """Add the binding vid -> t.

    Preconditions (programming errors if violated; unify is the sanctioned
    caller): vid is unbound in ``s`` and the binding is occurs-checked.
    """
    assert s.lookup(vid.index) is None, f"variable _{vid.index} already bound"
    return s.bind(vid, t)


def unify(t1: Term, t2: Term, s: Substitution) -> Optional[Tuple[Substitution, Prefix]]:
    """Unify two terms under ``s``; None on failure.

    Both terms are walked; equal unbound variables succeed without change; a
    variable against a term binds (left variable first when both sides are
    variables) after the occurs check; composites with matching tag and
    arity unify children left to right, threading the substitution. The
    returned prefix lists exactly the bindings added by this call, in
    order.
    """
    prefix: Prefix = []
    stack: List[Tuple[Term, Term]] = [(t1, t2)]
    lookup = s.lookup  # rebound after every extension; walk is inlined below
    while stack:
        a, b = stack.pop()
        while type(a) is Var:
            nxt = lookup(a.vid.index)
            if nxt is None:
                break
            a = nxt
        while type(b) is Var:
            nxt = lookup(b.vid.index)
            if nxt is None:
                break
            b = nxt
        ta = type(a)
        tb = type(b)
        if ta is Var:
            if tb is Var and a.vid == b.vid:
                continue
            if occurs(s, a.vid, b):
                return None
            s = extend(s, a.vid, b)
            lookup = s.lookup
            prefix.append((a.vid, b))
        elif tb is Var:
            if occurs(s, b.vid, a):
                return None
            s = extend(s, b.vid, a)
            lookup = s.lookup
            prefix.append((b.vid, a))
        elif ta is Atom and tb is Atom:
            if a != b:
                return None
        elif ta is Composite and tb is Composite:
            if a.tag != b.tag or len(a.args) != len(b.args):
                return None
            # push reversed so the leftmost child pair is processed first
            pairs = list(zip(a.args, b.args))
            while pairs:
                stack.append(pairs.pop())
        else:
            return None
    return s, prefix
