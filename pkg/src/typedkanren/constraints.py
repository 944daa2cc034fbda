"""Disequality constraints, maintained as stored unification prefixes.

Posting ``t1 =/= t2`` tentatively unifies the two terms: failure means the
constraint can never be violated (nothing is stored); success with an empty
prefix means the terms are already equal (the goal fails); success with a
nonempty prefix stores that prefix, read as "these bindings must not all
hold at once". After every real unification the store is re-checked the same
way, dropping constraints that became unviolatable, failing the state when
one is violated, and narrowing the rest to their surviving pairs.
"""

from typing import List, Optional

from .state import Constraint, State, unify
from .term import Term, Var, VarId, walk_deep

_DROP = object()  # re-check verdict: constraint can no longer be violated


def add_diseq(t1: Term, t2: Term, st: State) -> Optional[State]:
    """State with the disequality recorded, or None when t1 and t2 are already equal."""
    r = unify(t1, t2, st.subst)
    if r is None:
        return st
    _, prefix = r  # tentative substitution is discarded
    if not prefix:
        return None
    return State(st.env, st.subst, st.constraints + (tuple(prefix),))


def _recheck(c: Constraint, st: State):
    """Re-unify one stored prefix against the current substitution.

    Returns _DROP when unification fails, the (possibly narrowed) new
    constraint on success, or () when the constraint is violated outright.
    """
    s = st.subst
    out: List = []
    for vid, t in c:
        r = unify(Var(vid), t, s)
        if r is None:
            return _DROP
        s, p = r
        out.extend(p)
    return tuple(out)


def verify_store(st: State) -> Optional[State]:
    """Re-check every stored constraint after a substitution extension."""
    changed = False
    kept: List[Constraint] = []
    for c in st.constraints:
        r = _recheck(c, st)
        if r is _DROP:
            changed = True
            continue
        if not r:
            return None
        kept.append(r)
        if r != c:
            changed = True
    if not changed:
        return st
    return State(st.env, st.subst, tuple(kept))


def constraints_for(st: State, vid: VarId) -> List[Term]:
    """Forbidden terms for a free variable, for reification.

    Only constraints that have narrowed to a single binding on ``vid`` are
    attributed; multi-binding (disjunctive) constraints belong to no single
    variable. Results are deep-walked in the current substitution.
    """
    out: List[Term] = []
    for c in st.constraints:
        if len(c) == 1 and c[0][0] == vid:
            out.append(walk_deep(st.subst, c[0][1]))
    return out
