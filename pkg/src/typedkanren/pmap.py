"""Persistent integer-keyed map with structural sharing.

Bit-partitioned trie with 32-way fanout on 5-bit key chunks, least
significant chunk first. Insertion path-copies at most one small tuple per
level, so the sibling branches of a backtracking search share all unchanged
structure. Variable indices are dense small integers, which keeps the trie
one or two levels deep in practice.

Values must not be None (None marks an empty slot).
"""

from typing import Any, Iterator, Optional, Tuple

_BITS = 5
_MASK = 31

# A node is a 32-tuple. Each slot holds None, a (key, value) 2-tuple, or a
# child node; slot kinds are told apart by tuple length.
_EMPTY_NODE: Tuple[Any, ...] = (None,) * 32


def _assoc(node: Tuple[Any, ...], shift: int, key: int, value: Any) -> Tuple[Any, ...]:
    i = (key >> shift) & _MASK
    e = node[i]
    if e is None:
        entry: Any = (key, value)
    elif len(e) == 2:
        if e[0] == key:
            entry = (key, value)
        else:
            child = _assoc(_EMPTY_NODE, shift + _BITS, e[0], e[1])
            entry = _assoc(child, shift + _BITS, key, value)
    else:
        entry = _assoc(e, shift + _BITS, key, value)
    return node[:i] + (entry,) + node[i + 1:]


def _items(node: Tuple[Any, ...]) -> Iterator[Tuple[int, Any]]:
    for e in node:
        if e is None:
            continue
        if len(e) == 2:
            yield e
        else:
            yield from _items(e)


class IntMap:
    """Immutable map from nonnegative int to value; ``set`` returns a new map."""

    __slots__ = ("_root", "size")

    def __init__(self, _root: Optional[Tuple[Any, ...]] = None, _size: int = 0):
        self._root = _root
        self.size = _size

    def get(self, key: int) -> Any:
        node = self._root
        if node is None:
            return None
        shift = 0
        while True:
            e = node[(key >> shift) & _MASK]
            if e is None:
                return None
            if len(e) == 2:
                return e[1] if e[0] == key else None
            node = e
            shift += _BITS

    def set(self, key: int, value: Any) -> "IntMap":
        if value is None:
            raise ValueError("IntMap cannot store None")
        root = self._root if self._root is not None else _EMPTY_NODE
        grew = self.get(key) is None
        return IntMap(_assoc(root, 0, key, value), self.size + (1 if grew else 0))

    def items(self) -> Iterator[Tuple[int, Any]]:
        if self._root is not None:
            yield from _items(self._root)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, key: int) -> bool:
        return self.get(key) is not None

    def __repr__(self) -> str:
        return "IntMap({%s})" % ", ".join(f"{k}: {v!r}" for k, v in sorted(self.items()))


EMPTY_MAP = IntMap()
