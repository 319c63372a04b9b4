"""
Finite rooted binary trees of carets
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence

from ..utils.config import MAX_CARETS
from ..utils.exceptions import ExpansionError, ParseError, ResourceLimitError, TreeError

@dataclass(frozen=True)
class BinTree:
    """A caret with optional left and right child carets.

    A tree is its root caret; a missing child is a leaf. Carets are numbered
    1..n in infix order.
    """
    left: Optional["BinTree"] = None
    right: Optional["BinTree"] = None

    @cached_property
    def size(self) -> int:
        return 1 + size_of(self.left) + size_of(self.right)

    @property
    def is_exposed(self) -> bool:
        return self.left is None and self.right is None

    def infix(self) -> list:
        return infix_order(self)

    def to_json(self) -> dict:
        return {
            "left": self.left.to_json() if self.left is not None else None,
            "right": self.right.to_json() if self.right is not None else None,
        }

    @classmethod
    def from_json(cls, data, path: str = "tree") -> "BinTree":
        if not isinstance(data, dict) or set(data) - {"left", "right"}:
            raise ParseError(f"{path}: expected an object with 'left' and 'right'", field=path)
        children = []
        for side in ("left", "right"):
            child = data.get(side)
            children.append(None if child is None else cls.from_json(child, f"{path}.{side}"))
        return cls(*children)

def size_of(tree: Optional[BinTree]) -> int:
    return 0 if tree is None else tree.size

def infix_order(tree: Optional[BinTree]) -> list:
    """Carets in infix order (left subtree, caret, right subtree)."""
    result = []

    def visit(node):
        if node is None:
            return
        visit(node.left)
        result.append(node)
        visit(node.right)

    visit(tree)
    return result

def exposed_indices(tree: BinTree) -> set:
    """1-based infix numbers of carets with no children."""
    exposed = set()
    counter = 0

    def visit(node):
        nonlocal counter
        if node is None:
            return
        visit(node.left)
        counter += 1
        if node.is_exposed:
            exposed.add(counter)
        visit(node.right)

    visit(tree)
    return exposed

def remove_caret(tree: BinTree, index: int) -> Optional[BinTree]:
    """Replace the exposed caret numbered ``index`` by a leaf."""
    offset = size_of(tree.left) + 1
    if index < offset:
        return BinTree(remove_caret(tree.left, index), tree.right)
    if index > offset:
        return BinTree(tree.left, remove_caret(tree.right, index - offset))
    if not tree.is_exposed:
        raise TreeError(f"caret {index} is not exposed")
    return None

@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple:
    if n == 0:
        return (None,)
    found = []
    for left_size in range(n):
        for left in _shapes(left_size):
            for right in _shapes(n - 1 - left_size):
                found.append(BinTree(left, right))
    return tuple(found)

def enumerate_trees(n: int) -> tuple:
    """All trees with ``n`` carets (Catalan(n) of them), in a fixed order."""
    if n < 1:
        raise TreeError("a tree has at least one caret")
    if n > MAX_CARETS:
        raise ResourceLimitError("carets", n, MAX_CARETS)
    return _shapes(n)

_EXHAUSTED = object()

def graft(tree: Optional[BinTree], subtrees: Sequence[Optional[BinTree]]) -> Optional[BinTree]:
    """Hang ``subtrees`` on the leaves of ``tree``, left to right."""
    supply: Iterator = iter(subtrees)

    def rebuild(node):
        if node is None:
            subtree = next(supply, _EXHAUSTED)
            if subtree is _EXHAUSTED:
                raise ExpansionError("fewer subtrees than leaves")
            return subtree
        return BinTree(rebuild(node.left), rebuild(node.right))

    result = rebuild(tree)
    if next(supply, _EXHAUSTED) is not _EXHAUSTED:
        raise ExpansionError("more subtrees than leaves")
    return result

def hanging(target: Optional[BinTree], pattern: Optional[BinTree]) -> list:
    """Subtrees of ``target`` at the leaves of ``pattern``, which must sit inside it."""
    if pattern is None:
        return [target]
    if target is None:
        raise ExpansionError("pattern is not a rooted subtree of the target")
    return hanging(target.left, pattern.left) + hanging(target.right, pattern.right)

def union(a: Optional[BinTree], b: Optional[BinTree]) -> Optional[BinTree]:
    """Smallest tree containing both as rooted subtrees."""
    if a is None:
        return b
    if b is None:
        return a
    return BinTree(union(a.left, b.left), union(a.right, b.right))
