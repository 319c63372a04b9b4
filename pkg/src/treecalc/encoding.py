"""
Caret-type encoding of binary trees

Each caret gets one letter, in infix order:

    r   the root
    e   any other caret on the left or right spine (exterior)
    (   interior, first column, has a right child
    a   interior, first column, no right child
    b   interior, second column, has a right child
    )   interior, second column, no right child

An interior caret is in the first column when its parent is exterior or it is
a left child, and in the second column when it is the right child of an
interior caret.
"""
from enum import Enum
from typing import Optional

from .trees import BinTree
from ..utils.exceptions import DecodeError, ParseError

ROOT = "r"
EXTERIOR = "e"
CARET_LETTERS = "re()ab"
INTERIOR_LETTERS = "()ab"
EXTERIOR_LETTERS = "er"

class CaretType(str, Enum):
    ROOT = "r"
    EXTERIOR = "e"
    OPEN = "("
    CLOSE = ")"
    LEFT_LEAF = "a"
    RIGHT_BRANCH = "b"

    @property
    def is_interior(self) -> bool:
        return self.value in INTERIOR_LETTERS

def _interior_letter(has_right: bool, first_column: bool) -> str:
    if first_column:
        return "(" if has_right else "a"
    return "b" if has_right else ")"

def encode_interior(node: Optional[BinTree], first_column: bool = True) -> str:
    if node is None:
        return ""
    return (
        encode_interior(node.left, True)
        + _interior_letter(node.right is not None, first_column)
        + encode_interior(node.right, False)
    )

def encode_tree(tree: BinTree) -> str:
    letters = []
    spine = []
    node = tree.left
    while node is not None:
        spine.append(node)
        node = node.left
    for caret in reversed(spine):
        letters.append(EXTERIOR)
        letters.append(encode_interior(caret.right))
    letters.append(ROOT)
    node = tree.right
    while node is not None:
        letters.append(encode_interior(node.left))
        letters.append(EXTERIOR)
        node = node.right
    return "".join(letters)

def _parse_block(word: str, pos: int, offset: int):
    node = None
    while pos < len(word) and word[pos] in "(a":
        if word[pos] == "a":
            node = BinTree(node, None)
            pos += 1
        else:
            right, pos = _parse_bracket(word, pos + 1, offset)
            node = BinTree(node, right)
    return node, pos

def _parse_bracket(word: str, pos: int, offset: int):
    lefts = []
    while True:
        left, pos = _parse_block(word, pos, offset)
        if pos >= len(word):
            raise DecodeError("interior block ends inside an open bracket", "interior", offset + pos)
        lefts.append(left)
        pos += 1
        if word[pos - 1] == ")":
            break
    node = None
    for left in reversed(lefts):
        node = BinTree(left, node)
    return node, pos

def decode_interior(word: str, offset: int = 0) -> Optional[BinTree]:
    """Interior subtree for a word of the interior language; ``offset`` shifts reported positions."""
    for position, letter in enumerate(word):
        if letter not in INTERIOR_LETTERS:
            raise DecodeError(f"letter {letter!r} is not an interior caret type", "interior", offset + position)
    node, pos = _parse_block(word, 0, offset)
    if pos != len(word):
        raise DecodeError(f"{word[pos]!r} at bracket depth zero", "interior", offset + pos)
    return node

def tree_word_blocks(word: str) -> list:
    """Split a caret word into (exterior letter, position, following interior block).

    Raises DecodeError naming the first of the four tree-word conditions that fails.
    """
    for position, letter in enumerate(word):
        if letter not in CARET_LETTERS:
            raise DecodeError(f"letter {letter!r} is not a caret type", "alphabet", position)
    if not word or word[0] not in EXTERIOR_LETTERS:
        raise DecodeError("tree word must start with e or r", "starts-exterior", 0)
    if word[-1] not in EXTERIOR_LETTERS:
        raise DecodeError("tree word must end with e or r", "ends-exterior", len(word) - 1)
    roots = [i for i, letter in enumerate(word) if letter == ROOT]
    if len(roots) != 1:
        position = roots[1] if len(roots) > 1 else None
        raise DecodeError(f"tree word must contain exactly one r, found {len(roots)}", "one-root", position)
    exteriors = [i for i, letter in enumerate(word) if letter in EXTERIOR_LETTERS]
    blocks = []
    for index, position in enumerate(exteriors):
        end = exteriors[index + 1] if index + 1 < len(exteriors) else len(word)
        blocks.append((word[position], position, word[position + 1:end]))
    return blocks

def decode_tree(word: str) -> BinTree:
    blocks = tree_word_blocks(word)
    interiors = [decode_interior(block, position + 1) for _, position, block in blocks]
    root_index = next(i for i, (letter, _, _) in enumerate(blocks) if letter == ROOT)
    # left spine, deepest first; each caret owns the block after it
    left = None
    for index in range(root_index):
        left = BinTree(left, interiors[index])
    # right spine; each caret owns the block before it
    right = None
    for index in range(len(blocks) - 1, root_index, -1):
        right = BinTree(interiors[index - 1], right)
    return BinTree(left, right)

MURRAY = {"(": "nN", ")": "iI", "a": "nI", "b": "iN"}
_FROM_MURRAY = {pair: letter for letter, pair in MURRAY.items()}

def to_murray(word: str) -> str:
    """Leaf-label form: each interior letter becomes two labels."""
    try:
        return "".join(MURRAY[letter] for letter in word)
    except KeyError as e:
        raise ParseError(f"{e.args[0]!r} is not an interior caret type", word.index(e.args[0])) from e

def from_murray(labels: str) -> str:
    if len(labels) % 2:
        raise ParseError("leaf-label word has odd length", len(labels))
    letters = []
    for position in range(0, len(labels), 2):
        pair = labels[position:position + 2]
        if pair not in _FROM_MURRAY:
            raise ParseError(f"{pair!r} does not translate to a caret type", position)
        letters.append(_FROM_MURRAY[pair])
    return "".join(letters)

class Placement(str, Enum):
    """Where an interior caret sits relative to the caret just before it."""
    PARENT = "parent"
    ANCESTOR = "higher ancestor"
    RIGHT_CHILD = "right child"
    RIGHT_SUBTREE = "leftmost caret of right subtree"

def placement_chart() -> dict:
    """All 16 ordered pairs of interior letters and the placement of the second caret."""
    chart = {}
    for first in INTERIOR_LETTERS:
        for second in INTERIOR_LETTERS:
            if first == "a":
                chart[(first, second)] = Placement.PARENT
            elif first == ")":
                chart[(first, second)] = Placement.ANCESTOR
            elif second in "b)":
                chart[(first, second)] = Placement.RIGHT_CHILD
            else:
                chart[(first, second)] = Placement.RIGHT_SUBTREE
    return chart

def placement_of(node: BinTree, index: int) -> Placement:
    """Placement of caret ``index + 1`` relative to caret ``index`` (1-based infix numbers)."""
    parent = []

    def visit(caret):
        if caret is None:
            return None
        left = visit(caret.left)
        me = len(parent)
        parent.append(None)
        right = visit(caret.right)
        if left is not None:
            parent[left] = (me, "left")
        if right is not None:
            parent[right] = (me, "right")
        return me

    visit(node)
    if not 1 <= index < len(parent):
        raise ParseError(f"no caret follows caret {index}", index)
    first, second = index - 1, index
    up = parent[second]
    if up == (first, "right"):
        return Placement.RIGHT_CHILD
    if parent[first] == (second, "left"):
        return Placement.PARENT
    while up is not None:
        if up[0] == first:
            return Placement.RIGHT_SUBTREE
        up = parent[up[0]]
    return Placement.ANCESTOR
