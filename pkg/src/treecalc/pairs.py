"""
Tree pair diagrams: reduction, multiplication and Cayley-graph utilities
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .encoding import CARET_LETTERS, decode_tree, encode_tree
from .trees import (
    BinTree,
    enumerate_trees,
    exposed_indices,
    graft,
    hanging,
    remove_caret,
    union,
)
from ..automata.alphabet import ConvWord, convolve
from ..utils.config import MAX_CARETS, MAX_RADIUS, PAD
from ..utils.exceptions import DecodeError, ParseError, ResourceLimitError, TreeError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

@dataclass(frozen=True)
class TreePair:
    """A diagram (domain, range) of two trees with the same number of carets."""
    domain: BinTree
    range: BinTree

    def __post_init__(self):
        if self.domain.size != self.range.size:
            raise TreeError(f"caret counts differ: {self.domain.size} and {self.range.size}")

    @property
    def size(self) -> int:
        return self.domain.size

    def words(self) -> tuple:
        return encode_tree(self.domain), encode_tree(self.range)

    def text(self) -> str:
        top, bottom = self.words()
        return f"{top},{bottom}"

    def key(self) -> str:
        return self.text()

    def to_json(self) -> dict:
        return {"domain": self.domain.to_json(), "range": self.range.to_json()}

    @classmethod
    def from_json(cls, data) -> "TreePair":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as e:
                raise ParseError(f"invalid JSON: {e.msg}", e.pos) from e
        if not isinstance(data, dict) or set(data) != {"domain", "range"}:
            raise ParseError("expected an object with 'domain' and 'range'", field="pair")
        domain = BinTree.from_json(data["domain"], "domain")
        range_tree = BinTree.from_json(data["range"], "range")
        if domain.size != range_tree.size:
            raise ParseError(f"caret counts differ: {domain.size} and {range_tree.size}", field="pair")
        return cls(domain, range_tree)

    def __str__(self):
        return self.text()

def identity() -> TreePair:
    return TreePair(BinTree(), BinTree())

def inverse(pair: TreePair) -> TreePair:
    return TreePair(pair.range, pair.domain)

def is_reduced(pair: TreePair) -> bool:
    if pair.size == 1:
        return True
    return not (exposed_indices(pair.domain) & exposed_indices(pair.range))

def reduce(pair: TreePair) -> TreePair:
    """Remove caret pairs exposed in both trees until none is left."""
    domain, range_tree = pair.domain, pair.range
    while domain.size > 1:
        common = exposed_indices(domain) & exposed_indices(range_tree)
        if not common:
            break
        index = min(common)
        domain, range_tree = remove_caret(domain, index), remove_caret(range_tree, index)
    return TreePair(domain, range_tree)

def common_expand(pair: TreePair, target: BinTree) -> TreePair:
    """Equivalent pair whose range is ``target``; carets hung on range leaf l go to domain leaf l."""
    return TreePair(graft(pair.domain, hanging(target, pair.range)), target)

def expand_domain(pair: TreePair, target: BinTree) -> TreePair:
    """Equivalent pair whose domain is ``target``."""
    return TreePair(target, graft(pair.range, hanging(target, pair.domain)))

def multiply(a: TreePair, b: TreePair) -> TreePair:
    """Reduced diagram of a·b: b's diagram on the left, a's on the right."""
    middle = union(b.range, a.domain)
    left = common_expand(b, middle)
    right = expand_domain(a, middle)
    return reduce(TreePair(left.domain, right.range))

def encode_pair(pair: TreePair) -> ConvWord:
    top, bottom = pair.words()
    return convolve([top, bottom])

def parse_pair_text(text: str) -> tuple:
    """Split "TOP,BOTTOM" into two equal-length caret words."""
    if not isinstance(text, str):
        raise ParseError("pair text must be a string")
    if text.count(",") != 1:
        position = None if "," not in text else text.index(",", text.index(",") + 1)
        raise ParseError("pair text must be TOP,BOTTOM with exactly one comma", position)
    top, bottom = text.split(",")
    for position, letter in enumerate(text):
        if letter != "," and letter not in CARET_LETTERS:
            raise ParseError(f"letter {letter!r} is not a caret type", position)
    if not top or not bottom:
        raise ParseError("both words must be non-empty", len(top))
    if len(top) != len(bottom):
        raise ParseError(f"word lengths differ: {len(top)} and {len(bottom)}", min(len(top), len(bottom)))
    return top, bottom

def pair_to_conv(text: str) -> ConvWord:
    return convolve(list(parse_pair_text(text)))

def decode_pair(source: Union[ConvWord, str, Sequence[str]]) -> TreePair:
    """Diagram for a convolution, a "TOP,BOTTOM" string or a (top, bottom) pair of words."""
    if isinstance(source, ConvWord):
        if source.tracks != 2:
            raise DecodeError(f"expected 2 tracks, got {source.tracks}", "tracks")
        for position, column in enumerate(source.columns):
            if PAD in column:
                raise DecodeError("padding inside a pair convolution", "no-pad", position)
        top, bottom = source.track(0), source.track(1)
        top, bottom = "".join(top), "".join(bottom)
    elif isinstance(source, str):
        top, bottom = parse_pair_text(source)
    else:
        top, bottom = source
        if len(top) != len(bottom):
            raise DecodeError("word lengths differ", "equal-length", min(len(top), len(bottom)))
    return TreePair(decode_tree(top), decode_tree(bottom))

GENERATOR_NAMES = ("x0", "x1", "x0inv", "x1inv")
_ALIASES = {"x0^-1": "x0inv", "x1^-1": "x1inv", "X0": "x0inv", "X1": "x1inv"}
_GENERATOR_WORDS = {"x0": ("re", "er"), "x1": ("ree", "rae")}

def canonical_generator(name: str) -> str:
    canonical = _ALIASES.get(name, name)
    if canonical not in GENERATOR_NAMES:
        raise ParseError(f"unknown generator {name!r}; expected one of {', '.join(GENERATOR_NAMES)}",
                         field="generator")
    return canonical

def generator(name: str) -> TreePair:
    canonical = canonical_generator(name)
    base = decode_pair(_GENERATOR_WORDS[canonical[:2]])
    return inverse(base) if canonical.endswith("inv") else base

def x_n(n: int) -> TreePair:
    """Generator of the infinite presentation: x_{k+1} = x0^-k x1 x0^k."""
    if n < 0:
        raise ParseError("generator index must be non-negative", field="n")
    if n == 0:
        return generator("x0")
    k = n - 1
    return evaluate(["x0inv"] * k + ["x1"] + ["x0"] * k)

def evaluate(word: Iterable[Union[str, TreePair]], start: Optional[TreePair] = None) -> TreePair:
    """Product of a word of generators (names or pairs), left to right."""
    result = start if start is not None else identity()
    for letter in word:
        result = multiply(result, generator(letter) if isinstance(letter, str) else letter)
    return result

def commutator(a: TreePair, b: TreePair) -> TreePair:
    return evaluate([inverse(a), inverse(b), a, b])

def parse_generator_word(text: Union[str, Sequence[str]]) -> list:
    tokens = text.replace(",", " ").split() if isinstance(text, str) else list(text)
    for token in tokens:
        generator(token)
    return tokens

def enumerate_reduced_pairs(n: int) -> list:
    if n > MAX_CARETS:
        raise ResourceLimitError("carets", n, MAX_CARETS)
    trees = enumerate_trees(n)
    return [
        TreePair(domain, range_tree)
        for domain in trees
        for range_tree in trees
        if is_reduced(TreePair(domain, range_tree))
    ]

@dataclass(frozen=True)
class BallEntry:
    pair: TreePair
    length: int

def ball(radius: int) -> dict:
    """Reduced elements within word length ``radius``, keyed by their pair text in BFS order."""
    if radius < 0:
        raise ParseError("radius must be non-negative", field="radius")
    if radius > MAX_RADIUS:
        raise ResourceLimitError("radius", radius, MAX_RADIUS)
    generators = [generator(name) for name in GENERATOR_NAMES]
    start = identity()
    found = {start.key(): BallEntry(start, 0)}
    queue = deque([start])
    while queue:
        element = queue.popleft()
        length = found[element.key()].length
        if length == radius:
            continue
        for step in generators:
            neighbour = multiply(element, step)
            key = neighbour.key()
            if key not in found:
                found[key] = BallEntry(neighbour, length + 1)
                queue.append(neighbour)
    logger.info(f"Ball of radius {radius}: {len(found)} elements")
    return found
