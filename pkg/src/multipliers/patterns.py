"""
Shared pieces for multiplier automata: the 4-track alphabet and case templates

A multiplier reads columns (U, V) where U is a column of ν(g), V a column of
ν(h), and either side is the pad letter once its word has ended.
"""
from dataclasses import dataclass
from itertools import product
from typing import Callable, Hashable, Union

from ..automata import Alphabet, ConvWord, Dfa, Nfa, convolve
from ..treecalc.encoding import CARET_LETTERS, EXTERIOR_LETTERS, INTERIOR_LETTERS
from ..treecalc.pairs import TreePair, encode_pair, parse_pair_text
from ..utils.config import PAD

PAIR_ALPHABET = Alphabet(tuple(product(CARET_LETTERS, CARET_LETTERS)), PAD, 2)
MULT_ALPHABET = Alphabet.convolution(PAIR_ALPHABET, PAIR_ALPHABET)

EXT = frozenset(EXTERIOR_LETTERS)
INT = frozenset(INTERIOR_LETTERS)

START = ("A",)
END = ("end",)

def same(column: tuple) -> bool:
    """Both tracks carry the same pair letter."""
    upper, lower = column
    return upper != PAD and upper == lower

def both(column: tuple) -> bool:
    return column[0] != PAD and column[1] != PAD

@dataclass(frozen=True)
class CaseTemplate:
    """One case of a multiplier: a nondeterministic column pattern."""
    name: str
    follow: Callable
    accepting: Callable = lambda state: state == END
    start: Hashable = START

    def nfa(self) -> Nfa:
        return Nfa(MULT_ALPHABET, [self.start], self.follow, self.accepting, self.name)

    def dfa(self) -> Dfa:
        return self.nfa().determinize(self.name)

def union_dfa(templates, name: str) -> Dfa:
    return Nfa.union([template.nfa() for template in templates], name).determinize(name)

def hold(state: tuple, column: tuple, done: Hashable = END) -> list:
    """Delay-by-one copy: the lower track repeats the upper track one column late."""
    upper, lower = column
    if lower != state[1]:
        return []
    return [done] if upper == PAD else [("hold", upper) + state[2:]]

PairLike = Union[TreePair, ConvWord, str]

def as_pair_word(value: PairLike) -> ConvWord:
    if isinstance(value, TreePair):
        return encode_pair(value)
    if isinstance(value, ConvWord):
        return value
    return convolve(list(parse_pair_text(value)))

def multiplier_input(u: PairLike, v: PairLike) -> ConvWord:
    """⊗(u, v) for two pair words; each column is (column of u, column of v)."""
    return convolve([as_pair_word(u).columns, as_pair_word(v).columns])
