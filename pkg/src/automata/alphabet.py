"""
Alphabets and convolutions of words
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Hashable, Iterator, Sequence

from ..utils.config import PAD
from ..utils.exceptions import AlphabetError

Letter = Hashable

@dataclass(frozen=True)
class Alphabet:
    """Ordered finite set of letters plus a reserved padding letter.

    Column alphabets (``tracks > 1``) hold tuples, one entry per track.
    """
    symbols: tuple
    pad: str = PAD
    tracks: int = 1

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise AlphabetError("alphabet symbols must be distinct")
        if self.pad in self.symbols:
            raise AlphabetError("pad letter is reserved", letter=self.pad)

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.symbols)

    def __contains__(self, letter: Letter) -> bool:
        return letter in self._members

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def padded(self) -> tuple:
        return self.symbols + (self.pad,)

    def issubset(self, other: "Alphabet") -> bool:
        return self._members <= other._members

    @classmethod
    def of(cls, letters: Sequence[Letter], pad: str = PAD) -> "Alphabet":
        return cls(tuple(letters), pad)

    @classmethod
    def convolution(cls, *tracks: "Alphabet") -> "Alphabet":
        """Columns over the padded track alphabets.

        The all-pad column is kept as a letter so that machines can reject it
        instead of raising.
        """
        if not tracks:
            raise AlphabetError("a convolution needs at least one track")
        pad = tracks[0].pad
        return cls(tuple(product(*(t.padded for t in tracks))), pad, len(tracks))

    def is_all_pad(self, column: tuple) -> bool:
        return all(entry == self.pad for entry in column)

@dataclass(frozen=True)
class ConvWord:
    """Convolution of ``tracks`` words: columns of equal-role letters, shorter words padded."""
    tracks: int
    columns: tuple = field(default_factory=tuple)
    pad: str = PAD

    def __post_init__(self):
        if self.tracks < 1:
            raise AlphabetError("a convolution has at least one track")
        ended = [False] * self.tracks
        for position, column in enumerate(self.columns):
            if len(column) != self.tracks:
                raise AlphabetError("column width does not match track count", column, position)
            if all(entry == self.pad for entry in column):
                raise AlphabetError("all-pad column", column, position)
            for track, entry in enumerate(column):
                if entry == self.pad:
                    ended[track] = True
                elif ended[track]:
                    raise AlphabetError(f"track {track} resumes after padding", column, position)

    def __len__(self) -> int:
        return len(self.columns)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.columns)

    def track(self, index: int) -> tuple:
        return tuple(column[index] for column in self.columns if column[index] != self.pad)

    def deconvolve(self) -> list:
        return deconvolve(self)

    def text(self) -> str:
        """"TOP,BOTTOM" form for character tracks."""
        tracks = [_join(self.track(i)) for i in range(self.tracks)]
        for index, track in enumerate(tracks):
            if not isinstance(track, str):
                raise AlphabetError(f"track {index} does not hold single characters; no text form", track[0])
        return ",".join(tracks)

def _join(letters: tuple):
    if all(isinstance(letter, str) and len(letter) == 1 for letter in letters):
        return "".join(letters)
    return letters

def convolve(words: Sequence[Sequence[Letter]], pad: str = PAD) -> ConvWord:
    if not words:
        raise AlphabetError("nothing to convolve")
    for index, word in enumerate(words):
        for position, letter in enumerate(word):
            if letter == pad:
                raise AlphabetError(f"word {index} contains the pad letter", letter, position)
    length = max(len(word) for word in words)
    columns = tuple(
        tuple(word[i] if i < len(word) else pad for word in words)
        for i in range(length)
    )
    return ConvWord(len(words), columns, pad)

def deconvolve(conv: ConvWord) -> list:
    return [_join(conv.track(i)) for i in range(conv.tracks)]
