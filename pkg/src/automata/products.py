"""
Lazy products of counter automata

Products never enumerate their state space up front: transitions are computed
from the components on first use and memoized per (state, letter).
"""
from __future__ import annotations

from itertools import product
from typing import Callable, Optional, Sequence

from .alphabet import Alphabet
from .counters import CounterOp, Guard, Transition
from .machine import Automaton, State
from ..utils.exceptions import AlphabetMismatchError, AutomatonError

class TrackMachine(Automaton):
    """One track of a convolution: the pad letter ends the track.

    States are (inner state, ended). After the first pad only further pads are
    allowed; pads neither test nor touch counters.
    """

    def __init__(self, inner: Automaton, pad: str):
        super().__init__(inner.alphabet, inner.counters, (inner.start, False), f"track({inner.name})")
        self.inner = inner
        self.pad = pad
        self._pad_guard = Guard.any(inner.counters)
        self._pad_op = CounterOp.nop(inner.counters)

    def transitions(self, state: State, letter) -> tuple:
        inner_state, ended = state
        if letter == self.pad:
            return (Transition(self._pad_guard, (inner_state, True), self._pad_op),)
        if ended:
            return ()
        return tuple(
            Transition(t.guard, (t.target, False), t.op)
            for t in self.inner.transitions(inner_state, letter)
        )

    def is_accepting(self, state: State) -> bool:
        return self.inner.is_accepting(state[0])

    def parts(self) -> tuple:
        return (self.inner,)

class ProductMachine(Automaton):
    """Synchronous product; each component reads its own projection of the letter.

    Counters are the components' counters concatenated in component order, and a
    state is accepting when every component state is.
    """

    def __init__(self, components: Sequence[Automaton], alphabet: Alphabet,
                 project: Callable, admit: Optional[Callable] = None, name: str = ""):
        components = tuple(components)
        if not components:
            raise AutomatonError("product of no automata")
        super().__init__(
            alphabet,
            sum(c.counters for c in components),
            tuple(c.start for c in components),
            name or " x ".join(c.name for c in components),
        )
        self.components = components
        self.project = project
        self.admit = admit
        self._cache = {}

    def transitions(self, state: State, letter) -> tuple:
        key = (state, letter)
        cached = self._cache.get(key)
        if cached is None:
            cached = self._compute(state, letter)
            self._cache[key] = cached
        return cached

    def _compute(self, state: State, letter) -> tuple:
        if self.admit is not None and not self.admit(letter):
            return ()
        options = []
        for component, component_state, component_letter in zip(
            self.components, state, self.project(letter)
        ):
            moves = component.transitions(component_state, component_letter)
            if not moves:
                return ()
            options.append(moves)
        result = []
        for combination in product(*options):
            guard, op = Guard(()), CounterOp(())
            for move in combination:
                guard, op = guard + move.guard, op + move.op
            result.append(Transition(guard, tuple(m.target for m in combination), op))
        return tuple(result)

    def is_accepting(self, state: State) -> bool:
        return all(c.is_accepting(s) for c, s in zip(self.components, state))

    def parts(self) -> tuple:
        return self.components

def _same_letter(count: int) -> Callable:
    return lambda letter: (letter,) * count

def product_counter_dfa(machine: Automaton, dfa: Automaton, name: str = "") -> ProductMachine:
    """Intersection of a counter automaton with a DFA; the counter count is unchanged."""
    if machine.alphabet != dfa.alphabet:
        raise AlphabetMismatchError("product_counter_dfa")
    if dfa.counters:
        raise AutomatonError("product_counter_dfa expects a zero-counter right operand")
    return ProductMachine((machine, dfa), machine.alphabet, _same_letter(2), name=name)

def product_counter_counter(first: Automaton, second: Automaton, name: str = "") -> ProductMachine:
    """Intersection of two counter automata; counters add up."""
    if first.alphabet != second.alphabet:
        raise AlphabetMismatchError("product_counter_counter")
    return ProductMachine((first, second), first.alphabet, _same_letter(2), name=name)

def conv_product(first: Automaton, second: Automaton,
                 tracks: Optional[Sequence[Alphabet]] = None, name: str = "") -> ProductMachine:
    """Accepts ⊗(u, v) with u accepted by ``first`` and v by ``second``.

    ``tracks`` restricts the letters each track may carry; by default a track
    carries its machine's whole alphabet.
    """
    first_track, second_track = tracks if tracks is not None else (first.alphabet, second.alphabet)
    if not first_track.issubset(first.alphabet) or not second_track.issubset(second.alphabet):
        raise AlphabetMismatchError("conv_product")
    alphabet = Alphabet.convolution(first_track, second_track)
    pad = alphabet.pad
    components = (TrackMachine(first, pad), TrackMachine(second, pad))
    return ProductMachine(
        components,
        alphabet,
        project=lambda column: column,
        admit=lambda column: not alphabet.is_all_pad(column),
        name=name or f"conv({first.name}, {second.name})",
    )

class SwappedMachine(Automaton):
    """Reads 2-track columns with the tracks exchanged."""

    def __init__(self, inner: Automaton, name: str = ""):
        if inner.alphabet.tracks != 2:
            raise AutomatonError("only 2-track machines can be swapped")
        swapped = tuple((b, a) for a, b in inner.alphabet.symbols)
        alphabet = inner.alphabet
        if set(swapped) != set(inner.alphabet.symbols):
            alphabet = Alphabet(swapped, inner.alphabet.pad, 2)
        super().__init__(alphabet, inner.counters, inner.start, name or f"swap({inner.name})")
        self.inner = inner

    def transitions(self, state: State, letter) -> tuple:
        return self.inner.transitions(state, (letter[1], letter[0]))

    def is_accepting(self, state: State) -> bool:
        return self.inner.is_accepting(state)

    def parts(self) -> tuple:
        return (self.inner,)
