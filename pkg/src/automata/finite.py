"""
Finite automata: DFAs, NFAs and their closure operations

Every derived machine is produced by crawling the reachable part of a
successor function, so only reachable states are ever materialized.
"""
from __future__ import annotations

from collections import deque
from typing import Callable, Hashable, Iterable, Optional, Sequence

from .alphabet import Alphabet
from .counters import CounterOp, Guard, Transition
from .machine import Automaton, State
from ..utils.exceptions import AlphabetMismatchError, AutomatonError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

_NO_GUARD = Guard(())
_NO_OP = CounterOp(())
_SINK = ("sink",)

class Dfa(Automaton):
    """Zero-counter deterministic automaton.

    ``table`` maps a state to its row of ``letter -> state``; a missing entry
    means the run dies.
    """

    def __init__(self, alphabet: Alphabet, start: State, accepting: Iterable[State],
                 table: dict, name: str = ""):
        super().__init__(alphabet, 0, start, name)
        self.accepting = frozenset(accepting)
        self.table = table

    @property
    def states(self) -> frozenset:
        found = {self.start} | set(self.table) | set(self.accepting)
        for row in self.table.values():
            found.update(row.values())
        return frozenset(found)

    def next_state(self, state: State, letter) -> Optional[State]:
        row = self.table.get(state)
        return None if row is None else row.get(letter)

    def transitions(self, state: State, letter) -> tuple:
        target = self.next_state(state, letter)
        if target is None:
            return ()
        return (Transition(_NO_GUARD, target, _NO_OP),)

    def is_accepting(self, state: State) -> bool:
        return state in self.accepting

    def is_complete(self) -> bool:
        return all(
            len(self.table.get(state, {})) == len(self.alphabet) for state in self.states
        )

    @classmethod
    def universal(cls, alphabet: Alphabet, name: str = "universal") -> "Dfa":
        return cls(alphabet, 0, {0}, {0: {letter: 0 for letter in alphabet}}, name)

    @classmethod
    def empty(cls, alphabet: Alphabet, name: str = "empty") -> "Dfa":
        return cls(alphabet, 0, (), {}, name)

    @classmethod
    def literal(cls, word: Sequence, alphabet: Alphabet, name: str = "") -> "Dfa":
        table = {i: {letter: i + 1} for i, letter in enumerate(word)}
        return cls(alphabet, 0, {len(word)}, table, name or f"literal({len(word)})")

def crawl(alphabet: Alphabet, initial: Hashable, follow: Callable, final: Callable,
          name: str = "") -> Dfa:
    """Breadth-first exploration of ``follow`` from ``initial``.

    ``follow(state, letter)`` returns the successor or None for a dead run.
    States of the result are consecutive integers in discovery order.
    """
    index = {initial: 0}
    order = [initial]
    table = {}
    accepting = set()
    queue = deque([initial])
    while queue:
        state = queue.popleft()
        i = index[state]
        if final(state):
            accepting.add(i)
        row = {}
        for letter in alphabet:
            successor = follow(state, letter)
            if successor is None:
                continue
            if successor not in index:
                index[successor] = len(order)
                order.append(successor)
                queue.append(successor)
            row[letter] = index[successor]
        table[i] = row
    logger.debug(f"Crawled {name or 'dfa'}: {len(order)} states")
    return Dfa(alphabet, 0, accepting, table, name)

def _same_alphabet(operation: str, *machines: Automaton) -> Alphabet:
    first = machines[0].alphabet
    for machine in machines[1:]:
        if machine.alphabet != first:
            raise AlphabetMismatchError(operation)
    return first

def complement(dfa: Dfa, name: str = "") -> Dfa:
    def follow(state, letter):
        if state == _SINK:
            return _SINK
        target = dfa.next_state(state, letter)
        return _SINK if target is None else target

    def final(state):
        return state == _SINK or not dfa.is_accepting(state)

    return crawl(dfa.alphabet, dfa.start, follow, final, name or f"not({dfa.name})")

def intersect(a: Dfa, b: Dfa, name: str = "") -> Dfa:
    alphabet = _same_alphabet("intersect", a, b)

    def follow(state, letter):
        x, y = a.next_state(state[0], letter), b.next_state(state[1], letter)
        if x is None or y is None:
            return None
        return x, y

    def final(state):
        return a.is_accepting(state[0]) and b.is_accepting(state[1])

    return crawl(alphabet, (a.start, b.start), follow, final, name or f"({a.name} & {b.name})")

def union(a: Dfa, b: Dfa, name: str = "") -> Dfa:
    alphabet = _same_alphabet("union", a, b)

    def follow(state, letter):
        x = a.next_state(state[0], letter) if state[0] is not None else None
        y = b.next_state(state[1], letter) if state[1] is not None else None
        if x is None and y is None:
            return None
        return x, y

    def final(state):
        return (state[0] is not None and a.is_accepting(state[0])) or \
               (state[1] is not None and b.is_accepting(state[1]))

    return crawl(alphabet, (a.start, b.start), follow, final, name or f"({a.name} | {b.name})")

def concat(a: Dfa, b: Dfa, name: str = "") -> Dfa:
    alphabet = _same_alphabet("concat", a, b)

    def seeded(left, rights):
        if left is not None and a.is_accepting(left):
            return rights | {b.start}
        return rights

    def follow(state, letter):
        left, rights = state
        next_left = a.next_state(left, letter) if left is not None else None
        next_rights = frozenset(
            target for target in (b.next_state(r, letter) for r in rights) if target is not None
        )
        next_rights = seeded(next_left, next_rights)
        if next_left is None and not next_rights:
            return None
        return next_left, next_rights

    def final(state):
        return any(b.is_accepting(r) for r in state[1])

    initial = (a.start, seeded(a.start, frozenset()))
    return crawl(alphabet, initial, follow, final, name or f"({a.name} . {b.name})")

class Nfa:
    """Nondeterministic automaton given by a successor relation.

    ``follow(state, letter)`` yields every successor; states are discovered lazily.
    """

    def __init__(self, alphabet: Alphabet, starts: Iterable[Hashable], follow: Callable,
                 final: Callable, name: str = ""):
        self.alphabet = alphabet
        self.starts = frozenset(starts)
        self.follow = follow
        self.final = final
        self.name = name or "nfa"

    def _advance(self, states: frozenset, letter) -> frozenset:
        return frozenset(target for state in states for target in self.follow(state, letter))

    def accepts(self, word: Iterable) -> bool:
        current = self.starts
        for letter in word:
            current = self._advance(current, letter)
            if not current:
                return False
        return any(self.final(state) for state in current)

    def determinize(self, name: str = "") -> Dfa:
        def follow(states, letter):
            reached = self._advance(states, letter)
            return reached or None

        def final(states):
            return any(self.final(state) for state in states)

        return crawl(self.alphabet, self.starts, follow, final, name or self.name)

    @classmethod
    def union(cls, nfas: Sequence["Nfa"], name: str = "") -> "Nfa":
        if not nfas:
            raise AutomatonError("union of no automata")
        alphabet = nfas[0].alphabet
        for nfa in nfas[1:]:
            if nfa.alphabet != alphabet:
                raise AlphabetMismatchError("union")

        def follow(tagged, letter):
            tag, state = tagged
            return [(tag, target) for target in nfas[tag].follow(state, letter)]

        def final(tagged):
            return nfas[tagged[0]].final(tagged[1])

        starts = [(tag, state) for tag, nfa in enumerate(nfas) for state in nfa.starts]
        return cls(alphabet, starts, follow, final, name or " | ".join(n.name for n in nfas))

def determinize(nfa: Nfa, name: str = "") -> Dfa:
    return nfa.determinize(name)

def shifted_copy_dfa(prefix: Sequence, alphabet: Alphabet, reverse: bool = False) -> Dfa:
    """DFA over 2-track columns accepting ⊗(w, prefix·w) for every word w.

    With ``reverse`` the tracks are swapped: ⊗(prefix·w, w). The state is the
    queue of letters the second track still has to produce.
    """
    prefix = tuple(prefix)
    if not prefix:
        raise AutomatonError("shifted copy needs a non-empty prefix")
    for letter in prefix:
        if letter not in alphabet:
            raise AutomatonError(f"prefix letter {letter!r} is not in the alphabet")
    columns = Alphabet.convolution(alphabet, alphabet)
    pad = alphabet.pad

    def follow(state, column):
        ended, pending = state
        source, copy = (column[1], column[0]) if reverse else column
        if not pending or copy != pending[0]:
            return None
        if source == pad:
            return True, pending[1:]
        if ended:
            return None
        return False, pending[1:] + (source,)

    def final(state):
        return not state[1]

    name = f"shift({''.join(map(str, prefix))}{', reversed' if reverse else ''})"
    return crawl(columns, (False, prefix), follow, final, name)
