"""
Normal-form acceptor: counter machines for interior words, tree words,
pairs of tree words, and reduced pairs
"""
from dataclasses import dataclass
from functools import lru_cache

from ..automata import (
    Alphabet,
    Automaton,
    CounterMachine,
    CounterOp,
    Dfa,
    Guard,
    Nfa,
    Rule,
    complement,
    conv_product,
    product_counter_dfa,
)
from ..automata.counters import DEC, INC, POS, ZERO
from ..treecalc.encoding import CARET_LETTERS, EXTERIOR_LETTERS, INTERIOR_LETTERS
from ..utils.config import PAD
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

CARET_ALPHABET = Alphabet.of(CARET_LETTERS, PAD)
INTERIOR_ALPHABET = Alphabet.of(INTERIOR_LETTERS, PAD)
COLUMN_ALPHABET = Alphabet.convolution(CARET_ALPHABET, CARET_ALPHABET)

_ANY = Guard.any(1)
_NOP = CounterOp.nop(1)
_ZERO = Guard.on(1, 0, ZERO)
_POS = Guard.on(1, 0, POS)
_INC = CounterOp.on(1, 0, INC)
_DEC = CounterOp.on(1, 0, DEC)

# interior letter -> (guard, op) for the bracket counter
INTERIOR_RULES = {
    "(": (_ANY, _INC),
    ")": (_POS, _DEC),
    "b": (_POS, _NOP),
    "a": (_ANY, _NOP),
}

def build_m_int() -> CounterMachine:
    """One state, one counter: the interior-subtree language."""
    rules = [Rule("q", letter, guard, "q", op) for letter, (guard, op) in INTERIOR_RULES.items()]
    machine = CounterMachine(INTERIOR_ALPHABET, 1, "q", {"q"}, rules, name="m_int")
    logger.info("Built m_int: 1 state, 1 counter")
    return machine

def build_m_tree() -> CounterMachine:
    """Tree-word language.

    States track whether r has been read and whether the last letter was
    exterior; interior blocks run the interior-word counter and must close at
    zero before the next exterior letter.
    """
    rules = []
    for seen_root in (False, True):
        ext = "ext_r" if seen_root else "ext"
        inner = "int_r" if seen_root else "int"
        rules.append(Rule(ext, "e", _ANY, ext, _NOP))
        rules.append(Rule(inner, "e", _ZERO, ext, _NOP))
        if not seen_root:
            rules.append(Rule(ext, "r", _ANY, "ext_r", _NOP))
            rules.append(Rule(inner, "r", _ZERO, "ext_r", _NOP))
        for letter, (guard, op) in INTERIOR_RULES.items():
            rules.append(Rule(inner, letter, guard, inner, op))
        rules.append(Rule(ext, "(", _ANY, inner, _INC))
        rules.append(Rule(ext, "a", _ANY, inner, _NOP))
    rules.append(Rule("start", "e", _ANY, "ext", _NOP))
    rules.append(Rule("start", "r", _ANY, "ext_r", _NOP))
    machine = CounterMachine(CARET_ALPHABET, 1, "start", {"ext_r"}, rules, name="m_tree")
    logger.info(f"Built m_tree: {len(machine.states)} states, 1 counter")
    return machine

def build_no_pad_dfa() -> Dfa:
    table = {0: {column: 0 for column in COLUMN_ALPHABET if PAD not in column}}
    return Dfa(COLUMN_ALPHABET, 0, {0}, table, name="no_pad")

def build_l_tt(m_tree: Automaton = None) -> Automaton:
    """Pairs of tree words of equal length, as a 2-counter machine over columns."""
    m_tree = m_tree or build_m_tree()
    machine = product_counter_dfa(conv_product(m_tree, m_tree), build_no_pad_dfa(), name="l_tt")
    logger.info(f"Built l_tt: {machine.counters} counters")
    return machine

def _column_pattern(name: str, steps: list, anchored_start: bool, anchored_end: bool) -> Nfa:
    """Columns matching ``steps`` (one predicate per column), optionally anchored."""
    last = len(steps)

    def follow(state, column):
        targets = []
        if (state == 0 and not anchored_start) or (state == last and not anchored_end):
            targets.append(state)
        if state < last and steps[state](column):
            targets.append(state + 1)
        return targets

    return Nfa(COLUMN_ALPHABET, [0], follow, lambda state: state == last, name)

def _both(letters: str):
    return lambda column: column[0] in letters and column[1] in letters

def reduction_patterns() -> list:
    """Column patterns that show a caret pair exposed in both trees."""
    exterior = _both(EXTERIOR_LETTERS)
    return [
        _column_pattern("exposed-first", [lambda c: c == ("e", "e"), exterior], True, False),
        _column_pattern("exposed-last", [exterior, lambda c: c == ("e", "e")], False, True),
        _column_pattern("exposed-interior", [_both("er(b"), _both(")a")], False, False),
    ]

def build_r_dfa() -> Dfa:
    patterns = Nfa.union(reduction_patterns(), name="unreduced")
    dfa = complement(patterns.determinize(), name="r")
    logger.info(f"Built r: {len(dfa.states)} states")
    return dfa

@dataclass(frozen=True)
class AcceptorBundle:
    m_int: CounterMachine
    m_tree: CounterMachine
    l_tt: Automaton
    r_dfa: Dfa
    f_machine: Automaton

    def machines(self) -> dict:
        return {
            "m_int": self.m_int,
            "m_tree": self.m_tree,
            "l_tt": self.l_tt,
            "r": self.r_dfa,
            "f": self.f_machine,
        }

def build_acceptor() -> AcceptorBundle:
    m_tree = build_m_tree()
    l_tt = build_l_tt(m_tree)
    r_dfa = build_r_dfa()
    f_machine = product_counter_dfa(l_tt, r_dfa, name="f")
    logger.info(f"Built acceptor f: {f_machine.counters} counters")
    return AcceptorBundle(build_m_int(), m_tree, l_tt, r_dfa, f_machine)

@lru_cache(maxsize=1)
def get_acceptor() -> AcceptorBundle:
    """Shared acceptor bundle, built on first use."""
    return build_acceptor()
