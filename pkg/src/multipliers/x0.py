"""
Multiplier for x0

g·x0 rotates the root of g's domain tree to the right. Three shapes occur:

    1  the root has no left child: a caret is added on the left, and ν(g·x0)
       is ν(g) delayed by one column behind (r, e)
    2  the rotation leaves an exposed pair at the end, which is reduced away
    3  otherwise the rotation swaps the letters e and r in place
"""
from typing import Optional

from .patterns import (
    END,
    EXT,
    INT,
    PAIR_ALPHABET,
    START,
    CaseTemplate,
    both,
    hold,
    same,
    union_dfa,
)
from ..acceptor.machines import AcceptorBundle, get_acceptor
from ..automata import Automaton, Dfa, conv_product, product_counter_dfa
from ..treecalc.pairs import TreePair
from ..treecalc.trees import exposed_indices
from ..utils.config import PAD
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

def _case1(state, column):
    upper, lower = column
    if state == START:
        if both(column) and upper[0] == "r" and upper[1] in EXT and lower == ("r", "e"):
            return [("hold", ("e", upper[1]))]
        return []
    if state[0] == "hold":
        return hold(state, column)
    return []

def _case2(state, column):
    upper, lower = column
    if state == START:
        found = [START] if same(column) else []
        if both(column) and upper[0] == "e" and upper[1] in EXT and lower == ("r", upper[1]):
            found.append(("B",))
        return found
    if state == ("B",) and upper == ("r", "e") and lower == PAD:
        return [END]
    return []

def _case3(state, column):
    """States carry whether the tail could still be the shape of case 2."""
    upper, lower = column
    if state == START:
        found = [START] if same(column) else []
        if both(column) and upper[0] == "e" and lower == ("r", upper[1]):
            found.append(("B", upper[1] in EXT))
        return found
    if state[0] == "B":
        if same(column) and upper[0] in INT:
            return [("B", False)]
        if both(column) and upper[0] == "r" and lower == ("e", upper[1]):
            return [("C", state[1] and upper[1] == "e")]
        return []
    if state[0] == "C" and same(column):
        return [("C", False)]
    return []

X0_CASES = (
    CaseTemplate("x0-case-1", _case1),
    CaseTemplate("x0-case-2", _case2),
    CaseTemplate("x0-case-3", _case3, accepting=lambda state: state == ("C", False)),
)

def x0_case_patterns() -> dict:
    """One Dfa per case, keyed by case label."""
    return {template.name.rsplit("-", 1)[1]: template.dfa() for template in X0_CASES}

def build_n0() -> Dfa:
    dfa = union_dfa(X0_CASES, "n0")
    logger.info(f"Built n0: {len(dfa.states)} states")
    return dfa

def build_l_x0(acceptor: Optional[AcceptorBundle] = None, n0: Optional[Dfa] = None) -> Automaton:
    acceptor = acceptor or get_acceptor()
    n0 = n0 or build_n0()
    membership = conv_product(
        acceptor.f_machine, Dfa.universal(PAIR_ALPHABET), tracks=(PAIR_ALPHABET, PAIR_ALPHABET)
    )
    machine = product_counter_dfa(membership, n0, name="l_x0")
    logger.info(f"Built l_x0: {machine.counters} counters")
    return machine

def classify_x0(g: TreePair) -> str:
    """Case of a reduced pair for right multiplication by x0."""
    domain = g.domain
    if domain.left is None:
        return "1"
    if domain.left.right is None and domain.right is None and g.size in exposed_indices(g.range):
        return "2"
    return "3"
