"""
Multiplier for x1

g·x1 rotates the right child D of the root of g's domain tree. With C the
left subtree of D, the cases are:

    1   D is missing: two carets are added below the root's right leaf
    2   C is empty: one caret is added after the root (three letter variants)
    3   the rotation exposes two caret pairs at the end; both are removed
    4   the rotation exposes one caret pair at the end; it is removed
    5a  C has no right subtree: one letter a becomes e
    5b  C has a right subtree: the bracket structure of D's left subtree
        changes, which a counter checks
"""
from typing import Optional

from .patterns import (
    END,
    EXT,
    INT,
    MULT_ALPHABET,
    PAIR_ALPHABET,
    START,
    CaseTemplate,
    both,
    hold,
    same,
    union_dfa,
)
from ..acceptor.machines import INTERIOR_RULES, AcceptorBundle, get_acceptor
from ..automata import (
    Automaton,
    CounterMachine,
    CounterOp,
    Dfa,
    Guard,
    Rule,
    conv_product,
    product_counter_counter,
    product_counter_dfa,
)
from ..automata.counters import INC, POS, ZERO
from ..treecalc.pairs import TreePair
from ..treecalc.trees import exposed_indices, size_of
from ..utils.config import PAD
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

# root letter of g's range -> (letter of g·x1 at the same column, inserted letter, subcase)
_INSERTIONS = {
    "e": ("e", "a", "2a"),
    "r": ("r", "a", "2a"),
    "(": ("(", "a", "2a"),
    "b": ("b", "a", "2a"),
    "a": ("(", ")", "2b"),
    ")": ("b", ")", "2c"),
}

def _before_root(state, column, root_step):
    """Shared prefix: copy columns until the column carrying r on the upper track."""
    upper, _ = column
    if not same(column):
        return []
    if upper[0] != "r":
        return [START]
    return root_step(upper)

def _case1(state, column):
    upper, lower = column
    if state == START:
        return _before_root(state, column, lambda u: [("B",)] if u[1] in EXT else [])
    if upper != PAD:
        return []
    if state == ("B",) and lower == ("e", "a"):
        return [("C",)]
    if state == ("C",) and lower == ("e", "e"):
        return [END]
    return []

def _case2(subcases):
    def follow(state, column):
        upper, lower = column
        if state == START:
            found = [START] if same(column) and upper[0] != "r" else []
            if both(column) and upper[0] == "r" and lower[0] == "r":
                changed, inserted, subcase = _INSERTIONS[upper[1]]
                if lower[1] == changed and subcase in subcases:
                    found.append(("R", inserted, subcase))
            return found
        if state[0] == "R":
            if upper != PAD and upper[0] == "e" and lower == ("e", state[1]):
                return [("hold", upper, state[2])]
            return []
        if state[0] == "hold":
            return hold(state, column, done=("end", state[2]))
        return []
    return follow

def _case3(state, column):
    upper, lower = column
    if state == START:
        return _before_root(state, column, lambda u: [("B",)] if u[1] in EXT else [])
    if lower != PAD:
        return []
    if state == ("B",) and upper == ("a", "e"):
        return [("C",)]
    if state == ("C",) and upper == ("e", "e"):
        return [END]
    return []

def _case4(state, column):
    """Flag: the block before the a column is empty and the root column is exterior."""
    upper, lower = column
    if state == START:
        return _before_root(state, column, lambda u: [("B", u[1] in EXT)])
    if state[0] == "B":
        if same(column) and upper[0] in INT:
            return [("B", False)]
        if both(column) and upper[0] == "a" and upper[1] in EXT and lower == ("e", upper[1]):
            if not (state[1] and upper[1] == "e"):
                return [("C",)]
        return []
    if state == ("C",) and upper == ("e", "e") and lower == PAD:
        return [END]
    return []

def _k1(state, column):
    """Flag: the tail so far could still be the shape of cases 3 and 4."""
    upper, lower = column
    if state == START:
        return _before_root(state, column, lambda u: [("B",)])
    if state == ("B",):
        if same(column) and upper[0] in INT:
            return [("B",)]
        if both(column) and upper[0] == "a" and lower == ("e", upper[1]):
            return [("C", upper[1] in EXT)]
        return []
    if state[0] == "C":
        if same(column) and upper[0] == "e":
            return [("D", state[1] and upper[1] == "e")]
        return []
    if state[0] == "D" and same(column):
        return [("D", False)]
    return []

def _ended(state) -> bool:
    return state[0] == "end"

X1_CASES = (
    CaseTemplate("x1-case-1", _case1),
    CaseTemplate("x1-case-2a", _case2({"2a"}), accepting=_ended),
    CaseTemplate("x1-case-2b", _case2({"2b"}), accepting=_ended),
    CaseTemplate("x1-case-2c", _case2({"2c"}), accepting=_ended),
    CaseTemplate("x1-case-3", _case3),
    CaseTemplate("x1-case-4", _case4),
)
K1_CASE = CaseTemplate("x1-case-5a", _k1, accepting=lambda state: state == ("D", False))

def build_n1() -> Dfa:
    dfa = union_dfa(X1_CASES, "n1")
    logger.info(f"Built n1: {len(dfa.states)} states")
    return dfa

def _membership(acceptor: AcceptorBundle) -> Automaton:
    """⊗(F, anything): the upper track must be a normal form."""
    return conv_product(
        acceptor.f_machine, Dfa.universal(PAIR_ALPHABET), tracks=(PAIR_ALPHABET, PAIR_ALPHABET)
    )

def build_k1_l1(acceptor: Optional[AcceptorBundle] = None) -> tuple:
    acceptor = acceptor or get_acceptor()
    k1 = K1_CASE.dfa()
    l1 = product_counter_dfa(_membership(acceptor), k1, name="l1")
    logger.info(f"Built k1: {len(k1.states)} states; l1: {l1.counters} counters")
    return k1, l1

def build_n(acceptor: Optional[AcceptorBundle] = None, n1: Optional[Dfa] = None) -> Automaton:
    acceptor = acceptor or get_acceptor()
    return product_counter_dfa(_membership(acceptor), n1 or build_n1(), name="n")

_ANY = Guard.any(1)
_NOP = CounterOp.nop(1)

def build_case5b_machine() -> CounterMachine:
    """Six states q0..q5, one counter.

    q0 copies up to the root column, q1 copies interior columns up to the
    rotated caret, q2 follows the bracket counter until the second rotated
    column, q3 checks that the reopened bracket closes exactly at the next
    exterior column, and q4 copies the rest. Outside the two rotated columns
    both tracks must agree.
    """
    zero = Guard.on(1, 0, ZERO)
    positive = Guard.on(1, 0, POS)
    rules = []
    for column in MULT_ALPHABET:
        upper, lower = column
        if same(column):
            letter = lower[0]
            rules.append(Rule("q0", column, _ANY, "q1" if letter == "r" else "q0", _NOP))
            rules.append(Rule("q4", column, _ANY, "q4", _NOP))
            if letter in INT:
                guard, op = INTERIOR_RULES[letter]
                rules.append(Rule("q1", column, _ANY, "q1", _NOP))
                rules.append(Rule("q2", column, guard, "q2", op))
                rules.append(Rule("q3", column, positive, "q3", op))
            elif letter == "e":
                rules.append(Rule("q3", column, zero, "q4", _NOP))
                rules.append(Rule("q5", column, _ANY, "q4", _NOP))
        elif both(column) and upper[1] == lower[1]:
            if upper[0] == "(" and lower[0] == "e":
                rules.append(Rule("q1", column, _ANY, "q2", _NOP))
            elif upper[0] == "b" and lower[0] == "(":
                rules.append(Rule("q2", column, zero, "q3", CounterOp.on(1, 0, INC)))
            elif upper[0] == ")" and lower[0] == "a":
                rules.append(Rule("q2", column, zero, "q5", _NOP))
    machine = CounterMachine(MULT_ALPHABET, 1, "q0", {"q4"}, rules, name="case5b")
    logger.info(f"Built case5b: {len(machine.states)} states, 1 counter")
    return machine

def build_l2(acceptor: Optional[AcceptorBundle] = None,
             case5b: Optional[CounterMachine] = None) -> Automaton:
    """Case 5b against ⊗(anything, F): 1 + 2 counters."""
    acceptor = acceptor or get_acceptor()
    membership = conv_product(
        Dfa.universal(PAIR_ALPHABET), acceptor.f_machine, tracks=(PAIR_ALPHABET, PAIR_ALPHABET)
    )
    return product_counter_counter(case5b or build_case5b_machine(), membership, name="l2")

def x1_case_patterns() -> dict:
    """One Dfa per case label, including 5a; case 5b is a counter machine."""
    patterns = {template.name.rsplit("-", 1)[1]: template.dfa() for template in X1_CASES}
    patterns["5a"] = K1_CASE.dfa()
    return patterns

def classify_x1(g: TreePair) -> str:
    """Case of a reduced pair for right multiplication by x1."""
    domain = g.domain
    bottom = g.words()[1]
    root_position = size_of(domain.left)
    rotated = domain.right
    if rotated is None:
        return "1"
    subtree = rotated.left
    if subtree is None:
        return _INSERTIONS[bottom[root_position]][2]
    if subtree.right is not None:
        return "5b"
    if rotated.right is None and g.size in exposed_indices(g.range):
        if subtree.left is None and bottom[root_position] in EXT and bottom[-2] == "e":
            return "3"
        return "4"
    return "5a"
