"""
Multiplier bundle: every generator multiplier, built once and shared
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .dispatch import CaseDispatchMachine
from .patterns import PairLike, multiplier_input
from .x0 import build_l_x0, build_n0
from .x1 import build_case5b_machine, build_k1_l1, build_l2, build_n, build_n1
from ..acceptor.machines import AcceptorBundle, get_acceptor
from ..automata import Automaton, CounterMachine, Dfa, RunResult, SwappedMachine
from ..treecalc.pairs import canonical_generator
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

def build_inverse_multiplier(machine: Automaton, name: str = "") -> Automaton:
    """Multiplier for the inverse generator: accepts ⊗(u, v) when ``machine`` accepts ⊗(v, u)."""
    return SwappedMachine(machine, name)

def build_l_x1(acceptor: Optional[AcceptorBundle] = None, n1: Optional[Dfa] = None,
               k1: Optional[Dfa] = None, case5b: Optional[CounterMachine] = None) -> Automaton:
    acceptor = acceptor or get_acceptor()
    if k1 is None:
        k1, _ = build_k1_l1(acceptor)
    machine = CaseDispatchMachine(
        n1 or build_n1(), k1, case5b or build_case5b_machine(), acceptor.f_machine
    )
    logger.info(f"Built l_x1: {machine.counters} counters")
    return machine

@dataclass
class MultiplierBundle:
    n0: Dfa
    l_x0: Automaton
    n1: Dfa
    k1: Dfa
    l1: Automaton
    n: Automaton
    case5b: CounterMachine
    l2: Automaton
    l_x1: Automaton
    l_x0_inv: Automaton = field(init=False)
    l_x1_inv: Automaton = field(init=False)

    def __post_init__(self):
        self.l_x0_inv = build_inverse_multiplier(self.l_x0, "l_x0inv")
        self.l_x1_inv = build_inverse_multiplier(self.l_x1, "l_x1inv")

    def machines(self) -> dict:
        return {
            "n0": self.n0,
            "l_x0": self.l_x0,
            "n1": self.n1,
            "k1": self.k1,
            "case5b": self.case5b,
            "l_x1": self.l_x1,
        }

    def for_generator(self, name: str) -> Automaton:
        canonical = canonical_generator(name)
        return {
            "x0": self.l_x0,
            "x1": self.l_x1,
            "x0inv": self.l_x0_inv,
            "x1inv": self.l_x1_inv,
        }[canonical]

    def check(self, name: str, u: PairLike, v: PairLike) -> RunResult:
        return self.for_generator(name).run(multiplier_input(u, v))

def build_multipliers(acceptor: Optional[AcceptorBundle] = None) -> MultiplierBundle:
    acceptor = acceptor or get_acceptor()
    n0 = build_n0()
    n1 = build_n1()
    k1, l1 = build_k1_l1(acceptor)
    case5b = build_case5b_machine()
    bundle = MultiplierBundle(
        n0=n0,
        l_x0=build_l_x0(acceptor, n0),
        n1=n1,
        k1=k1,
        l1=l1,
        n=build_n(acceptor, n1),
        case5b=case5b,
        l2=build_l2(acceptor, case5b),
        l_x1=build_l_x1(acceptor, n1, k1, case5b),
    )
    logger.info("Multiplier bundle ready")
    return bundle

@lru_cache(maxsize=1)
def get_multipliers() -> MultiplierBundle:
    return build_multipliers()
