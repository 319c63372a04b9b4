"""
Analysis helpers: accepted-word counts, determinism audit, Graphviz export
"""
from __future__ import annotations

from collections import Counter, defaultdict
from typing import Hashable, NamedTuple

from .counters import DEC, POS
from .finite import Dfa
from .machine import Automaton, CounterMachine
from ..utils.config import MAX_DOT_STATES
from ..utils.exceptions import ResourceLimitError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

def count_accepted(machine: Automaton, length: int) -> int:
    """Number of accepted words of exactly ``length`` letters.

    Dynamic programming over reachable configurations; each word follows a
    single run, so counting runs counts words.
    """
    configurations = Counter({(machine.start, (0,) * machine.counters): 1})
    for _ in range(length):
        following = Counter()
        for (state, counters), ways in configurations.items():
            for letter in machine.alphabet:
                moved = machine.step(state, counters, letter)
                if moved is not None:
                    following[moved] += ways
        configurations = following
    return sum(
        ways for (state, counters), ways in configurations.items()
        if machine.is_accepting(state) and not any(counters)
    )

class Violation(NamedTuple):
    machine: str
    state: Hashable
    letter: Hashable
    kind: str
    detail: str

def leaves(machine: Automaton) -> list:
    """Explicit machines underneath a composite, in component order."""
    parts = machine.parts()
    if not parts:
        return [machine]
    found = []
    for part in parts:
        for leaf in leaves(part):
            if all(leaf is not seen for seen in found):
                found.append(leaf)
    return found

def audit_determinism(machine: Automaton) -> list:
    """Static check that no two transitions can fire together.

    Guards are compared on the zero/positive lattice, and every decrement must
    be guarded by a positivity test. Composite machines are audited through
    their explicit components: a product of deterministic components is
    deterministic.
    """
    violations = []
    for leaf in leaves(machine):
        if not isinstance(leaf, CounterMachine):
            continue
        for (state, letter), moves in leaf.table.items():
            for i, first in enumerate(moves):
                for second in moves[i + 1:]:
                    if first.guard.overlaps(second.guard):
                        violations.append(Violation(
                            leaf.name, state, letter, "overlap",
                            f"guards [{first.guard}] and [{second.guard}] overlap"
                        ))
                for index, action in enumerate(first.op.actions):
                    if action == DEC and first.guard.tests[index] != POS:
                        violations.append(Violation(
                            leaf.name, state, letter, "unguarded decrement",
                            f"counter {index} decremented without a >0 test"
                        ))
    if violations:
        logger.warning(f"Determinism audit of {machine.name}: {len(violations)} violations")
    return violations

def format_letter(letter) -> str:
    if isinstance(letter, tuple):
        parts = [format_letter(part) for part in letter]
        separator = "/" if all(isinstance(part, str) for part in letter) else "|"
        return separator.join(parts)
    return str(letter)

def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'

def _explicit_edges(machine: Automaton) -> tuple:
    """(states, {(src, dst, suffix): [letters]}) for an explicit machine."""
    grouped = defaultdict(list)
    if isinstance(machine, Dfa):
        states = machine.states
        for source, row in machine.table.items():
            for letter, target in row.items():
                grouped[(source, target, "")].append(letter)
    else:
        states = machine.states
        for (source, letter), moves in machine.table.items():
            for move in moves:
                grouped[(source, move.target, move.label_suffix())].append(letter)
    return states, grouped

def _edge_label(letters: list, suffix: str, shown: int = 6) -> str:
    text = ", ".join(format_letter(letter) for letter in letters[:shown])
    if len(letters) > shown:
        text += f", ... (+{len(letters) - shown})"
    return f"{text} : {suffix}" if suffix else text

def _node_name(state) -> str:
    return f"s{state}" if isinstance(state, int) else format_letter(state)

def _emit_machine(machine: Automaton, prefix: str, lines: list, max_states: int, indent: str):
    states, grouped = _explicit_edges(machine)
    if len(states) > max_states:
        raise ResourceLimitError("dot_states", len(states), max_states)
    ordered = sorted(states, key=repr)
    for state in ordered:
        shape = "doublecircle" if machine.is_accepting(state) else "circle"
        lines.append(f"{indent}{_quote(prefix + _node_name(state))} [shape={shape}];")
    lines.append(f"{indent}{_quote(prefix + '__start__')} [shape=point];")
    lines.append(f"{indent}{_quote(prefix + '__start__')} -> {_quote(prefix + _node_name(machine.start))};")
    for (source, target, suffix) in sorted(grouped, key=repr):
        label = _edge_label(grouped[(source, target, suffix)], suffix)
        lines.append(
            f"{indent}{_quote(prefix + _node_name(source))} -> "
            f"{_quote(prefix + _node_name(target))} [label={_quote(label)}];"
        )

def to_dot(machine: Automaton, max_states: int = MAX_DOT_STATES) -> str:
    """Graphviz source for a machine.

    Composite machines are drawn as one cluster per explicit component.
    """
    lines = [f"digraph {_quote(machine.name)} {{", "  rankdir=LR;"]
    components = leaves(machine)
    if components == [machine]:
        _emit_machine(machine, "", lines, max_states, "  ")
    else:
        for index, component in enumerate(components):
            if not isinstance(component, (Dfa, CounterMachine)):
                continue
            lines.append(f"  subgraph cluster_{index} {{")
            lines.append(f"    label={_quote(f'{component.name} ({component.counters} counters)')};")
            _emit_machine(component, f"{index}:", lines, max_states, "    ")
            lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
