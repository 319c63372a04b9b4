"""
Tests for the counter automaton library
"""
import pytest
import sys
from itertools import product
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

from src.acceptor import CARET_ALPHABET, INTERIOR_ALPHABET, build_m_int, build_m_tree
from src.automata import (
    Alphabet,
    ConvWord,
    CounterMachine,
    CounterOp,
    Dfa,
    Guard,
    Nfa,
    Rule,
    audit_determinism,
    complement,
    concat,
    conv_product,
    convolve,
    count_accepted,
    crawl,
    deconvolve,
    determinize,
    intersect,
    product_counter_counter,
    product_counter_dfa,
    shifted_copy_dfa,
    to_dot,
    union,
)
from src.automata.counters import DEC, INC, POS, RESET, ZERO, uncovered
from src.utils.config import PAD
from src.utils.exceptions import (
    AlphabetError,
    AlphabetMismatchError,
    CounterUnderflowError,
    DeterminismError,
    ResourceLimitError,
)

def words(alphabet, max_length):
    for length in range(max_length + 1):
        for letters in product(alphabet, repeat=length):
            yield "".join(letters)

def even_length_dfa(alphabet):
    table = {0: {letter: 1 for letter in alphabet}, 1: {letter: 0 for letter in alphabet}}
    return Dfa(alphabet, 0, {0}, table, "even")

def open_equals_a_machine():
    """{w : |w|_( = |w|_a} with one counter holding the absolute difference."""
    any1, zero, positive = Guard.any(1), Guard.on(1, 0, ZERO), Guard.on(1, 0, POS)
    inc, dec, nop = CounterOp.on(1, 0, INC), CounterOp.on(1, 0, DEC), CounterOp.nop(1)
    rules = [
        Rule("more_open", "(", any1, "more_open", inc),
        Rule("more_open", "a", positive, "more_open", dec),
        Rule("more_open", "a", zero, "more_a", inc),
        Rule("more_a", "a", any1, "more_a", inc),
        Rule("more_a", "(", positive, "more_a", dec),
        Rule("more_a", "(", zero, "more_open", inc),
    ]
    for state in ("more_open", "more_a"):
        rules += [Rule(state, letter, any1, state, nop) for letter in ")b"]
    return CounterMachine(INTERIOR_ALPHABET, 1, "more_open", {"more_open", "more_a"}, rules, "open_eq_a")

def test_convolution_pads_shorter_words():
    conv = convolve(["aa", "bbb", "a"])
    assert conv.columns == (("a", "b", "a"), ("a", "b", PAD), (PAD, "b", PAD))
    assert deconvolve(conv) == ["aa", "bbb", "a"]
    assert len(convolve(["", ""])) == 0
    assert convolve(["re", "er"]).columns == (("r", "e"), ("e", "r"))
    assert convolve(["re", "er"]).text() == "re,er"

def test_convolution_rejects_misplaced_pads():
    with pytest.raises(AlphabetError):
        ConvWord(2, ((PAD, PAD),))
    with pytest.raises(AlphabetError):
        ConvWord(2, (("r", PAD), ("e", "e")))
    with pytest.raises(AlphabetError):
        convolve(["r" + PAD, "rr"])

def test_convolution_alphabet_keeps_all_pad_column():
    columns = Alphabet.convolution(CARET_ALPHABET, CARET_ALPHABET)
    assert len(columns) == 49
    assert (PAD, PAD) in columns
    assert columns.is_all_pad((PAD, PAD))

def test_m_int_examples():
    m_int = build_m_int()
    assert m_int.counters == 1
    assert m_int.accepts("()")
    assert m_int.accepts("")
    assert m_int.accepts("a")
    assert m_int.accepts("(ab)")
    assert not m_int.accepts("b")
    assert not m_int.accepts("(")
    assert not m_int.accepts("()b")

def test_run_reports_reasons_and_trace():
    m_int = build_m_int()
    result = m_int.run("(", trace=True)
    assert not result.accepted
    assert result.reason == "counters are not zero at the end"
    assert result.trace == (("q", (0,)), ("q", (1,)))
    assert "no transition" in m_int.run("b").reason
    assert m_int.run("()").reason == "accepted"
    with pytest.raises(AlphabetError):
        m_int.run("r")

def test_malformed_convolution_is_a_reject():
    pairs = conv_product(build_m_tree(), build_m_tree())
    result = pairs.run([("r", "r"), (PAD, PAD)])
    assert not result.accepted
    assert result.reason.startswith("malformed convolution")

def test_counter_underflow_and_nondeterminism_raise():
    op = CounterOp.on(1, 0, DEC)
    with pytest.raises(CounterUnderflowError):
        op.apply((0,))
    machine = CounterMachine(
        INTERIOR_ALPHABET, 1, "s", {"s"},
        [Rule("s", "a", Guard.any(1), "s", CounterOp.nop(1)),
         Rule("s", "a", Guard.on(1, 0, ZERO), "t", CounterOp.nop(1))],
        "broken",
    )
    with pytest.raises(DeterminismError):
        machine.run("a")
    violations = audit_determinism(machine)
    assert [v.kind for v in violations] == ["overlap"]

def test_audit_flags_unguarded_decrement():
    machine = CounterMachine(
        INTERIOR_ALPHABET, 1, "s", {"s"},
        [Rule("s", ")", Guard.any(1), "s", CounterOp.on(1, 0, DEC))],
    )
    assert [v.kind for v in audit_determinism(machine)] == ["unguarded decrement"]

def test_uncovered_lattice_points():
    guards = [Guard.on(2, 0, ZERO)]
    missing = uncovered(guards, 2)
    assert all(point.tests[0] == POS for point in missing)
    assert len(missing) == 2

def test_product_counter_dfa():
    m_int = build_m_int()
    even = even_length_dfa(INTERIOR_ALPHABET)
    joint = product_counter_dfa(m_int, even)
    assert joint.counters == 1
    assert joint.accepts("()")
    assert not joint.accepts("a")
    for word in words("()ab", 5):
        assert joint.accepts(word) == (m_int.accepts(word) and len(word) % 2 == 0)
        assert product_counter_dfa(m_int, Dfa.universal(INTERIOR_ALPHABET)).accepts(word) == m_int.accepts(word)
        assert not product_counter_dfa(m_int, Dfa.empty(INTERIOR_ALPHABET)).accepts(word)

def test_product_counter_counter():
    m_int = build_m_int()
    twice = product_counter_counter(m_int, m_int)
    assert twice.counters == 2
    for word in words("()ab", 5):
        assert twice.accepts(word) == m_int.accepts(word)

    joint = product_counter_counter(m_int, open_equals_a_machine())
    assert joint.accepts("(a)")
    assert not joint.accepts("(a)a")
    assert not joint.accepts("b()")

def test_product_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        product_counter_dfa(build_m_int(), Dfa.universal(CARET_ALPHABET))

def test_conv_product_of_tree_machines():
    pairs = conv_product(build_m_tree(), build_m_tree())
    assert pairs.counters == 2
    assert pairs.accepts(convolve(["re", "er"]))
    assert pairs.accepts(convolve(["r", "r"]))
    assert not pairs.accepts(convolve(["rr", "r"]))
    assert pairs.accepts(convolve(["r", "re"]))

def test_reset_counter_operation():
    ab = Alphabet.of("ab")
    any1 = Guard.any(1)
    machine = CounterMachine(ab, 1, "s", {"s"}, [
        Rule("s", "a", any1, "s", CounterOp.on(1, 0, INC)),
        Rule("s", "b", any1, "s", CounterOp.on(1, 0, RESET)),
    ])
    assert machine.accepts("aab")
    assert machine.accepts("")
    assert not machine.accepts("ba")
    assert CounterOp.on(1, 0, RESET).apply((5,)) == (0,)

def test_conv_product_runs_tracks_independently():
    ab = Alphabet.of("ab")
    any1, positive = Guard.any(1), Guard.on(1, 0, POS)
    inc, dec = CounterOp.on(1, 0, INC), CounterOp.on(1, 0, DEC)
    a_then_b = CounterMachine(ab, 1, "s", {"s", "t"}, [
        Rule("s", "a", any1, "s", inc),
        Rule("s", "b", positive, "t", dec),
        Rule("t", "b", positive, "t", dec),
    ], "anbn")
    even = even_length_dfa(ab)
    joint = conv_product(a_then_b, even)
    assert joint.counters == 1
    for u in words("ab", 5):
        for v in words("ab", 5):
            expected = a_then_b.accepts(u) and even.accepts(v)
            assert joint.accepts(convolve([u, v])) == expected, (u, v)

def test_dfa_closure_operations():
    even = even_length_dfa(INTERIOR_ALPHABET)
    ends_in_a = crawl(INTERIOR_ALPHABET, False, lambda s, letter: letter == "a", lambda s: s, "ends_a")
    double = complement(complement(even))
    for word in words("()ab", 5):
        assert double.accepts(word) == even.accepts(word)
        assert not intersect(even, complement(even)).accepts(word)
        assert union(even, ends_in_a).accepts(word) == (len(word) % 2 == 0 or word.endswith("a"))
    assert complement(Dfa.empty(INTERIOR_ALPHABET)).is_complete()

def test_determinize_matches_nfa():
    def follow(state, letter):
        if state == 0:
            return [0, 1] if letter == "a" else [0]
        return [2] if state == 1 and letter == "b" else []

    ends_in_ab = Nfa(INTERIOR_ALPHABET, [0], follow, lambda state: state == 2, "ends_ab")
    dfa = determinize(ends_in_ab)
    assert dfa.is_complete()
    for word in words("()ab", 5):
        assert dfa.accepts(word) == ends_in_ab.accepts(word) == word.endswith("ab")

def test_concat_with_literal_column():
    columns = Alphabet.convolution(CARET_ALPHABET, CARET_ALPHABET)
    first = Dfa.literal([("e", "e")], columns)
    tail = shifted_copy_dfa(["e"], CARET_ALPHABET)
    joined = concat(first, tail)
    assert joined.accepts(convolve(["er", "eer"]))
    assert not joined.accepts(convolve(["r", "er"]))

def test_shifted_copy_dfa():
    shift = shifted_copy_dfa(["e"], CARET_ALPHABET)
    assert shift.accepts(convolve(["r", "er"]))
    assert not shift.accepts(convolve(["r", "re"]))

    ab = shifted_copy_dfa(["a", "b"], CARET_ALPHABET)
    mirrored = shifted_copy_dfa(["a", "b"], CARET_ALPHABET, reverse=True)
    for w in words("re()", 3):
        assert ab.accepts(convolve([w, "ab" + w]))
        assert mirrored.accepts(convolve(["ab" + w, w]))
        assert not ab.accepts(convolve([w, "ba" + w]))
        if w:
            assert not ab.accepts(convolve([w, "ab" + w[::-1] + "e"]))

def test_count_accepted_tree_words():
    m_tree = build_m_tree()
    catalan = [1, 1, 2, 5, 14, 42, 132]
    for n in range(1, 7):
        assert count_accepted(m_tree, n) == catalan[n]
    assert count_accepted(build_m_int(), 0) == 1

def test_to_dot_draws_every_state():
    dot = to_dot(build_m_tree())
    assert dot.startswith('digraph "m_tree"')
    assert "doublecircle" in dot
    assert "rankdir=LR" in dot
    with pytest.raises(ResourceLimitError):
        to_dot(build_m_tree(), max_states=2)

def test_to_dot_clusters_composites():
    pairs = conv_product(build_m_tree(), build_m_tree(), name="pairs")
    dot = to_dot(pairs)
    assert "subgraph cluster_0" in dot

if __name__ == "__main__":
    pytest.main([__file__, "-v"])
