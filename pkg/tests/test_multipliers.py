"""
Tests for the generator multipliers
"""
import pytest
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

from src.automata import audit_determinism
from src.multipliers import (
    MULT_ALPHABET,
    PAIR_ALPHABET,
    classify_x0,
    classify_x1,
    multiplier_input,
    x0_case_patterns,
    x1_case_patterns,
)
from src.treecalc import (
    GENERATOR_NAMES,
    decode_pair,
    enumerate_reduced_pairs,
    evaluate,
    generator,
    identity,
    multiply,
)
from src.utils.config import PAD
from src.utils.exceptions import AlphabetError, ParseError

MAX_CARETS = 4

def reduced_pairs(max_carets=MAX_CARETS):
    return [g for n in range(1, max_carets + 1) for g in enumerate_reduced_pairs(n)]

def test_multiplier_words_have_no_text_form():
    word = multiplier_input("r,r", "re,er")
    assert len(word) == 2
    with pytest.raises(AlphabetError):
        word.text()

def test_alphabets():
    assert len(PAIR_ALPHABET) == 36
    assert len(MULT_ALPHABET) == 37 * 37

def test_multiplier_input_columns():
    word = multiplier_input("r,r", "re,er")
    assert word.columns == ((("r", "r"), ("r", "e")), (PAD, ("e", "r")))

def test_x0_examples(multipliers):
    x0 = generator("x0")
    assert multipliers.check("x0", identity(), x0).accepted
    assert multipliers.check("x0", "r,r", "re,er").accepted
    assert multipliers.check("x0", x0, multiply(x0, x0)).accepted
    assert not multipliers.check("x0", x0, x0).accepted
    assert not multipliers.check("x0", generator("x1"), generator("x1")).accepted

def test_x1_examples(multipliers):
    x0, x1 = generator("x0"), generator("x1")
    assert multipliers.check("x1", "r,r", "ree,rae").accepted
    assert multipliers.check("x1", x0, multiply(x0, x1)).accepted
    assert not multipliers.check("x1", identity(), x0).accepted
    assert not multipliers.check("x1", x0, x0).accepted

def test_inverse_examples(multipliers):
    x0 = generator("x0")
    assert multipliers.check("x0inv", x0, identity()).accepted
    assert multipliers.check("x0^-1", x0, identity()).accepted
    assert not multipliers.check("x0inv", identity(), x0).accepted
    assert multipliers.check("x1inv", "ree,rae", "r,r").accepted
    with pytest.raises(ParseError):
        multipliers.for_generator("x7")

def test_counter_counts(multipliers):
    assert multipliers.l_x0.counters == 2
    assert multipliers.l_x1.counters == 3
    assert multipliers.l_x0_inv.counters == 2
    assert multipliers.l_x1_inv.counters == 3
    assert multipliers.l1.counters == 2
    assert multipliers.l2.counters == 3

def test_determinism_audit(multipliers):
    for name, machine in multipliers.machines().items():
        assert audit_determinism(machine) == [], name

@pytest.mark.parametrize("name", GENERATOR_NAMES)
def test_multiplier_accepts_every_product(multipliers, name):
    machine = multipliers.for_generator(name)
    step = generator(name)
    for g in reduced_pairs():
        h = multiply(g, step)
        assert machine.accepts(multiplier_input(g, h)), (name, g.text(), h.text())

@pytest.mark.parametrize("name", GENERATOR_NAMES)
def test_multiplier_rejects_wrong_products(multipliers, name):
    machine = multipliers.for_generator(name)
    others = [other for other in GENERATOR_NAMES if other != name]
    for g in reduced_pairs(3):
        assert not machine.accepts(multiplier_input(g, g))
        for other in others:
            wrong = multiply(g, generator(other))
            assert not machine.accepts(multiplier_input(g, wrong)), (name, other, g.text())

def test_multiplier_requires_normal_forms(multipliers):
    # identical trees are not a normal form even when the letters line up
    assert not multipliers.check("x0", "er,er", "re,er").accepted
    assert not multipliers.check("x1", "rr,rr", "ree,rae").accepted

def test_ball_elements_multiply_by_x1(multipliers):
    for word in (["x0", "x0"], ["x1", "x0inv"], ["x0inv", "x1inv", "x0"]):
        g = evaluate(word)
        assert multipliers.check("x1", g, multiply(g, generator("x1"))).accepted

def test_classify_identity():
    assert classify_x0(identity()) == "1"
    assert classify_x1(identity()) == "1"
    assert classify_x1(decode_pair("rae,ere")) == "4"

def test_case_patterns_partition_products(multipliers):
    x0_patterns = x0_case_patterns()
    x1_patterns = x1_case_patterns()
    assert set(x0_patterns) == {"1", "2", "3"}
    assert set(x1_patterns) == {"1", "2a", "2b", "2c", "3", "4", "5a"}
    seen = set()
    for g in reduced_pairs():
        word = multiplier_input(g, multiply(g, generator("x0")))
        matched = [label for label, dfa in x0_patterns.items() if dfa.accepts(word)]
        assert matched == [classify_x0(g)], g.text()

        word = multiplier_input(g, multiply(g, generator("x1")))
        matched = [label for label, dfa in x1_patterns.items() if dfa.accepts(word)]
        if multipliers.case5b.accepts(word):
            matched.append("5b")
        assert matched == [classify_x1(g)], g.text()
        seen.add(classify_x1(g))
    assert {"1", "3", "4", "5a", "5b"} <= seen

def test_case5b_machine_shape(multipliers):
    case5b = multipliers.case5b
    assert case5b.counters == 1
    assert case5b.states == frozenset({"q0", "q1", "q2", "q3", "q4", "q5"})
    assert case5b.start == "q0"
    assert case5b.accepting == frozenset({"q4"})

if __name__ == "__main__":
    pytest.main([__file__, "-v"])
