"""
Tests for trees, caret-type words and tree pair diagrams
"""
import json
import pytest
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

from src.treecalc import (
    BinTree,
    CaretType,
    Placement,
    TreePair,
    ball,
    common_expand,
    commutator,
    decode_interior,
    decode_pair,
    decode_tree,
    encode_interior,
    encode_pair,
    encode_tree,
    enumerate_reduced_pairs,
    enumerate_trees,
    evaluate,
    exposed_indices,
    from_murray,
    generator,
    identity,
    infix_order,
    inverse,
    is_reduced,
    multiply,
    parse_pair_text,
    placement_chart,
    placement_of,
    reduce,
    to_murray,
    union,
    x_n,
)
from src.treecalc.encoding import tree_word_blocks
from src.treecalc.trees import graft, remove_caret
from src.utils.config import MAX_CARETS, MAX_RADIUS
from src.utils.exceptions import DecodeError, ExpansionError, ParseError, ResourceLimitError, TreeError

THIRTEEN_CARETS = "eea()(ab)raee"

def vine(n, side="right"):
    tree = None
    for _ in range(n):
        tree = BinTree(None, tree) if side == "right" else BinTree(tree, None)
    return tree

def test_infix_order():
    single = BinTree()
    assert infix_order(single) == [single]
    child = BinTree()
    parent = BinTree(child, None)
    assert infix_order(parent) == [child, parent]

def test_enumerate_trees_catalan():
    assert [len(enumerate_trees(n)) for n in range(1, 8)] == [1, 2, 5, 14, 42, 132, 429]
    with pytest.raises(TreeError):
        enumerate_trees(0)
    with pytest.raises(ResourceLimitError):
        enumerate_trees(MAX_CARETS + 1)

def test_encode_small_trees():
    assert encode_tree(BinTree()) == "r"
    assert encode_tree(vine(3)) == "ree"
    assert encode_tree(vine(2, "left")) == "er"
    assert encode_tree(BinTree(None, BinTree(BinTree(), None))) == "rae"

def test_thirteen_caret_word_roundtrip():
    tree = decode_tree(THIRTEEN_CARETS)
    assert tree.size == 13
    assert encode_tree(tree) == THIRTEEN_CARETS
    assert len(infix_order(tree)) == 13

def test_tree_roundtrip_exhaustive():
    for n in range(1, 8):
        words = set()
        for tree in enumerate_trees(n):
            word = encode_tree(tree)
            assert decode_tree(word) == tree
            words.add(word)
        assert len(words) == len(enumerate_trees(n))

@pytest.mark.parametrize("word,condition", [
    ("rx", "alphabet"),
    ("ar", "starts-exterior"),
    ("ra", "ends-exterior"),
    ("ee", "one-root"),
    ("rr", "one-root"),
    ("r(e", "interior"),
    ("r)e", "interior"),
])
def test_decode_tree_names_failed_condition(word, condition):
    with pytest.raises(DecodeError) as info:
        decode_tree(word)
    assert info.value.condition == condition

def test_tree_word_blocks():
    blocks = tree_word_blocks("eare")
    assert blocks == [("e", 0, "a"), ("r", 2, ""), ("e", 3, "")]

def test_interior_words():
    assert decode_interior("") is None
    assert encode_interior(decode_interior("()")) == "()"
    assert encode_interior(decode_interior("(ab)")) == "(ab)"
    with pytest.raises(DecodeError):
        decode_interior("b")
    assert CaretType("(").is_interior
    assert not CaretType.ROOT.is_interior

def test_murray_translation():
    assert to_murray("()") == "nNiI"
    assert to_murray("") == ""
    assert from_murray("nNiI") == "()"
    assert from_murray(to_murray("(ab)a")) == "(ab)a"
    with pytest.raises(ParseError):
        from_murray("nNn")
    with pytest.raises(ParseError):
        from_murray("NN")

def test_placement_chart_matches_trees():
    chart = placement_chart()
    assert len(chart) == 16
    assert chart[("a", "(")] == Placement.PARENT
    assert chart[(")", "a")] == Placement.ANCESTOR
    assert chart[("(", ")")] == Placement.RIGHT_CHILD
    assert chart[("(", "a")] == Placement.RIGHT_SUBTREE
    for word in ["()", "(ab)", "a(a)", "((a))", "(b)", "(ab)(a)"]:
        node = decode_interior(word)
        for index in range(1, len(word)):
            assert placement_of(node, index) == chart[(word[index - 1], word[index])], (word, index)

def test_tree_json_roundtrip():
    tree = decode_tree(THIRTEEN_CARETS)
    assert BinTree.from_json(json.loads(json.dumps(tree.to_json()))) == tree
    with pytest.raises(ParseError):
        BinTree.from_json({"left": None, "middle": None})

def test_generators_encode():
    assert encode_pair(generator("x0")).text() == "re,er"
    assert encode_pair(generator("x1")).text() == "ree,rae"
    assert encode_pair(identity()).text() == "r,r"
    assert generator("x0^-1") == inverse(generator("x0"))
    assert generator("X1") == generator("x1inv")
    with pytest.raises(ParseError):
        generator("x2")

def test_pair_text_parsing():
    assert parse_pair_text("re,er") == ("re", "er")
    with pytest.raises(ParseError):
        parse_pair_text("re")
    with pytest.raises(ParseError):
        parse_pair_text("re,e")
    with pytest.raises(ParseError):
        parse_pair_text("rx,er")
    with pytest.raises(ParseError):
        parse_pair_text("r,r,r")
    assert decode_pair("re,er") == generator("x0")
    assert decode_pair(("re", "er")) == generator("x0")
    assert decode_pair(encode_pair(generator("x1"))) == generator("x1")

def test_pair_json_roundtrip():
    pair = generator("x1")
    assert TreePair.from_json(json.dumps(pair.to_json())) == pair
    with pytest.raises(ParseError):
        TreePair.from_json("{not json")
    with pytest.raises(ParseError):
        TreePair.from_json({"domain": BinTree().to_json(), "range": vine(2).to_json()})
    with pytest.raises(TreeError):
        TreePair(BinTree(), vine(2))

def test_reduction():
    left_vine = vine(2, "left")
    assert reduce(TreePair(left_vine, left_vine)) == identity()
    assert is_reduced(generator("x0"))
    assert not is_reduced(TreePair(left_vine, left_vine))
    assert is_reduced(identity())
    assert not is_reduced(decode_pair("rae,rae"))
    assert exposed_indices(vine(3)) == {3}

def test_remove_caret_requires_exposed():
    with pytest.raises(TreeError):
        remove_caret(vine(2), 1)
    assert remove_caret(vine(2), 2) == BinTree()

def test_common_expand():
    target = vine(2, "left")
    assert common_expand(identity(), target) == TreePair(target, target)
    x1 = generator("x1")
    bigger = union(x1.range, BinTree(None, vine(3)))
    expanded = common_expand(x1, bigger)
    assert expanded.size == bigger.size
    assert reduce(expanded) == x1
    with pytest.raises(ExpansionError):
        graft(BinTree(), [None])
    with pytest.raises(ExpansionError):
        graft(BinTree(), [None, None, None])

def test_expand_then_reduce_exhaustive():
    extra = [tree for k in (1, 2, 3) for tree in enumerate_trees(k)]
    for n in range(1, 4):
        for pair in enumerate_reduced_pairs(n):
            for tree in extra:
                assert reduce(common_expand(pair, union(pair.range, tree))) == pair

def test_multiplication():
    x0, x1 = generator("x0"), generator("x1")
    assert multiply(identity(), x0) == x0
    assert multiply(x0, identity()) == x0
    assert multiply(x1, generator("x1inv")) == identity()
    assert multiply(x0, generator("x0inv")) == identity()
    assert encode_pair(multiply(identity(), x0)).text() == "re,er"

def test_group_relations():
    one = identity()
    a = evaluate(["x0", "x1inv"])
    assert commutator(a, evaluate(["x0inv", "x1", "x0"])) == one
    assert commutator(a, evaluate(["x0inv", "x0inv", "x1", "x0", "x0"])) == one
    assert multiply(x_n(2), x_n(1)) == multiply(x_n(1), x_n(3))
    assert x_n(0) == generator("x0")
    assert x_n(1) == generator("x1")
    assert multiply(generator("x0"), generator("x1")) != multiply(generator("x1"), generator("x0"))

def test_enumerate_reduced_pairs():
    assert len(enumerate_reduced_pairs(1)) == 1
    assert set(enumerate_reduced_pairs(2)) == {generator("x0"), generator("x0inv")}
    with pytest.raises(ResourceLimitError):
        enumerate_reduced_pairs(MAX_CARETS + 1)

def test_ball():
    assert list(ball(0)) == ["r,r"]
    one = ball(1)
    assert len(one) == 5
    assert {entry.length for entry in one.values()} == {0, 1}
    two = ball(2)
    assert all(is_reduced(entry.pair) for entry in two.values())
    assert two["re,er"].length == 1
    with pytest.raises(ResourceLimitError):
        ball(MAX_RADIUS + 1)
    with pytest.raises(ParseError):
        ball(-1)

if __name__ == "__main__":
    pytest.main([__file__, "-v"])
