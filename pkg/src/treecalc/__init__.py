"""
Tree Calculus Package

Binary trees, caret-type words and tree pair diagrams for Thompson's group F.
"""
from .trees import BinTree, enumerate_trees, exposed_indices, infix_order, union
from .encoding import (
    CARET_LETTERS,
    INTERIOR_LETTERS,
    CaretType,
    Placement,
    decode_interior,
    decode_tree,
    encode_interior,
    encode_tree,
    from_murray,
    placement_chart,
    placement_of,
    to_murray,
)
from .pairs import (
    GENERATOR_NAMES,
    BallEntry,
    TreePair,
    ball,
    common_expand,
    commutator,
    decode_pair,
    encode_pair,
    enumerate_reduced_pairs,
    evaluate,
    generator,
    identity,
    inverse,
    is_reduced,
    multiply,
    parse_pair_text,
    reduce,
    x_n,
)

__all__ = [
    'BinTree', 'enumerate_trees', 'exposed_indices', 'infix_order', 'union',
    'CARET_LETTERS', 'INTERIOR_LETTERS', 'CaretType', 'Placement',
    'decode_interior', 'decode_tree', 'encode_interior', 'encode_tree',
    'from_murray', 'placement_chart', 'placement_of', 'to_murray',
    'GENERATOR_NAMES', 'BallEntry', 'TreePair', 'ball', 'common_expand', 'commutator',
    'decode_pair', 'encode_pair', 'enumerate_reduced_pairs', 'evaluate', 'generator',
    'identity', 'inverse', 'is_reduced', 'multiply', 'parse_pair_text', 'reduce', 'x_n',
]
