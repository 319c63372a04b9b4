"""
Thompson Automata - Main Package

Caret-type normal form for Thompson's group F, its counter-automaton
acceptor and generator multipliers, and a tree pair diagram oracle.
"""
__version__ = "1.0.0"
