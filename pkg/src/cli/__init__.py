"""
CLI Package
"""
from .main import MACHINE_NAMES, build_parser, main

__all__ = ['MACHINE_NAMES', 'build_parser', 'main']
