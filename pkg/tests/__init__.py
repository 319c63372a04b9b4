"""
Tests Package
"""