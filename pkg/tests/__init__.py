"""
Test suite for SCKit package.
"""
