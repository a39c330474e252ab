"""
Tests for sckit_core package.
"""
