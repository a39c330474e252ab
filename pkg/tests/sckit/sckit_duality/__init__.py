"""
Tests for sckit_duality package.
"""
