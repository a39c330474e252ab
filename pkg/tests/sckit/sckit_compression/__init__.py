"""
Tests for sckit_compression package.
"""
