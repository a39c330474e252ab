"""
Tests for sckit_core.domain package.
"""
