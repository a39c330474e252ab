"""
Tests for sckit_cli package.
"""
