"""
Tests for sckit_boosting package.
"""
