"""
Tests for sckit_learners package.
"""
