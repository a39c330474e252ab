"""
Test suite for SCKit (sample-compression-toolkit) package.
"""
