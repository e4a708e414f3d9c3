"""
Test suite for ringbasis
"""
