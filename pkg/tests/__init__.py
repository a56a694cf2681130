"""Test suite for polyfoci"""
