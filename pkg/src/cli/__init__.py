"""Command-line interface for polyfoci"""
