"""
Placeholder file for CLI tests initialization.
"""
