"""Pytest configuration for the suite.

The presence of this file puts the ``tests`` directory on ``sys.path`` so
the shared ``helpers`` module is importable from every test file.
"""
