"""Twisted divided powers: exact q-deformed divided power calculus with machine-checked identities."""

__version__ = "0.2.0"
