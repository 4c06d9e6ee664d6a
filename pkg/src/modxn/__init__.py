"""Invariants, automorphism certificates and explicit models of the modular curves X(N)."""

__version__ = "0.1.0"
