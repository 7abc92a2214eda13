"""Exact homological invariants of finite-dimensional bound quiver algebras."""

__version__ = "0.1.0"
