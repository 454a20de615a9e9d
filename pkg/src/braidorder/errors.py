"""Exceptions shared by the computational modules."""

from __future__ import annotations


class CapExceededError(RuntimeError):
    """A configured resource cap (iterations, set size, matrix size) was exceeded."""
