"""
This module provides hook classes for the verifier. Hooks run around every claim of a
verification run.
"""

__all__ = ["LoggerHook"]

from .logger import LoggerHook
