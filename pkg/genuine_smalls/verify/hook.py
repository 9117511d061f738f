"""
This module defines the `Hook` class, the base class for code that runs around every claim
of a verification run: before the check starts and after its result is known.

Subclasses override `before_claim` and `after_claim`; both default to doing nothing.
"""

from .registry import Claim
from .report import ClaimResult

__all__ = ["Hook"]


class Hook:
    """The base class for verifier hooks."""

    def before_claim(self, claim: Claim) -> None:
        """
        Called before the claim is checked.

        :param claim: The claim about to run.
        :type claim: Claim
        """
        pass

    def after_claim(self, claim: Claim, result: ClaimResult) -> None:
        """
        Called once the claim has a result, including results produced by an error handler.

        :param claim: The claim that ran.
        :type claim: Claim
        :param result: Its result.
        :type result: ClaimResult
        """
        pass
