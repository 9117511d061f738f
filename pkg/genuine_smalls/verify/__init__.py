"""
Verification of the computed claims: a registry of claims grouped in suites, a verifier running
them with hooks and error handlers, and the report it produces.
"""

__all__ = [
    "hooks",
    "Claim",
    "ClaimRegistry",
    "ClaimSuite",
    "Hook",
    "Verifier",
    "ClaimResult",
    "VerificationReport",
    "default_verifier",
]

from . import hooks
from .claims import default_verifier
from .hook import Hook
from .registry import Claim, ClaimRegistry
from .report import ClaimResult, VerificationReport
from .suite import ClaimSuite
from .verifier import Verifier
