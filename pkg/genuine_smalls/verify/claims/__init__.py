"""
The claims checked by ``genuine-smalls verify``, one suite per part of the library.
"""

import logging

from ..hooks import LoggerHook
from ..verifier import Verifier
from . import diagram_sets, ktypes, orbits, params, rootsys, weylrep

__all__ = ["SUITES", "default_verifier"]

SUITES = (
    rootsys.suite,
    weylrep.suite,
    orbits.suite,
    diagram_sets.suite,
    params.suite,
    ktypes.suite,
)


def default_verifier() -> Verifier:
    """
    Build a verifier holding every suite, with a `LoggerHook` writing to
    ``genuine_smalls.verify``.

    :rtype: Verifier
    """
    verifier = Verifier()
    verifier.add_hook(LoggerHook(logging.getLogger("genuine_smalls.verify")))
    for suite in SUITES:
        verifier.register_suite(suite)
    return verifier
