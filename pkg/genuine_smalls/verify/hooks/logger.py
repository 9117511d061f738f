"""
This module defines the `LoggerHook` class, which logs every claim of a verification run with
its status and the time its check took.

Usage example:

.. code-block:: python

    verifier.add_hook(LoggerHook(logger=logging.getLogger('genuine_smalls.verify'), level=logging.INFO))

Parameters:
    logger (Optional[logging.Logger]): An optional `logging.Logger` instance to use for logging.
                                        If not provided, the root logger is used.
    level (int): The logging level for the log messages (e.g., logging.INFO, logging.DEBUG).

Note:
    This hook should be added first so that the measured time covers the other hooks too.
"""

import logging
from time import time
from typing import Dict, Optional

from ..hook import Hook
from ..registry import Claim
from ..report import ClaimResult

__all__ = ["LoggerHook"]


class LoggerHook(Hook):
    """
    Logger Hook

    Logs one line per claim: the claim id, its status and the time taken.

    :param logger: A `logging.Logger` instance to use for logging. If not provided, the root logger is used.
    :type logger: Optional[logging.Logger]
    :param level: The logging level to use for log messages.
    :type level: int
    """

    def __init__(self, logger: Optional[logging.Logger] = None, level: int = logging.INFO):
        self.logger = logger or logging.getLogger()
        self.level = level
        self.start_times: Dict[str, float] = {}

    def before_claim(self, claim: Claim) -> None:
        """
        Record the start time of the claim.

        :param claim: The claim about to run.
        :type claim: Claim
        """
        self.start_times[claim.claim_id] = time()

    def after_claim(self, claim: Claim, result: ClaimResult) -> None:
        """
        Log the claim id, the status and the time taken.

        :param claim: The claim that ran.
        :type claim: Claim
        :param result: Its result.
        :type result: ClaimResult
        """
        duration = time() - self.start_times.pop(claim.claim_id, time())
        message = f"{claim.claim_id} {result.status} {duration:.4f}s"
        self.logger.log(self.level, message)
