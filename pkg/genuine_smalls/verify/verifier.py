"""
This module defines the `Verifier` class, which runs registered claims and collects their
results into a `VerificationReport`.

A claim passes when its check returns. Exceptions raised by a check are turned into results
by the error handlers: `ClaimFailed` and any other library error give ``fail``,
`RecordedDiscrepancy` gives ``recorded-discrepancy``. Exceptions that are not library errors
propagate, since they point at a bug rather than at a false claim.
"""

from __future__ import annotations

import logging
from time import time
from typing import Callable, Dict, List, Optional, Tuple, Type, TypeVar, Union

from ..config import Settings
from ..ctx import current_settings, use_settings
from ..exceptions import ClaimFailed, GenuineSmallsException, RecordedDiscrepancy
from .hook import Hook
from .registry import Claim, ClaimRegistry
from .report import FAIL, PASS, RECORDED, SKIPPED, ClaimResult, VerificationReport
from .suite import ClaimSuite

__all__ = ["Verifier"]

logger = logging.getLogger(__name__)

HookType = TypeVar("HookType", bound=Hook)
HandlerResult = Union[ClaimResult, Tuple[str, str], str]
ErrorHandler = Callable[[Claim, Exception], HandlerResult]


def _failed(claim: Claim, exc: ClaimFailed) -> Tuple[str, str]:
    detail = str(exc)
    if exc.expected is not None or exc.actual is not None:
        detail += f" (expected {exc.expected}, got {exc.actual})"
    return FAIL, detail


def _recorded(claim: Claim, exc: RecordedDiscrepancy) -> Tuple[str, str]:
    detail = str(exc)
    if exc.printed is not None or exc.computed is not None:
        detail += f" (printed {exc.printed}, computed {exc.computed})"
    return RECORDED, detail


def _library_error(claim: Claim, exc: GenuineSmallsException) -> Tuple[str, str]:
    return FAIL, f"{type(exc).__name__}: {exc}"


class Verifier:
    """
    Runs claims. Claims are registered directly with `claim` or through suites with
    `register_suite`; hooks added with `add_hook` run around every claim, suite hooks around
    the claims of their suite.
    """

    def __init__(self):
        self.registry: ClaimRegistry = ClaimRegistry()
        self.suites: List[ClaimSuite] = []
        self.hooks: List[Hook] = []
        self.error_handlers: Dict[Type[Exception], ErrorHandler] = {
            ClaimFailed: _failed,
            RecordedDiscrepancy: _recorded,
            GenuineSmallsException: _library_error,
        }

    def claim(self, claim_id: str, topic: str, deep: bool = False) -> Callable:
        """
        Declare a claim on the verifier itself.

        :param claim_id: The unique id.
        :type claim_id: str
        :param topic: What the claim is about.
        :type topic: str
        :param deep: Whether the claim needs long checks enabled.
        :type deep: bool
        :return: A decorator registering the check function.
        :rtype: Callable
        """

        def decorator(func: Callable) -> Callable:
            self.registry.add_claim(claim_id, func, topic, deep)
            return func

        return decorator

    def errorhandler(self, exc: Type[Exception]) -> Callable:
        """
        Register an error handler for an exception class. The handler receives the claim and
        the exception and returns a `ClaimResult`, a ``(status, detail)`` pair or a status.

        :param exc: The exception class.
        :type exc: Type[Exception]
        :return: A decorator registering the handler.
        :rtype: Callable
        """

        def decorator(func: ErrorHandler) -> ErrorHandler:
            self.error_handlers[exc] = func
            return func

        return decorator

    def register_suite(self, suite: ClaimSuite) -> None:
        """
        Register a suite and its claims.

        :param suite: The suite.
        :type suite: ClaimSuite
        """
        suite.register(self)
        self.suites.append(suite)

    def add_hook(self, hook: Hook) -> None:
        self.hooks.append(hook)

    def remove_hook(self, hook: Hook) -> None:
        if hook in self.hooks:
            self.hooks.remove(hook)

    def get_hook(self, hook_class: Type[HookType]) -> Optional[HookType]:
        """
        Retrieve a hook by its class from the verifier and its suites.

        :param hook_class: The class of the hook.
        :type hook_class: Type[HookType]
        :return: The hook if found, or None.
        :rtype: Optional[HookType]
        """
        for hook in self.get_hooks():
            if isinstance(hook, hook_class):
                return hook  # type: ignore
        return None

    def get_hooks(self) -> List[Hook]:
        all_hooks = self.hooks.copy()
        for suite in self.suites:
            all_hooks.extend(suite.hooks)
        return all_hooks

    def run(
        self,
        scope: Optional[str] = None,
        deep: bool = False,
        settings: Optional[Settings] = None,
    ) -> VerificationReport:
        """
        Check every claim of a scope.

        :param scope: A scope, a claim id, ``"all"`` or None for everything.
        :type scope: Optional[str]
        :param deep: Run the long checks too.
        :type deep: bool
        :param settings: Settings for the run, by default the active ones.
        :type settings: Optional[Settings]
        :raises ValueError: If the scope selects no claim.
        :return: The results, in claim id order.
        :rtype: VerificationReport
        """
        claims = self.registry.match(scope)
        if not claims:
            raise ValueError(f"no claims in scope {scope!r}")
        settings = (settings or current_settings()).update(deep=deep)
        report = VerificationReport(scope or "all", deep)
        with use_settings(settings):
            for claim in claims:
                report.results.append(self.run_claim(claim, deep))
        logger.info(
            "verified %d claims: %d pass, %d fail, %d recorded, %d skipped",
            len(report.results),
            report.count(PASS),
            report.count(FAIL),
            report.count(RECORDED),
            report.count(SKIPPED),
        )
        return report

    def run_claim(self, claim: Claim, deep: bool = False) -> ClaimResult:
        """
        Check one claim and run the hooks around it.

        :param claim: The claim.
        :type claim: Claim
        :param deep: Whether long checks are enabled.
        :type deep: bool
        :rtype: ClaimResult
        """
        hooks = self.hooks.copy()
        if claim.suite is not None:
            hooks.extend(claim.suite.hooks)

        for hook in hooks:
            hook.before_claim(claim)

        start = time()
        if claim.deep and not deep:
            result = ClaimResult(claim.claim_id, claim.topic, SKIPPED, "needs --deep")
        else:
            try:
                detail = claim.check()
                result = ClaimResult(claim.claim_id, claim.topic, PASS, detail or "")
            except Exception as exc:
                try:
                    result = self._handle_exception(claim, exc)
                except Exception:
                    # hooks still see the claim end before the error propagates
                    result = ClaimResult(
                        claim.claim_id, claim.topic, FAIL, f"unhandled {type(exc).__name__}: {exc}"
                    )
                    result.seconds = time() - start
                    self._after_claim(hooks, claim, result)
                    raise
        result.seconds = time() - start

        self._after_claim(hooks, claim, result)
        return result

    @staticmethod
    def _after_claim(hooks: List[Hook], claim: Claim, result: ClaimResult) -> None:
        for hook in reversed(hooks):
            hook.after_claim(claim, result)

    def _find_handler(self, exc: Exception) -> Optional[ErrorHandler]:
        # the most specific registered class wins
        for cls in type(exc).__mro__:
            if cls in self.error_handlers:
                return self.error_handlers[cls]
        return None

    def _handle_exception(self, claim: Claim, exc: Exception) -> ClaimResult:
        """
        Turn an exception raised by a check into a result, or re-raise it if no handler fits.

        :param claim: The claim whose check raised.
        :type claim: Claim
        :param exc: The exception.
        :type exc: Exception
        :rtype: ClaimResult
        """
        handler = self._find_handler(exc)
        if handler is None:
            raise exc
        outcome = handler(claim, exc)
        if isinstance(outcome, ClaimResult):
            return outcome
        if isinstance(outcome, tuple):
            status, detail = outcome
            return ClaimResult(claim.claim_id, claim.topic, status, detail)
        return ClaimResult(claim.claim_id, claim.topic, outcome, str(exc))
