"""
This module defines the `ClaimSuite` class, which groups the claims of one part of the library
together with their hooks. Suites are declared next to the checks they hold and registered
with a `Verifier`, which copies the claims into its own registry.
"""

from typing import Callable, List, Optional, Type, TypeVar

from .hook import Hook
from .registry import ClaimRegistry

__all__ = ["ClaimSuite"]

HookType = TypeVar("HookType", bound=Hook)


class ClaimSuite:
    """
    A named group of claims sharing an id prefix and a set of hooks.

    :param name: The name of the suite.
    :type name: str
    :param prefix: Prepended to every claim id with a dot, by default the name.
    :type prefix: Optional[str]
    """

    def __init__(self, name: str, prefix: Optional[str] = None):
        self.name: str = name
        self.prefix: str = prefix if prefix is not None else name
        self.registry: ClaimRegistry = ClaimRegistry()
        self.hooks: List[Hook] = []

    def claim(self, claim_id: str, topic: str, deep: bool = False) -> Callable:
        """
        Declare a claim of this suite.

        :param claim_id: The id, without the suite prefix.
        :type claim_id: str
        :param topic: What the claim is about.
        :type topic: str
        :param deep: Whether the claim needs long checks enabled.
        :type deep: bool
        :return: A decorator registering the check function.
        :rtype: Callable[[Callable], Callable]
        """

        def decorator(func: Callable) -> Callable:
            self.registry.add_claim(self._full_id(claim_id), func, topic, deep, suite=self)
            return func

        return decorator

    def add_hook(self, hook: Hook) -> None:
        """
        Add a hook that runs around the claims of this suite only.

        :param hook: The hook.
        :type hook: Hook
        """
        self.hooks.append(hook)

    def remove_hook(self, hook: Hook) -> None:
        if hook in self.hooks:
            self.hooks.remove(hook)

    def get_hook(self, hook_class: Type[HookType]) -> Optional[HookType]:
        """
        Retrieve a hook of the suite by its class.

        :param hook_class: The class of the hook.
        :type hook_class: Type[HookType]
        :return: The hook if found, or None.
        :rtype: Optional[HookType]
        """
        for hook in self.hooks:
            if isinstance(hook, hook_class):
                return hook  # type: ignore
        return None

    def _full_id(self, claim_id: str) -> str:
        if self.prefix:
            return f"{self.prefix}.{claim_id}"
        return claim_id

    def register(self, verifier) -> None:
        """
        Register all claims of the suite with a verifier.

        :param verifier: The verifier.
        :type verifier: Verifier
        """
        for claim in self.registry.claims:
            verifier.registry.add_claim(
                claim.claim_id, claim.check, claim.topic, claim.deep, suite=self
            )

    def __repr__(self) -> str:
        return f"ClaimSuite({self.name!r}, {len(self.registry)} claims)"
