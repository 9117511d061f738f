"""
This module defines the claim registry of the verifier, including the `Claim` and
`ClaimRegistry` classes. The registry maps claim ids to the functions that check them and
selects the claims that belong to a scope.
"""

from __future__ import annotations

from typing import Any, Callable, List, Optional

__all__ = ["Claim", "ClaimRegistry"]

CheckFunction = Callable[[], Optional[str]]


class Claim:
    """
    A single checkable statement. The check returns an optional detail string when it holds
    and raises `ClaimFailed` or `RecordedDiscrepancy` when it does not.

    :param claim_id: Dotted identifier such as ``"params.survivors-d"``; the part before the
                     first dot is the scope.
    :type claim_id: str
    :param check: The function that performs the check.
    :type check: Callable[[], Optional[str]]
    :param topic: What the claim is about, for the report.
    :type topic: str
    :param deep: Whether the claim only runs when long checks are enabled.
    :type deep: bool
    :param suite: The suite this claim was declared in, if any.
    :type suite: Optional[ClaimSuite]
    """

    def __init__(
        self,
        claim_id: str,
        check: CheckFunction,
        topic: str,
        deep: bool = False,
        suite: Optional[Any] = None,
    ) -> None:
        self.claim_id: str = claim_id
        self.check: CheckFunction = check
        self.topic: str = topic
        self.deep: bool = deep
        self.suite: Optional[Any] = suite

    @property
    def scope(self) -> str:
        return self.claim_id.split(".", 1)[0]

    def __repr__(self) -> str:
        return f"Claim({self.claim_id!r})"


class ClaimRegistry:
    """
    The `ClaimRegistry` keeps the registered claims in claim id order and answers scope queries.
    """

    def __init__(self):
        self.claims: List[Claim] = []

    def add_claim(
        self,
        claim_id: str,
        check: CheckFunction,
        topic: str,
        deep: bool = False,
        suite: Optional[Any] = None,
    ) -> Claim:
        """
        Register a claim.

        :param claim_id: The unique identifier.
        :type claim_id: str
        :param check: The check function.
        :type check: Callable[[], Optional[str]]
        :param topic: What the claim is about.
        :type topic: str
        :param deep: Whether the claim needs long checks enabled.
        :type deep: bool
        :param suite: The declaring suite.
        :type suite: Optional[ClaimSuite]
        :raises ValueError: If the id is already taken.
        :return: The new claim.
        :rtype: Claim
        """
        if any(c.claim_id == claim_id for c in self.claims):
            raise ValueError(f"claim {claim_id!r} is already registered")
        claim = Claim(claim_id, check, topic, deep, suite)
        self.claims.append(claim)
        self.claims.sort(key=lambda c: c.claim_id)
        return claim

    def match(self, scope: Optional[str] = None) -> List[Claim]:
        """
        The claims of a scope: those whose id equals `scope` or starts with ``scope + "."``.
        None or ``"all"`` selects every claim.

        :param scope: A scope name, a claim id, ``"all"`` or None.
        :type scope: Optional[str]
        :return: The matching claims in id order.
        :rtype: List[Claim]
        """
        if scope is None or scope == "all":
            return list(self.claims)
        return [
            c for c in self.claims if c.claim_id == scope or c.claim_id.startswith(scope + ".")
        ]

    @property
    def scopes(self) -> List[str]:
        return sorted({c.scope for c in self.claims})

    def __len__(self) -> int:
        return len(self.claims)
