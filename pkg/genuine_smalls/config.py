"""
Runtime settings for genuine_smalls, read from the environment.

``GENUINE_SMALLS_CACHE``
    Directory for cached character tables. Unset means no disk cache.
``GENUINE_SMALLS_ORACLE_BOUND``
    Largest Weyl group order enumerated element by element (default 2000000).
``GENUINE_SMALLS_KTYPE_BOUND``
    Default bound on the sum of the highest weight entries in K-type enumeration (default 6).
"""

import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

__all__ = ["Settings", "DEFAULT_ORACLE_BOUND", "DEFAULT_KTYPE_BOUND"]

DEFAULT_ORACLE_BOUND = 2_000_000
DEFAULT_KTYPE_BOUND = 6


@dataclass(frozen=True)
class Settings:
    """
    Settings shared by a run.

    :param cache_dir: Directory for the character table cache, or None.
    :type cache_dir: Optional[str]
    :param oracle_bound: Largest group order the character oracle will enumerate.
    :type oracle_bound: int
    :param ktype_bound: Default bound on the sum of highest weight entries.
    :type ktype_bound: int
    :param deep: Whether long-running checks are enabled.
    :type deep: bool
    """

    cache_dir: Optional[str] = None
    oracle_bound: int = DEFAULT_ORACLE_BOUND
    ktype_bound: int = DEFAULT_KTYPE_BOUND
    deep: bool = False

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """
        Build settings from environment variables.

        :param environ: Mapping to read instead of `os.environ`.
        :type environ: Optional[Mapping[str, str]]
        :raises ValueError: If a numeric variable is not an integer.
        :return: The settings.
        :rtype: Settings
        """
        env = os.environ if environ is None else environ
        return cls(
            cache_dir=env.get("GENUINE_SMALLS_CACHE") or None,
            oracle_bound=int(env.get("GENUINE_SMALLS_ORACLE_BOUND", DEFAULT_ORACLE_BOUND)),
            ktype_bound=int(env.get("GENUINE_SMALLS_KTYPE_BOUND", DEFAULT_KTYPE_BOUND)),
        )

    def update(self, **options) -> "Settings":
        """Return a copy with the given fields replaced."""
        return replace(self, **options)
