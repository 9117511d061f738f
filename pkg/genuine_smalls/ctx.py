"""
This module provides the context variable holding the settings of the current run.
Library functions read it through `current_settings()`; the verifier and the command line
set it for the duration of a run with `use_settings()`.
"""

import contextvars
from contextlib import contextmanager
from typing import Iterator, Optional

from .config import Settings

__all__ = ["run_context", "current_settings", "use_settings"]

run_context: contextvars.ContextVar[Optional[Settings]] = contextvars.ContextVar(
    "run_context", default=None
)


def current_settings() -> Settings:
    """
    Return the settings of the active run, falling back to the environment.

    :return: The active settings.
    :rtype: Settings
    """
    settings = run_context.get()
    if settings is None:
        return Settings.from_env()
    return settings


@contextmanager
def use_settings(settings: Settings) -> Iterator[Settings]:
    """
    Make `settings` the active settings inside the ``with`` block.

    :param settings: The settings to activate.
    :type settings: Settings
    """
    token = run_context.set(settings)
    try:
        yield settings
    finally:
        run_context.reset(token)
