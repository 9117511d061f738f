"""
genuine_smalls
~~~~~~~~~~~~~~~~~~~

Root systems, Weyl group representations, nilpotent orbits and K-types for the small genuine
representations of split covering groups.

:copyright: (c) 2024 t3tra
:license: MIT, see LICENSE for more details.

"""

__title__ = "genuine_smalls"
__author__ = "t3tra"
__license__ = "MIT"
__copyright__ = "Copyright 2024-present t3tra"
__version__ = "0.1.0a1"

import logging
from typing import NamedTuple, Literal

__all__ = [
    "config",
    "exceptions",
    "rootsys",
    "weyl",
    "weylrep",
    "orbits",
    "diagram_sets",
    "params",
    "ktypes",
    "serialize",
    "verify",
    "Settings",
    "GenuineSmallsException",
]

from . import config
from . import exceptions
from . import rootsys
from . import weyl
from . import weylrep
from . import orbits
from . import diagram_sets
from . import params
from . import ktypes
from . import serialize
from . import verify
from .config import Settings
from .exceptions import GenuineSmallsException


class VersionInfo(NamedTuple):
    major: int
    minor: int
    micro: int
    releaselevel: Literal["alpha", "beta", "candidate", "final"]
    serial: int


version_info: VersionInfo = VersionInfo(
    major=0, minor=1, micro=0, releaselevel="alpha", serial=1
)

logging.getLogger(__name__).addHandler(logging.NullHandler())

del logging, NamedTuple, Literal, VersionInfo
