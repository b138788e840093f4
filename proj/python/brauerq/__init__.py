"""Brauer classes via local invariants, quaternion base change and surface censuses."""

from ._brauerq import *  # noqa: F401,F403
from ._brauerq import BrauerqError, __version__  # noqa: F401
