"""Sampling Kantorovich operators, their noisy counterparts, and image metrics."""

from ._kantorovich import *  # noqa: F401,F403
from ._kantorovich import __doc__  # noqa: F401
