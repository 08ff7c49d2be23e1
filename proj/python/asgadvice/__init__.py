"""Asymmetric string guessing with advice.

Ratios are passed as "P/Q" strings; floats are rejected by the core.
"""

from ._core import *  # noqa: F401,F403
from ._core import ContractViolation, MalformedAdvice, ResourceLimitExceeded  # noqa: F401
