"""
Exception hierarchy shared by every module.
"""
from typing import Optional


class SupernormError(Exception):
    """Base error for the package."""

    exit_code = 2


class InvalidArgumentError(SupernormError, ValueError):
    """A precondition on an argument was violated."""

    exit_code = 2


class OutOfRangeError(InvalidArgumentError):
    """A query reached past the sieve."""

    exit_code = 3

    def __init__(self, message: str, required_limit: Optional[int] = None):
        if required_limit is not None:
            message = f"{message} (required sieve limit >= {required_limit})"
        super().__init__(message)
        self.required_limit = required_limit


class ResourceLimitError(SupernormError):
    """A memory budget or computation cap was exceeded."""

    exit_code = 3


class UnsupportedError(SupernormError):
    """The requested statistic diverges or the backend cannot represent it."""

    exit_code = 2


class CacheFormatError(SupernormError):
    """A sieve cache file failed validation."""

    exit_code = 3
