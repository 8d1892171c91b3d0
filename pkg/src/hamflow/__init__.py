# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._errors import DataError, HamflowError, NumericError
from ._logs import LOG

try:
    from ._version import version as __version__
except ImportError:  # source tree that was never built
    __version__ = "0.0.0"

__all__ = (
    "LOG",
    "DataError",
    "HamflowError",
    "NumericError",
    "__version__",
)
