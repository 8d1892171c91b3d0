# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

import time
from types import TracebackType
from typing import Optional, Type

from ..._logs import LOG, CollectingLogHandler, LogEntry


class TrainingSession:
    """
    Brackets one training run: collects the package log while it is open and measures
    its wall-clock duration.
    """

    _should_print_logs: bool
    _log_handler: CollectingLogHandler
    _start_seconds: float
    _end_seconds: Optional[float]

    def __init__(self, *, should_print_logs: bool = False):
        self._should_print_logs = should_print_logs
        self._log_handler = CollectingLogHandler(should_print=should_print_logs)
        self._start_seconds = 0.0
        self._end_seconds = None

    def __enter__(self) -> "TrainingSession":
        LOG.addHandler(self._log_handler)
        self._start_seconds = time.perf_counter()
        return self

    def __exit__(
        self,
        exc_type: Optional[Type[BaseException]],
        exc_value: Optional[BaseException],
        traceback: Optional[TracebackType],
    ) -> None:
        self._end_seconds = time.perf_counter()
        self._log_handler.close()
        LOG.removeHandler(self._log_handler)

    def get_duration(self) -> float:
        end = self._end_seconds if self._end_seconds is not None else time.perf_counter()
        return end - self._start_seconds

    def get_log_messages(self) -> list[LogEntry]:
        return list(self._log_handler.messages)
