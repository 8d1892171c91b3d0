# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

import logging
import sys
import time
from dataclasses import dataclass
from logging import Handler, LogRecord

LOG = logging.getLogger("hamflow")
LOG.setLevel(logging.INFO)


@dataclass
class LogEntry:
    """
    One log line captured while a command runs, kept for the command's report.
    """

    timestamp: str
    message: str

    def __str__(self) -> str:
        return f"{self.timestamp}\t{self.message}"


class CollectingLogHandler(Handler):
    """
    Records every log message as a LogEntry and, when asked to, echoes it to stderr so
    that stdout stays reserved for the command result.
    """

    messages: list[LogEntry]
    _should_print: bool

    def __init__(self, should_print: bool):
        super().__init__()
        self.messages = []
        self._should_print = should_print

    def handle(self, record: LogRecord) -> bool:
        entry = LogEntry(
            timestamp=time.asctime(time.localtime(record.created)),
            message=record.getMessage(),
        )
        self.messages.append(entry)
        if self._should_print:
            print(entry, file=sys.stderr)
        return True
