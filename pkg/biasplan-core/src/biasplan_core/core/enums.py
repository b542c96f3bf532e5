import logging
from enum import Enum


class EventLevel(str, Enum):
    # Standard log levels
    INFO = "INFO"
    WARNING = "WARNING"
    FAILED = "FAILED"
    SUCCESS = "SUCCESS"
    DEBUG = "DEBUG"
    # Run statuses
    PENDING = "PENDING"
    COMPLETED = "COMPLETED"

    @property
    def logging_level(self) -> int:
        """Standard library level the event is emitted at."""
        if self == EventLevel.DEBUG:
            return logging.DEBUG
        if self == EventLevel.WARNING:
            return logging.WARNING
        if self == EventLevel.FAILED:
            return logging.ERROR
        return logging.INFO


class OutputFormat(str, Enum):
    TEXT = "text"
    RECORD = "record"
    JSON = "json"
