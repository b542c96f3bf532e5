"""
Run event logger with Singleton pattern and bounded history.

Architecture:
- Singleton: Thread-safe instance
- Immediate emission on the `biasplan` standard library logger
- Bounded in-memory history, used to attach context to failure reports
- Ordering: Monotonic sequence number + application timestamp
"""

import logging
import threading
from collections import deque
from datetime import datetime, timezone
from typing import Any, Deque, Dict, List, NamedTuple, Optional

from .config import settings
from .enums import EventLevel

_stdlib_logger = logging.getLogger("biasplan")


class LogEvent(NamedTuple):
    sequence: int
    timestamp: datetime
    run_id: str
    level: EventLevel
    content: Dict[str, Any]


class LoggerSingleton:
    """
    Thread-safe Singleton Logger.

    Every event is keyed by a run id (an instance label or a suite name) so
    that events of interleaved runs can be told apart afterwards.
    """

    _instance: Optional["LoggerSingleton"] = None
    _lock = threading.Lock()

    def __new__(cls, history_size: int = 1000):
        """Thread-safe singleton implementation using double-checked locking."""
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = super().__new__(cls)
                    cls._instance._initialized = False
        return cls._instance

    def __init__(self, history_size: int = 1000):
        """
        Initialize the Logger singleton.

        Args:
            history_size: Number of most recent events kept in memory
        """
        if self._initialized:
            return

        self._initialized = True
        self._history: Deque[LogEvent] = deque(maxlen=history_size)
        self._sequence_counter = 0
        self._sequence_lock = threading.Lock()

        _stdlib_logger.setLevel(settings.LOG_LEVEL)

    def _get_next_sequence(self) -> int:
        with self._sequence_lock:
            self._sequence_counter += 1
            return self._sequence_counter

    def _log(self, run_id: str, level: EventLevel, content: Dict[str, Any]) -> None:
        event = LogEvent(
            sequence=self._get_next_sequence(),
            timestamp=datetime.now(timezone.utc),
            run_id=str(run_id),
            level=level,
            content=content,
        )
        with self._sequence_lock:
            self._history.append(event)
        _stdlib_logger.log(
            level.logging_level, "[%s] %s %s", event.run_id, level.value, content
        )

    # Public API methods

    def info(self, run_id: str, message: Dict[str, Any]) -> None:
        self._log(run_id, EventLevel.INFO, message)

    def error(self, run_id: str, message: Dict[str, Any]) -> None:
        self._log(run_id, EventLevel.FAILED, message)

    def warn(self, run_id: str, message: Dict[str, Any]) -> None:
        self._log(run_id, EventLevel.WARNING, message)

    def debug(self, run_id: str, message: Dict[str, Any]) -> None:
        self._log(run_id, EventLevel.DEBUG, message)

    def success(self, run_id: str, message: Dict[str, Any]) -> None:
        self._log(run_id, EventLevel.SUCCESS, message)

    def completed(self, run_id: str, message: Dict[str, Any]) -> None:
        self._log(run_id, EventLevel.COMPLETED, message)

    def pending(self, run_id: str, message: Dict[str, Any]) -> None:
        self._log(run_id, EventLevel.PENDING, message)

    def history(self, run_id: Optional[str] = None) -> List[LogEvent]:
        """Recorded events in emission order, optionally only those of one run."""
        with self._sequence_lock:
            events = list(self._history)
        if run_id is None:
            return events
        return [event for event in events if event.run_id == run_id]

    def clear(self) -> None:
        with self._sequence_lock:
            self._history.clear()


# Global singleton instance
_logger = LoggerSingleton()


# Export the singleton instance as Logger
Logger = _logger
