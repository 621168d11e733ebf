"""Errors raised by genbell"""

from typing import Optional


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation"""


class CapacityError(ValueError):
    """The requested qubit count is above what can be held in memory"""


class StateFileError(ValueError):
    """A state file could not be parsed"""

    line: Optional[int]

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        """A state file error

        Args:
            message (str): What went wrong
            line (Optional[int], optional): 1-based line number of the offending line. Defaults to None.
        """
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StateValidationError(StateFileError):
    """A state file parsed but its amplitudes are too far from unit norm"""
