"""
Custom Exceptions for Thompson Automata
"""
from typing import Any, Optional

class ThompsonAutomataError(Exception):
    def __init__(self, message: str, error_code: str = "UNKNOWN"):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)

    def __str__(self):
        return f"[{self.error_code}] {self.message}"

class AutomatonError(ThompsonAutomataError):
    def __init__(self, message: str, error_code: str = "AUTOMATON_ERROR"):
        super().__init__(message, error_code)

class AlphabetError(AutomatonError):
    def __init__(self, message: str, letter: Any = None, position: Optional[int] = None):
        self.letter = letter
        self.position = position
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message, "ALPHABET_ERROR")

class AlphabetMismatchError(AutomatonError):
    def __init__(self, operation: str):
        super().__init__(f"{operation}: operands are over different alphabets", "ALPHABET_MISMATCH")

class DeterminismError(AutomatonError):
    def __init__(self, state: Any, letter: Any, count: int):
        self.state = state
        self.letter = letter
        super().__init__(
            f"{count} transitions enabled at state {state!r} on {letter!r}",
            "DETERMINISM_ERROR"
        )

class CounterUnderflowError(AutomatonError):
    def __init__(self, counter: int, state: Any = None):
        self.counter = counter
        super().__init__(f"counter {counter} decremented at zero (state {state!r})", "COUNTER_UNDERFLOW")

class TreeError(ThompsonAutomataError):
    def __init__(self, message: str, error_code: str = "TREE_ERROR"):
        super().__init__(message, error_code)

class DecodeError(TreeError):
    def __init__(self, message: str, condition: str = "unknown", position: Optional[int] = None):
        self.condition = condition
        self.position = position
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message, "DECODE_ERROR")

class ExpansionError(TreeError):
    def __init__(self, message: str):
        super().__init__(message, "EXPANSION_ERROR")

class ValidationError(ThompsonAutomataError):
    def __init__(self, message: str, field: str = "unknown", error_code: str = "VALIDATION_ERROR"):
        self.field = field
        super().__init__(message, error_code)

class ParseError(ValidationError):
    def __init__(self, message: str, position: Optional[int] = None, field: str = "input"):
        self.position = position
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message, field, "PARSE_ERROR")

class ResourceLimitError(ValidationError):
    def __init__(self, field: str, value: int, cap: int):
        super().__init__(f"{field}={value} exceeds configured cap {cap}", field, "RESOURCE_LIMIT")

class VerificationError(ThompsonAutomataError):
    def __init__(self, message: str):
        super().__init__(message, "VERIFICATION_ERROR")

def get_error_response(error: Exception) -> dict:
    if isinstance(error, ThompsonAutomataError):
        response = {
            "error": error.message,
            "error_code": error.error_code,
            "error_type": error.__class__.__name__
        }
        for extra in ("field", "position", "condition"):
            value = getattr(error, extra, None)
            if value is not None:
                response[extra] = value
        return response
    else:
        return {
            "error": str(error),
            "error_code": "UNKNOWN",
            "error_type": error.__class__.__name__
        }
