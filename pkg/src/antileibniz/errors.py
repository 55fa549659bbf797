"""
Exception hierarchy shared by every module of the package.

Identity violations are reported through ``Report`` objects, never raised.
The classes below cover bad input, unmet preconditions and resource limits.
"""
from typing import Optional


class AntiLeibnizError(Exception):
    """Root of all errors raised by antileibniz."""


class DivisionByZero(AntiLeibnizError, ZeroDivisionError):
    pass


class FieldMismatch(AntiLeibnizError, TypeError):
    pass


class DimensionMismatch(AntiLeibnizError, ValueError):
    pass


class NotInvertible(AntiLeibnizError, ArithmeticError):
    def __init__(
            self,
            rank: int,
            message: Optional[str] = None
    ):
        """
        param: rank; Rank of the singular matrix. (int)
        param: message; Optional override of the default message. (str)
        """
        self.rank = rank
        super().__init__(message or f"matrix is not invertible (rank={rank})")


class PreconditionViolated(AntiLeibnizError, ValueError):
    pass


class NotFactorizable(AntiLeibnizError, ValueError):
    pass


class NotSymmetric(AntiLeibnizError, ValueError):
    pass


class ZeroWeight(AntiLeibnizError, ValueError):
    pass


class WindowOverflow(AntiLeibnizError, IndexError):
    pass


class BudgetExceeded(AntiLeibnizError, RuntimeError):
    pass


class UnknownFixture(AntiLeibnizError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown fixture"


class BadParameter(AntiLeibnizError, ValueError):
    pass


class ParseError(AntiLeibnizError, ValueError):
    def __init__(
            self,
            message: str,
            line: int = 0,
            col: int = 0
    ):
        self.line = line
        self.col = col
        super().__init__(f"{message} (line {line}, column {col})")


class SchemaError(AntiLeibnizError, ValueError):
    def __init__(
            self,
            message: str,
            field: str = ""
    ):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)
