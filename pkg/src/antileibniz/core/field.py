"""
Exact scalar fields.

Two concrete fields are provided: the rationals, stored as numpy object arrays
of ``fractions.Fraction``, and prime fields GF(p), stored as ``galois`` field
arrays. Every structure in the package carries one ``Field`` and builds all of
its arrays through it, so arithmetic never leaves the field.
"""
import logging
import re
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Any, List, Sequence, Tuple, Union

import galois
import numpy as np

from ..errors import BadParameter, DivisionByZero, FieldMismatch

logger = logging.getLogger(__name__)

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_RESIDUE = re.compile(r"^\s*([+-]?\d+)\s+mod\s+(\d+)\s*$")
_FIELD_NAME = re.compile(r"^\s*(?:gf\s*\(?\s*(\d+)\s*\)?|(q|qq|rational|rationals))\s*$",
                         re.IGNORECASE)


class Field(ABC):
    """Common interface of the exact fields."""

    name: str
    characteristic: int

    @abstractmethod
    def element(self, value: Any) -> Any:
        """Coerces a Python number into a native field element."""

    @abstractmethod
    def array(self, values: Any) -> np.ndarray:
        """Builds a field array from nested numbers of any shape."""

    @abstractmethod
    def zeros(self, shape: Union[int, Tuple[int, ...]]) -> np.ndarray:
        pass

    @abstractmethod
    def eye(self, n: int) -> np.ndarray:
        pass

    @abstractmethod
    def parse(self, text: str) -> Any:
        """Parses the serialized scalar form used in structure files."""

    @abstractmethod
    def format(self, value: Any) -> str:
        """Renders a native element in the serialized scalar form."""

    @abstractmethod
    def rref(self, matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
        """Returns the reduced row echelon form and its pivot columns."""

    @abstractmethod
    def inverse(self, value: Any) -> Any:
        pass

    def one(self) -> Any:
        return self.element(1)

    def zero(self) -> Any:
        return self.element(0)

    def nonzero_mask(
            self,
            values: np.ndarray
    ) -> np.ndarray:
        return np.asarray(np.asarray(values) != 0, dtype=bool)

    def is_zero(
            self,
            values: np.ndarray
    ) -> bool:
        return not bool(self.nonzero_mask(values).any())

    def format_array(
            self,
            values: np.ndarray
    ) -> list:
        """Nested lists of serialized scalars."""
        flat = [self.format(v) for v in np.asarray(values).reshape(-1)]
        return np.array(flat, dtype=object).reshape(np.shape(values)).tolist()

    def random(
            self,
            rng: np.random.Generator,
            shape: Union[int, Tuple[int, ...]],
            values: Sequence[int] = (-1, 0, 1),
            weights: Union[Sequence[float], None] = None
    ) -> np.ndarray:
        """
        Draws an array whose entries are sampled from small integers.

        param: rng; Seeded generator. (np.random.Generator)
        param: shape; Output shape. (int or tuple)
        param: values; Integers to sample from. Default is (-1, 0, 1).
         (Sequence[int])
        param: weights; Optional sampling probabilities. (Sequence[float])
        :return: Field array of the requested shape. (np.ndarray)
        """
        picks = rng.choice(np.asarray(values), size=shape, p=weights)
        return self.array(picks.tolist())

    def __repr__(self) -> str:
        return self.name

    def __reduce__(self):
        return get_field, (self.name,)


class RationalField(Field):
    """The field of rational numbers with exact ``Fraction`` entries."""

    def __init__(self):
        self.name = "Q"
        self.characteristic = 0
        self._coerce = np.frompyfunc(self.element, 1, 1)

    def element(
            self,
            value: Any
    ) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (bool, np.bool_)):
            return Fraction(int(value))
        if isinstance(value, (int, np.integer)):
            return Fraction(int(value))
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatch(f"cannot use a {value.field} scalar in {self}")
            return value.value
        if isinstance(value, galois.FieldArray):
            raise FieldMismatch(f"cannot use a GF({type(value).order}) value in Q")
        raise FieldMismatch(f"cannot coerce {value!r} into Q")

    def array(
            self,
            values: Any
    ) -> np.ndarray:
        raw = np.array(values, dtype=object)
        if raw.ndim == 0:
            return np.array(self.element(raw.item()), dtype=object)
        return np.asarray(self._coerce(raw), dtype=object)

    def zeros(
            self,
            shape: Union[int, Tuple[int, ...]]
    ) -> np.ndarray:
        return np.full(shape, Fraction(0), dtype=object)

    def eye(
            self,
            n: int
    ) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = Fraction(1)
        return out

    def parse(
            self,
            text: str
    ) -> Fraction:
        match = _RATIONAL.match(str(text))
        if match is None:
            if _RESIDUE.match(str(text)):
                raise FieldMismatch(f"residue '{text}' is not a rational scalar")
            raise BadParameter(f"cannot parse rational scalar '{text}'")
        numerator, denominator = match.group(1), match.group(2)
        if denominator is not None and int(denominator) == 0:
            raise DivisionByZero(f"zero denominator in '{text}'")
        return Fraction(int(numerator), int(denominator or 1))

    def format(
            self,
            value: Any
    ) -> str:
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def inverse(
            self,
            value: Any
    ) -> Fraction:
        value = self.element(value)
        if value == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / value

    def rref(
            self,
            matrix: np.ndarray
    ) -> Tuple[np.ndarray, List[int]]:
        reduced = self.array(matrix).copy()
        rows, cols = reduced.shape
        pivots: List[int] = []
        row = 0
        for col in range(cols):
            if row == rows:
                break
            candidates = [i for i in range(row, rows) if reduced[i, col] != 0]
            if not candidates:
                continue
            pivot = candidates[0]
            if pivot != row:
                reduced[[row, pivot]] = reduced[[pivot, row]]
            reduced[row] = reduced[row] / reduced[row, col]
            for i in range(rows):
                if i != row and reduced[i, col] != 0:
                    reduced[i] = reduced[i] - reduced[i, col] * reduced[row]
            pivots.append(col)
            row += 1
        return reduced, pivots


class PrimeField(Field):
    """GF(p) backed by ``galois.GF``."""

    def __init__(
            self,
            p: int
    ):
        """
        param: p; Prime modulus. (int)
        """
        try:
            self.gf = galois.GF(int(p))
        except (ValueError, TypeError) as e:
            logger.error(f"Invalid prime field order {p}: {e}")
            raise BadParameter(f"GF({p}) is not a prime field: {e}") from e
        if self.gf.degree != 1:
            raise BadParameter(f"GF({p}) is not a prime field")
        self.p = int(p)
        self.name = f"GF({self.p})"
        self.characteristic = self.p

    def _residue(
            self,
            value: Any
    ) -> int:
        if isinstance(value, (bool, np.bool_)):
            return int(value) % self.p
        if isinstance(value, (int, np.integer)):
            return int(value) % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"{value} has no image in {self.name}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatch(f"cannot use a {value.field} scalar in {self}")
            return int(value.value)
        if isinstance(value, galois.FieldArray):
            if type(value).order != self.p:
                raise FieldMismatch(
                    f"cannot use a GF({type(value).order}) value in {self.name}"
                )
            return int(value)
        if isinstance(value, str):
            return int(self.parse(value))
        raise FieldMismatch(f"cannot coerce {value!r} into {self.name}")

    def element(
            self,
            value: Any
    ) -> galois.FieldArray:
        return self.gf(self._residue(value))

    def array(
            self,
            values: Any
    ) -> galois.FieldArray:
        if isinstance(values, galois.FieldArray):
            if type(values).order != self.p:
                raise FieldMismatch(
                    f"cannot use GF({type(values).order}) data in {self.name}"
                )
            return values.copy()
        raw = np.array(values, dtype=object)
        residues = np.vectorize(self._residue, otypes=[np.int64])(raw) \
            if raw.size else raw.astype(np.int64)
        return self.gf(np.asarray(residues, dtype=np.int64))

    def zeros(
            self,
            shape: Union[int, Tuple[int, ...]]
    ) -> galois.FieldArray:
        return self.gf.Zeros(shape)

    def eye(
            self,
            n: int
    ) -> galois.FieldArray:
        return self.gf.Identity(n)

    def parse(
            self,
            text: str
    ) -> galois.FieldArray:
        match = _RESIDUE.match(str(text))
        if match is None:
            raise FieldMismatch(
                f"'{text}' is not a {self.name} scalar (expected 'r mod {self.p}')"
            )
        residue, modulus = int(match.group(1)), int(match.group(2))
        if modulus != self.p:
            raise FieldMismatch(f"'{text}' belongs to GF({modulus}), not {self.name}")
        return self.gf(residue % self.p)

    def format(
            self,
            value: Any
    ) -> str:
        return f"{int(value)} mod {self.p}"

    def inverse(
            self,
            value: Any
    ) -> galois.FieldArray:
        value = self.element(value)
        if value == 0:
            raise DivisionByZero(f"inverse of zero in {self.name}")
        return value ** -1

    def rref(
            self,
            matrix: np.ndarray
    ) -> Tuple[np.ndarray, List[int]]:
        reduced = self.array(matrix)
        if reduced.size:
            reduced = reduced.row_reduce()
        pivots = []
        for row in reduced:
            nonzero = np.flatnonzero(np.asarray(row != 0))
            if nonzero.size:
                pivots.append(int(nonzero[0]))
        return reduced, pivots


@lru_cache(maxsize=None)
def _cached_field(key: str) -> Field:
    if key == "Q":
        return RationalField()
    return PrimeField(int(key))


def get_field(name: Union[str, int, Field]) -> Field:
    """
    Resolves a field by name, returning a shared instance per field.

    param: name; "Q", "GF(p)", "gf3" or a prime. (str or int)
    :return: The field. (Field)
    """
    if isinstance(name, Field):
        return name
    if isinstance(name, (int, np.integer)):
        return _cached_field(str(int(name)))
    match = _FIELD_NAME.match(str(name))
    if match is None:
        logger.error(f"Unknown field '{name}'")
        raise BadParameter(f"unknown field '{name}' (use 'Q' or 'GF(p)')")
    if match.group(2):
        return _cached_field("Q")
    return _cached_field(str(int(match.group(1))))


QQ = get_field("Q")


@total_ordering
class Scalar:
    """
    A single field element bound to its field.

    Arithmetic between scalars of different fields raises ``FieldMismatch``;
    division by zero raises ``DivisionByZero``.
    """

    __slots__ = ("field", "value")

    def __init__(
            self,
            value: Any,
            field: Union[Field, str] = "Q"
    ):
        field = get_field(field)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.element(value))

    def __setattr__(self, key, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def parse(
            cls,
            text: str,
            field: Union[Field, str, None] = None
    ) -> "Scalar":
        """Parses "p/q", "n" or "r mod p"; the field is inferred when omitted."""
        if field is None:
            match = _RESIDUE.match(text)
            field = get_field(int(match.group(2))) if match else QQ
        field = get_field(field)
        return cls(field.parse(text), field)

    def _other(
            self,
            other: Any
    ) -> Any:
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise FieldMismatch(f"cannot combine {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction, np.integer)):
            return self.field.element(other)
        return NotImplemented

    def _wrap(self, value: Any) -> "Scalar":
        return Scalar(value, self.field)

    def __add__(self, other):
        value = self._other(other)
        return NotImplemented if value is NotImplemented else self._wrap(self.value + value)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._other(other)
        return NotImplemented if value is NotImplemented else self._wrap(self.value - value)

    def __rsub__(self, other):
        value = self._other(other)
        return NotImplemented if value is NotImplemented else self._wrap(value - self.value)

    def __mul__(self, other):
        value = self._other(other)
        return NotImplemented if value is NotImplemented else self._wrap(self.value * value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        value = self._other(other)
        if value is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * self.field.inverse(value))

    def __rtruediv__(self, other):
        value = self._other(other)
        if value is NotImplemented:
            return NotImplemented
        return self._wrap(value * self.field.inverse(self.value))

    def __neg__(self):
        return self._wrap(-self.value)

    def inv(self) -> "Scalar":
        return self._wrap(self.field.inverse(self.value))

    def is_zero(self) -> bool:
        return bool(self.value == 0)

    def __eq__(self, other):
        value = self._other(other)
        if value is NotImplemented:
            return NotImplemented
        return bool(self.value == value)

    def __lt__(self, other):
        if self.field.characteristic:
            raise TypeError(f"{self.field} is not ordered")
        value = self._other(other)
        if value is NotImplemented:
            return NotImplemented
        return self.value < value

    def __hash__(self):
        return hash((self.field.name, self.field.format(self.value)))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar('{self}', {self.field.name})"
