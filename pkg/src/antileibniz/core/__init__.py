from .field import QQ, Field, PrimeField, RationalField, Scalar, get_field
from .linalg import is_invertible, kernel, rank, solve, solve_invert
from .tensors import (
    act_on_axis,
    first_nonzero,
    interleave,
    one_based,
    outer,
    tau,
    tau12,
    tau13,
)

__all__ = [
    "QQ",
    "Field",
    "PrimeField",
    "RationalField",
    "Scalar",
    "act_on_axis",
    "first_nonzero",
    "get_field",
    "interleave",
    "is_invertible",
    "kernel",
    "one_based",
    "outer",
    "rank",
    "solve",
    "solve_invert",
    "tau",
    "tau12",
    "tau13",
]
