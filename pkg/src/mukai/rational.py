"""Small helpers for exact rational scalars, vectors and matrices.

Everything in the package computes over ``fractions.Fraction``; floats are
never accepted, so a binary-float rounding artifact can never masquerade as
an intersection number.
"""

from __future__ import annotations

from fractions import Fraction

Rational = int | Fraction | str

__all__ = [
    "Rational",
    "as_fraction",
    "as_vector",
    "as_matrix",
    "format_fraction",
    "is_integral",
    "identity_matrix",
    "mat_mul",
    "mat_vec",
    "transpose",
]


def as_fraction(value: Rational) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact Fraction.

    Floats are rejected on purpose: intersection numbers must stay exact.
    """
    if isinstance(value, bool):
        raise TypeError(f"expected a rational number, got bool {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected int, Fraction or 'p/q' string, got {type(value).__name__}")


def as_vector(values) -> tuple[Fraction, ...]:
    return tuple(as_fraction(v) for v in values)


def as_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    matrix = tuple(as_vector(row) for row in rows)
    if matrix and any(len(row) != len(matrix[0]) for row in matrix):
        raise ValueError("ragged matrix")
    return matrix


def format_fraction(value: Fraction) -> str:
    """Render ``p/q`` with the slash omitted for integers."""
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integral(*values) -> bool:
    """True when every (possibly nested) value is an integer rational."""
    for v in values:
        if isinstance(v, (tuple, list)):
            if not is_integral(*v):
                return False
        elif as_fraction(v).denominator != 1:
            return False
    return True


def identity_matrix(n: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def transpose(matrix):
    return tuple(zip(*matrix)) if matrix else ()


def mat_vec(matrix, vector) -> tuple[Fraction, ...]:
    if matrix and len(matrix[0]) != len(vector):
        raise ValueError("matrix/vector size mismatch")
    return tuple(sum((row[j] * vector[j] for j in range(len(vector))), Fraction(0)) for row in matrix)


def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix size mismatch")
    bt = transpose(b)
    return tuple(
        tuple(sum((row[k] * col[k] for k in range(len(row))), Fraction(0)) for col in bt)
        for row in a
    )
