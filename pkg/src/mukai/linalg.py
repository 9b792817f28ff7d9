"""Exact linear algebra over the rationals.

Just enough Gaussian elimination to compute reduced row echelon forms,
ranks and nullspace bases of the small Gram matrices that appear as
obstruction maps.  Kernel basis vectors are normalized to primitive
integer vectors with positive leading entry, so results are canonical
and directly comparable across runs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .rational import as_matrix

__all__ = ["rref", "rank", "nullspace", "primitive"]


def rref(matrix) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form and the tuple of pivot column indices."""
    rows = [list(row) for row in as_matrix(matrix)]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def primitive(vector) -> tuple[Fraction, ...]:
    """Scale a rational vector to a primitive integer vector, leading entry > 0."""
    vec = [Fraction(v) for v in vector]
    if all(v == 0 for v in vec):
        return tuple(vec)
    scale = 1
    for v in vec:
        scale = scale * v.denominator // gcd(scale, v.denominator)
    ints = [int(v * scale) for v in vec]
    common = 0
    for v in ints:
        common = gcd(common, v)
    ints = [v // common for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(Fraction(v) for v in ints)


def nullspace(matrix) -> list[tuple[Fraction, ...]]:
    """Primitive basis of the right kernel, one vector per free column.

    The basis follows the usual free-variable parametrization of the
    reduced row echelon form, so it is deterministic.
    """
    mat = as_matrix(matrix)
    if not mat:
        return []
    ncols = len(mat[0])
    reduced, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][f]
        basis.append(primitive(vec))
    return basis
