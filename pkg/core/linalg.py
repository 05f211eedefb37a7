"""
Exact linear algebra over the rationals.

Matrices are tuples of row tuples of ``Fraction``. Reduced row echelon form with
leading-one pivots is the canonical form of a row space.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from .exceptions import MismatchedBoundary

Row = Tuple[Fraction, ...]
Matrix = Tuple[Row, ...]


def as_matrix(rows: Sequence[Sequence], ncols: int) -> List[List[Fraction]]:
    matrix = []
    for row in rows:
        if len(row) != ncols:
            raise MismatchedBoundary(f"row of length {len(row)} in a matrix with {ncols} columns")
        matrix.append([Fraction(v) for v in row])
    return matrix


def rref(rows: Sequence[Sequence], ncols: int) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form; zero rows are dropped. Returns the rows and pivot columns."""
    matrix = as_matrix(rows, ncols)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][c]
        matrix[r] = [v / lead for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    return tuple(tuple(row) for row in matrix[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """A basis of ``{v : A v = 0}``, one vector per free column, in RREF."""
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return rref(basis, ncols)[0]


def left_nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """A basis of ``{c : c^T A = 0}``."""
    return nullspace(transpose(rows, ncols), len(rows))


def transpose(rows: Sequence[Sequence], ncols: int) -> Matrix:
    return tuple(tuple(Fraction(row[c]) for row in rows) for c in range(ncols))


def matvec(rows: Sequence[Sequence], vector: Sequence) -> Row:
    return tuple(sum((Fraction(a) * Fraction(b) for a, b in zip(row, vector)), Fraction(0)) for row in rows)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def in_row_space(rows: Sequence[Sequence], ncols: int, vector: Sequence) -> bool:
    return rank(list(rows) + [vector], ncols) == rank(rows, ncols)


def eliminate(rows: Sequence[Sequence], ncols: int, hidden: Sequence[int]) -> Matrix:
    """
    Project the solution set of ``A v = 0`` away from the ``hidden`` columns.

    Returns constraint rows over the kept columns (in their original order)
    whose solution set is exactly the projection.
    """
    hidden = list(hidden)
    kept = [c for c in range(ncols) if c not in set(hidden)]
    order = hidden + kept
    permuted = [[row[c] for c in order] for row in rows]
    reduced, pivots = rref(permuted, ncols)
    return tuple(row[len(hidden):] for row, p in zip(reduced, pivots) if p >= len(hidden))
