"""
Linear relations over the rationals.

A relation ``m -> n`` is a subspace of Q^m + Q^n held as a basis in reduced
row echelon form, so equal subspaces have equal bases.

Circuit boundaries use a fixed port convention: each side lists the port
potentials first and the port currents second.
"""

from dataclasses import dataclass
from typing import NamedTuple, Sequence, Tuple

from core import linalg
from core.exceptions import MismatchedBoundary, NonpositiveResistance
from core.validators import InputValidator


@dataclass(frozen=True)
class LinearRelation:
    dim_in: int
    dim_out: int
    basis: linalg.Matrix

    @classmethod
    def from_generators(cls, dim_in: int, dim_out: int, rows: Sequence[Sequence]) -> 'LinearRelation':
        return cls(dim_in, dim_out, linalg.rref(rows, dim_in + dim_out)[0])

    @classmethod
    def from_constraints(cls, dim_in: int, dim_out: int, rows: Sequence[Sequence]) -> 'LinearRelation':
        """The solution space of ``rows . v = 0``."""
        return cls(dim_in, dim_out, linalg.nullspace(rows, dim_in + dim_out))

    @classmethod
    def identity(cls, n: int) -> 'LinearRelation':
        rows = []
        for i in range(n):
            row = [0] * (2 * n)
            row[i] = row[n + i] = 1
            rows.append(row)
        return cls.from_generators(n, n, rows)

    @classmethod
    def full(cls, dim_in: int, dim_out: int) -> 'LinearRelation':
        return cls.from_constraints(dim_in, dim_out, [])

    @property
    def width(self) -> int:
        return self.dim_in + self.dim_out

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def constraints(self) -> linalg.Matrix:
        """A basis of the annihilator: the linear equations cutting out the relation."""
        return linalg.nullspace(self.basis, self.width)

    def contains(self, vector: Sequence) -> bool:
        if len(vector) != self.width:
            raise MismatchedBoundary(f"vector of length {len(vector)} for a relation of width {self.width}")
        return linalg.in_row_space(self.basis, self.width, vector)

    def transpose(self) -> 'LinearRelation':
        rows = [row[self.dim_in:] + row[:self.dim_in] for row in self.basis]
        return LinearRelation.from_generators(self.dim_out, self.dim_in, rows)

    def permute(self, columns: Sequence[int], dim_in: int = None) -> 'LinearRelation':
        """Reorder coordinates: new coordinate j is old coordinate ``columns[j]``."""
        if sorted(columns) != list(range(self.width)):
            raise MismatchedBoundary("column order must be a permutation")
        dim_in = self.dim_in if dim_in is None else dim_in
        rows = [[row[c] for c in columns] for row in self.basis]
        return LinearRelation.from_generators(dim_in, self.width - dim_in, rows)

    def __str__(self):
        header = f"LinearRelation {self.dim_in} -> {self.dim_out}, dimension {self.dimension}"
        lines = ["[" + ", ".join(str(v) for v in row) + "]" for row in self.basis]
        return "\n".join([header] + lines)


def resistor_relation(resistance) -> LinearRelation:
    """``I1 = I2`` and ``phi2 - phi1 = R I1`` over (phi1, I1, phi2, I2)."""
    R = InputValidator.validate_fraction(resistance)
    if R <= 0:
        raise NonpositiveResistance(f"resistance must be positive, got {R}")
    return LinearRelation.from_generators(2, 2, [[1, 0, 1, 0], [0, 1, R, 1]])


def compose_relations(r1: LinearRelation, r2: LinearRelation) -> LinearRelation:
    """``{(v, u) : (v, w) in r1 and (w, u) in r2 for some w}``."""
    if r1.dim_out != r2.dim_in:
        raise MismatchedBoundary(f"cannot compose relations through {r1.dim_out} and {r2.dim_in} coordinates")
    m, k, n = r1.dim_in, r1.dim_out, r2.dim_out
    rows = [list(row) + [0] * n for row in r1.constraints()]
    rows += [[0] * m + list(row) for row in r2.constraints()]
    kept = linalg.eliminate(rows, m + k + n, range(m, m + k))
    return LinearRelation.from_constraints(m, n, kept)


def direct_sum(r1: LinearRelation, r2: LinearRelation) -> LinearRelation:
    """
    Block sum ``r1 + r2 : m1 + m2 -> n1 + n2``.

    A vector lists the inputs of ``r1``, then the inputs of ``r2``, then the
    outputs of ``r1``, then the outputs of ``r2``: (in1, in2 | out1, out2).
    Port relations want potentials and currents grouped instead; see
    ``port_tensor``.
    """
    m1, n1, m2, n2 = r1.dim_in, r1.dim_out, r2.dim_in, r2.dim_out
    rows = [list(row[:m1]) + [0] * m2 + list(row[m1:]) + [0] * n2 for row in r1.basis]
    rows += [[0] * m1 + list(row[:m2]) + [0] * n1 + list(row[m2:]) for row in r2.basis]
    return LinearRelation.from_generators(m1 + m2, n1 + n2, rows)


def _port_order(ports1: int, ports2: int, offset: int) -> Tuple[int, ...]:
    """Block order (phi1, I1, phi2, I2) rearranged into (phi1, phi2, I1, I2)."""
    phi1 = range(offset, offset + ports1)
    cur1 = range(offset + ports1, offset + 2 * ports1)
    phi2 = range(offset + 2 * ports1, offset + 2 * ports1 + ports2)
    cur2 = range(offset + 2 * ports1 + ports2, offset + 2 * (ports1 + ports2))
    return tuple(phi1) + tuple(phi2) + tuple(cur1) + tuple(cur2)


def port_tensor(r1: LinearRelation, r2: LinearRelation) -> LinearRelation:
    """Direct sum rearranged so each side lists all potentials, then all currents."""
    if r1.dim_in % 2 or r1.dim_out % 2 or r2.dim_in % 2 or r2.dim_out % 2:
        raise MismatchedBoundary("port relations have an even number of coordinates on each side")
    summed = direct_sum(r1, r2)
    columns = _port_order(r1.dim_in // 2, r2.dim_in // 2, 0)
    columns += _port_order(r1.dim_out // 2, r2.dim_out // 2, summed.dim_in)
    return summed.permute(columns)


class FrobeniusRelations(NamedTuple):
    mult: LinearRelation
    unit: LinearRelation
    comult: LinearRelation
    counit: LinearRelation


def frobenius_relations() -> FrobeniusRelations:
    """Potentials equalize and currents add, on one port of Q^2."""
    # (phi1, phi2, I1, I2 | phi3, I3)
    mult = LinearRelation.from_constraints(4, 2, [
        [1, -1, 0, 0, 0, 0],
        [0, 1, 0, 0, -1, 0],
        [0, 0, 1, 1, 0, -1],
    ])
    unit = LinearRelation.from_constraints(0, 2, [[0, 1]])
    return FrobeniusRelations(mult, unit, mult.transpose(), unit.transpose())
