"""
Black-box semantics of resistor circuits.

A circuit is a structured cospan of labeled graphs whose edge labels are
resistances. Its black box is the linear relation it imposes between the
potentials and currents on its input ports and those on its output ports.
Input currents flow into the circuit and output currents flow out.
"""

import logging
from fractions import Fraction
from typing import Sequence

from core import linalg
from core.cospans import StructuredCospan
from core.exceptions import MismatchedBoundary, NonpositiveResistance
from core.finset import FinFunction
from core.instances import LGRAPH, LGraph

from .relations import LinearRelation

logger = logging.getLogger(__name__)


def resistances(c: StructuredCospan) -> Sequence[Fraction]:
    if c.instance != LGRAPH:
        raise MismatchedBoundary(f"circuits live in the lgraph instance, not {c.instance.name}")
    values = []
    for e, label in enumerate(c.apex.labels):
        try:
            R = Fraction(label)
        except (TypeError, ValueError, ZeroDivisionError):
            raise NonpositiveResistance(f"edge {e} has label {label!r}, not a resistance")
        if R <= 0:
            raise NonpositiveResistance(f"edge {e} has resistance {R}")
        values.append(R)
    return values


def blackbox(c: StructuredCospan) -> LinearRelation:
    """
    Kirchhoff and Ohm on the apex, then project onto the ports.

    Columns are (phi_X, iota_X, phi_Y, omega_Y, node potentials, edge
    currents); the last two blocks are eliminated.
    """
    R = resistances(c)
    graph = c.apex.graph
    X, Y = c.foot_in.size, c.foot_out.size
    N, E = graph.nodes.size, graph.edges.size
    phi_x, iota_x, phi_y, omega_y = 0, X, 2 * X, 2 * X + Y
    node, current = 2 * (X + Y), 2 * (X + Y) + N
    width = current + E

    rows = []
    for e in range(E):
        row = [Fraction(0)] * width
        row[node + graph.tgt(e)] += 1
        row[node + graph.src(e)] -= 1
        row[current + e] -= R[e]
        rows.append(row)

    balance = [[Fraction(0)] * width for _ in range(N)]
    for e in range(E):
        balance[graph.tgt(e)][current + e] += 1
        balance[graph.src(e)][current + e] -= 1
    for x in range(X):
        balance[c.leg_in.g(x)][iota_x + x] += 1
    for y in range(Y):
        balance[c.leg_out.g(y)][omega_y + y] -= 1
    rows.extend(balance)

    for offset, leg, count in ((phi_x, c.leg_in.g, X), (phi_y, c.leg_out.g, Y)):
        for k in range(count):
            row = [Fraction(0)] * width
            row[offset + k] = Fraction(1)
            row[node + leg(k)] -= 1
            rows.append(row)

    kept = linalg.eliminate(rows, width, range(node, width))
    relation = LinearRelation.from_constraints(2 * X, 2 * Y, kept)
    logger.debug(f"Black box of a circuit with {N} nodes and {E} edges has dimension {relation.dimension}")
    return relation


def circuit(nodes: int, edges, values, leg_in: Sequence[int], leg_out: Sequence[int]) -> StructuredCospan:
    """Build a circuit from ``(source, target)`` pairs, resistances and port nodes."""
    apex = LGraph.from_edges(nodes, list(edges), [Fraction(r) for r in values])
    return StructuredCospan.from_maps(
        LGRAPH, apex, FinFunction.from_list(list(leg_in), nodes), FinFunction.from_list(list(leg_out), nodes)
    )


def resistor(resistance) -> StructuredCospan:
    return circuit(2, [(0, 1)], [resistance], [0], [1])


def series(values) -> StructuredCospan:
    """Resistors end to end between one input and one output."""
    values = list(values)
    return circuit(len(values) + 1, [(i, i + 1) for i in range(len(values))], values, [0], [len(values)])


def parallel(values) -> StructuredCospan:
    """Resistors side by side between one input and one output."""
    values = list(values)
    return circuit(2, [(0, 1)] * len(values), values, [0], [1])
