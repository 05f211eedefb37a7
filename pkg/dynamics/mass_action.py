"""
Mass-action dynamics of Petri nets with rates, evaluated exactly.

Each transition fires at its rate constant times the product of its input
concentrations raised to their multiplicities, and moves each place by its
net stoichiometry ``t(tau) - s(tau)``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Tuple

from core import linalg
from core.cospans import StructuredCospan, hcompose_pushout
from core.exceptions import InvalidStructure, MismatchedBoundary
from core.finset import FinFunction
from core.instances import PETRI_RATES, PetriWithRates

logger = logging.getLogger(__name__)

Concentration = Tuple[Fraction, ...]


def concentration(p: PetriWithRates, values: Sequence) -> Concentration:
    if len(values) != p.places.size:
        raise MismatchedBoundary(f"{len(values)} concentrations for {p.places.size} places")
    x = tuple(Fraction(v) for v in values)
    if any(v < 0 for v in x):
        raise InvalidStructure("concentrations must be nonnegative")
    return x


def transition_rate(p: PetriWithRates, transition: int, x: Sequence[Fraction]) -> Fraction:
    rate = p.rates[transition]
    for place, power in enumerate(p.src[transition].counts):
        if power:
            rate *= Fraction(x[place]) ** power
    return rate


def stoichiometric_matrix(p: PetriWithRates) -> linalg.Matrix:
    """Rows are places, columns transitions; entry ``t(tau)_s - s(tau)_s``."""
    return tuple(
        tuple(Fraction(p.tgt[tau].counts[s] - p.src[tau].counts[s]) for tau in range(p.transitions.size))
        for s in range(p.places.size)
    )


def vector_field(p: PetriWithRates, x: Sequence) -> Tuple[Fraction, ...]:
    x = concentration(p, x)
    v = [Fraction(0)] * p.places.size
    for tau in range(p.transitions.size):
        rate = transition_rate(p, tau, x)
        if not rate:
            continue
        for s in range(p.places.size):
            v[s] += rate * (p.tgt[tau].counts[s] - p.src[tau].counts[s])
    return tuple(v)


def vector_field_polynomial(p: PetriWithRates) -> Dict[Tuple[int, ...], Tuple[Fraction, ...]]:
    """The field as a polynomial: monomial exponents mapped to coefficient vectors."""
    terms: Dict[Tuple[int, ...], List[Fraction]] = {}
    for tau in range(p.transitions.size):
        monomial = p.src[tau].counts
        coefficients = terms.setdefault(monomial, [Fraction(0)] * p.places.size)
        for s in range(p.places.size):
            coefficients[s] += p.rates[tau] * (p.tgt[tau].counts[s] - p.src[tau].counts[s])
    return {m: tuple(c) for m, c in terms.items() if any(c)}


def conservation_laws(p: PetriWithRates) -> linalg.Matrix:
    """A basis of the linear functionals ``c`` with ``c . (t(tau) - s(tau)) = 0`` for every transition."""
    return linalg.left_nullspace(stoichiometric_matrix(p), p.transitions.size)


def is_steady(p: PetriWithRates, x: Sequence) -> bool:
    return not any(vector_field(p, x))


class EulerStep(NamedTuple):
    concentration: Concentration
    clamped: bool


def euler_step(p: PetriWithRates, x: Sequence, h) -> EulerStep:
    """``x + h v(x)``, clamped at zero."""
    h = Fraction(h)
    if h <= 0:
        raise InvalidStructure(f"step size must be positive, got {h}")
    x = concentration(p, x)
    raw = [xs + h * vs for xs, vs in zip(x, vector_field(p, x))]
    clamped = any(v < 0 for v in raw)
    if clamped:
        logger.debug("Euler step clamped a negative concentration to zero")
    return EulerStep(tuple(max(v, Fraction(0)) for v in raw), clamped)


def integrate(p: PetriWithRates, x: Sequence, h, steps: int) -> List[EulerStep]:
    trajectory = []
    current = concentration(p, x)
    for _ in range(steps):
        step = euler_step(p, current, h)
        trajectory.append(step)
        current = step.concentration
    return trajectory


def pushforward_field(v: Sequence[Fraction], g: FinFunction) -> Tuple[Fraction, ...]:
    """Sum a field on ``g.dom`` over the fibers of ``g``."""
    if len(v) != g.dom.size:
        raise MismatchedBoundary(f"field of length {len(v)} along a map from {g.dom.size}")
    out = [Fraction(0)] * g.cod.size
    for s, value in enumerate(v):
        out[g(s)] += value
    return tuple(out)


def restrict_concentration(x: Sequence, g: FinFunction) -> Concentration:
    """``x . g``: read a concentration on ``g.cod`` back along ``g``."""
    if len(x) != g.cod.size:
        raise MismatchedBoundary(f"concentration of length {len(x)} along a map into {g.cod.size}")
    return tuple(Fraction(x[g(s)]) for s in range(g.dom.size))


@dataclass(frozen=True)
class OpenDynamics:
    """An open Petri net with rates; its boundary legs pick out places."""

    cospan: StructuredCospan

    def __post_init__(self):
        if self.cospan.instance != PETRI_RATES:
            raise MismatchedBoundary(f"open dynamics need the petri_rates instance, not {self.cospan.instance.name}")

    @property
    def net(self) -> PetriWithRates:
        return self.cospan.apex

    @property
    def leg_in(self) -> FinFunction:
        return self.cospan.leg_in.g

    @property
    def leg_out(self) -> FinFunction:
        return self.cospan.leg_out.g

    def vector_field(self, x: Sequence) -> Tuple[Fraction, ...]:
        return vector_field(self.net, x)


class GluedDynamics(NamedTuple):
    composite: OpenDynamics
    left: FinFunction
    right: FinFunction


def compose_dynamics_with_legs(d1: OpenDynamics, d2: OpenDynamics) -> GluedDynamics:
    """The composite and the place maps of both parts into it."""
    cell, po = hcompose_pushout(d1.cospan, d2.cospan)
    return GluedDynamics(OpenDynamics(cell), po.left.g, po.right.g)


def compose_dynamics(d1: OpenDynamics, d2: OpenDynamics) -> OpenDynamics:
    return compose_dynamics_with_legs(d1, d2).composite


def glued_vector_field(d1: OpenDynamics, d2: OpenDynamics, x: Sequence) -> Tuple[Fraction, ...]:
    """``p1_* v1(x . p1) + p2_* v2(x . p2)`` on the places of the composite."""
    glued = compose_dynamics_with_legs(d1, d2)
    v1 = pushforward_field(d1.vector_field(restrict_concentration(x, glued.left)), glued.left)
    v2 = pushforward_field(d2.vector_field(restrict_concentration(x, glued.right)), glued.right)
    return tuple(a + b for a, b in zip(v1, v2))
