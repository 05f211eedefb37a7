"""
The vector field of a glued reaction network is the sum of the fields of its
parts, pushed forward along the gluing.
"""

from fractions import Fraction

import pytest
import factory.random

from core import linalg
from core.exceptions import InvalidStructure, MismatchedBoundary
from core.instances import PetriWithRates, petri_net
from dynamics.mass_action import (
    OpenDynamics,
    compose_dynamics,
    conservation_laws,
    euler_step,
    glued_vector_field,
    integrate,
    is_steady,
    stoichiometric_matrix,
    vector_field,
    vector_field_polynomial,
)

from .factories import OpenGraphFactory, OpenPetriWithRatesFactory, PetriWithRatesFactory, chain, random_rational

SEEDS = range(50)


def random_concentration(size):
    return [random_rational(0, 4) for _ in range(size)]


@pytest.mark.parametrize('seed', SEEDS)
def test_glued_field_is_field_of_composite(seed):
    factory.random.reseed_random(seed)
    c1, c2 = chain(OpenPetriWithRatesFactory, 2)
    d1, d2 = OpenDynamics(c1), OpenDynamics(c2)
    composite = compose_dynamics(d1, d2)

    for _ in range(3):
        x = random_concentration(composite.net.places.size)
        assert composite.vector_field(x) == glued_vector_field(d1, d2, x)


@pytest.mark.parametrize('seed', range(25))
def test_conservation_laws_annihilate_the_field(seed):
    factory.random.reseed_random(seed)
    net = OpenPetriWithRatesFactory().apex
    laws = conservation_laws(net)
    assert len(laws) == net.places.size - linalg.rank(stoichiometric_matrix(net), net.transitions.size)

    for coefficients in vector_field_polynomial(net).values():
        assert all(linalg.dot(law, coefficients) == 0 for law in laws)
    x = random_concentration(net.places.size)
    assert all(linalg.dot(law, vector_field(net, x)) == 0 for law in laws)


@pytest.mark.parametrize('seed', range(25))
def test_field_is_linear_in_the_rates(seed):
    factory.random.reseed_random(seed)
    net = PetriWithRatesFactory()
    other = PetriWithRatesFactory(net=net.net)
    x = random_concentration(net.places.size)
    k = random_rational()

    scaled = PetriWithRates(net.net, [k * r for r in net.rates])
    assert vector_field(scaled, x) == tuple(k * v for v in vector_field(net, x))

    summed = PetriWithRates(net.net, [r + s for r, s in zip(net.rates, other.rates)])
    expected = tuple(u + v for u, v in zip(vector_field(net, x), vector_field(other, x)))
    assert vector_field(summed, x) == expected


def test_source_free_transition_is_a_constant_inflow():
    inflow = PetriWithRates(petri_net(1, [({}, {0: 2})]), [3])
    assert vector_field(inflow, [0]) == (6,)
    assert vector_field(inflow, [Fraction(5, 2)]) == (6,)
    assert not is_steady(inflow, [0])


def test_balanced_exchange_is_steady():
    exchange = PetriWithRates(petri_net(2, [({0: 1}, {1: 1}), ({1: 1}, {0: 1})]), [1, 1])
    assert is_steady(exchange, [3, 3])
    assert vector_field(exchange, [3, 1]) == (-2, 2)
    assert not is_steady(exchange, [3, 1])


def test_water_field(water):
    assert vector_field(water.apex, [1, 1, 0]) == (-2, -1, 1)
    assert vector_field(water.apex, [2, 3, 5]) == (-24, -12, 12)
    assert vector_field_polynomial(water.apex) == {(2, 1, 0): (-2, -1, 1)}


def test_water_conserves_hydrogen_and_oxygen(water):
    # H + 2 H2O and O + H2O
    assert conservation_laws(water.apex) == ((1, 0, 2), (0, 1, 1))


def test_steady_states(water):
    assert is_steady(water.apex, [0, 1, 3])
    assert is_steady(water.apex, [2, 0, 0])
    assert is_steady(water.apex, [0, 0, 0])
    assert not is_steady(water.apex, [1, 1, 0])


def test_euler_steps(water):
    step = euler_step(water.apex, [1, 1, 0], Fraction(1, 10))
    assert step.concentration == (Fraction(4, 5), Fraction(9, 10), Fraction(1, 10))
    assert not step.clamped

    step = euler_step(water.apex, [1, 1, 0], 1)
    assert step.concentration == (0, 0, 1)
    assert step.clamped

    trajectory = integrate(water.apex, [1, 1, 0], Fraction(1, 10), 3)
    assert len(trajectory) == 3
    assert trajectory[0] == euler_step(water.apex, [1, 1, 0], Fraction(1, 10))


def test_bad_inputs_are_rejected(water):
    with pytest.raises(MismatchedBoundary):
        vector_field(water.apex, [1, 1])
    with pytest.raises(InvalidStructure):
        vector_field(water.apex, [1, -1, 0])
    with pytest.raises(InvalidStructure):
        euler_step(water.apex, [1, 1, 0], 0)


def test_open_dynamics_need_rates():
    with pytest.raises(MismatchedBoundary):
        OpenDynamics(OpenGraphFactory())
