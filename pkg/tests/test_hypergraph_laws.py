"""
Every object carries a special commutative Frobenius monoid, and companions
of bijections satisfy their binding equations.
"""

import itertools

import pytest
import factory.random

from core.cospans import (
    companion,
    conjoint,
    find_cospan_isomorphism,
    hcompose,
    hcompose2,
    identity_cell,
    identity_square,
    invert_two_morphism,
    left_unitor,
    right_unitor,
    vcompose,
)
from core.finset import FinFunction, FinSet
from core.hypergraph import (
    check_frobenius,
    frobenius_generators,
    from_plain_cospan,
    preserves_multiplication,
    tensor_compatibility,
)
from core.instances import GRAPH, LGRAPH, PETRI, PETRI_RATES

from .factories import random_function

INSTANCES = [GRAPH, LGRAPH, PETRI, PETRI_RATES]
FROBENIUS_LAWS = [
    'associativity', 'left unit', 'right unit', 'coassociativity', 'left counit',
    'right counit', 'commutativity', 'frobenius', 'special',
]


def permutations_up_to(n):
    for size in range(n + 1):
        for images in itertools.permutations(range(size)):
            yield FinFunction.from_list(list(images), size)


@pytest.mark.parametrize('size', [0, 1, 2, 3])
@pytest.mark.parametrize('instance', INSTANCES, ids=lambda X: X.name)
def test_frobenius_laws_hold(instance, size):
    report = check_frobenius(instance, FinSet(size))
    assert [r.name for r in report.results] == FROBENIUS_LAWS
    assert report.passed, report.failures()


@pytest.mark.parametrize('sizes', [(0, 1), (1, 1), (1, 2), (2, 1)])
@pytest.mark.parametrize('instance', INSTANCES, ids=lambda X: X.name)
def test_structure_on_a_sum_is_induced(instance, sizes):
    a, b = (FinSet(n) for n in sizes)
    results = tensor_compatibility(instance, a, b)
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]


def test_generators_have_expected_feet():
    kit = frobenius_generators(GRAPH, FinSet(2))
    assert (kit.mult.foot_in.size, kit.mult.foot_out.size) == (4, 2)
    assert (kit.unit.foot_in.size, kit.unit.foot_out.size) == (0, 2)
    assert (kit.comult.foot_in.size, kit.comult.foot_out.size) == (2, 4)
    assert (kit.counit.foot_in.size, kit.counit.foot_out.size) == (2, 0)
    assert kit.mult.apex.points.size == 2
    assert kit.mult.apex.arrows.size == 0


@pytest.mark.parametrize('instance', INSTANCES, ids=lambda X: X.name)
def test_counit_does_not_preserve_multiplication(instance):
    kit = frobenius_generators(instance, FinSet(1))
    result = preserves_multiplication(kit.counit)
    assert not result.passed
    assert result.isomorphisms == (None,)


@pytest.mark.parametrize('seed', range(10))
@pytest.mark.parametrize('instance', INSTANCES, ids=lambda X: X.name)
def test_function_cospans_preserve_multiplication(instance, seed):
    factory.random.reseed_random(seed)
    f = random_function(seed % 3 + 1, seed % 2 + 1)
    c = from_plain_cospan(instance, f, FinFunction.identity(f.cod))
    assert preserves_multiplication(c).passed


@pytest.mark.parametrize('instance', INSTANCES, ids=lambda X: X.name)
def test_companion_equations(instance):
    checked = 0
    for f in permutations_up_to(4):
        comp = companion(instance, f)
        assert vcompose(comp.beta_cell, comp.alpha_cell) == identity_square(instance, f)
        assert hcompose2(comp.beta_cell, comp.alpha_cell) == vcompose(
            left_unitor(comp.cell), invert_two_morphism(right_unitor(comp.cell))
        )
        checked += 1
    assert checked == 1 + 1 + 2 + 6 + 24


@pytest.mark.parametrize('instance', INSTANCES, ids=lambda X: X.name)
def test_companion_then_conjoint_is_an_identity(instance):
    for f in permutations_up_to(3):
        there_and_back = hcompose(companion(instance, f).cell, conjoint(instance, f).cell)
        assert find_cospan_isomorphism(there_and_back, identity_cell(instance, f.dom)) is not None
