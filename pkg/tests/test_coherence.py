"""
Coherence laws of the double category of structured cospans, checked as exact
equalities of 2-morphisms on random cospans in every instance.
"""

import pytest
import factory.random

from core.cospans import (
    associator,
    braiding_cells,
    decat_braiding,
    decat_compose,
    decat_identity,
    decat_tensor,
    find_cospan_isomorphism,
    hcompose,
    hcompose2,
    identity_cell,
    identity_two_morphism,
    invert_two_morphism,
    iso_class,
    left_unitor,
    right_unitor,
    tensor_associator,
    tensor_cells,
    tensor_compose_comparison,
    tensor_left_unitor,
    tensor_right_unitor,
    tensor_two_morphisms,
    vcompose,
)

from .factories import OPEN_NETWORK_FACTORIES, chain, random_foot_map, random_square

SEEDS = range(50)
INSTANCES = sorted(OPEN_NETWORK_FACTORIES)


def draw(instance, seed, length):
    factory.random.reseed_random(seed)
    return chain(OPEN_NETWORK_FACTORIES[instance], length)


def independent(instance, seed, count):
    factory.random.reseed_random(seed)
    return [OPEN_NETWORK_FACTORIES[instance]() for _ in range(count)]


@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('instance', INSTANCES)
def test_pentagon(instance, seed):
    c1, c2, c3, c4 = draw(instance, seed, 4)
    c12, c23, c34 = hcompose(c1, c2), hcompose(c2, c3), hcompose(c3, c4)

    two_steps = vcompose(associator(c12, c3, c4), associator(c1, c2, c34))
    three_steps = vcompose(
        vcompose(
            hcompose2(associator(c1, c2, c3), identity_two_morphism(c4)),
            associator(c1, c23, c4),
        ),
        hcompose2(identity_two_morphism(c1), associator(c2, c3, c4)),
    )
    assert two_steps == three_steps


@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('instance', INSTANCES)
def test_triangle(instance, seed):
    c1, c2 = draw(instance, seed, 2)
    X = c1.instance
    unit = identity_cell(X, c1.foot_out)

    through_associator = vcompose(associator(c1, unit, c2), hcompose2(identity_two_morphism(c1), left_unitor(c2)))
    direct = hcompose2(right_unitor(c1), identity_two_morphism(c2))
    assert through_associator == direct


@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('instance', INSTANCES)
def test_unitors_are_invertible(instance, seed):
    (c,) = independent(instance, seed, 1)
    for unitor in (left_unitor(c), right_unitor(c)):
        assert unitor.is_globular()
        assert vcompose(unitor, invert_two_morphism(unitor)) == identity_two_morphism(unitor.src_cell)
        assert vcompose(invert_two_morphism(unitor), unitor) == identity_two_morphism(c)


@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('instance', INSTANCES)
def test_hexagons(instance, seed):
    c1, c2, c3 = independent(instance, seed, 3)

    left = vcompose(
        vcompose(tensor_associator(c1, c2, c3), braiding_cells(c1, tensor_cells(c2, c3))),
        tensor_associator(c2, c3, c1),
    )
    right = vcompose(
        vcompose(
            tensor_two_morphisms(braiding_cells(c1, c2), identity_two_morphism(c3)),
            tensor_associator(c2, c1, c3),
        ),
        tensor_two_morphisms(identity_two_morphism(c2), braiding_cells(c1, c3)),
    )
    assert left == right

    inverse = invert_two_morphism
    left = vcompose(
        vcompose(inverse(tensor_associator(c1, c2, c3)), braiding_cells(tensor_cells(c1, c2), c3)),
        inverse(tensor_associator(c3, c1, c2)),
    )
    right = vcompose(
        vcompose(
            tensor_two_morphisms(identity_two_morphism(c1), braiding_cells(c2, c3)),
            inverse(tensor_associator(c1, c3, c2)),
        ),
        tensor_two_morphisms(braiding_cells(c1, c3), identity_two_morphism(c2)),
    )
    assert left == right


@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('instance', INSTANCES)
def test_braiding_is_a_symmetry(instance, seed):
    c1, c2 = independent(instance, seed, 2)
    round_trip = vcompose(braiding_cells(c1, c2), braiding_cells(c2, c1))
    assert round_trip == identity_two_morphism(tensor_cells(c1, c2))


@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('instance', INSTANCES)
def test_tensor_pentagon_and_unitors(instance, seed):
    c1, c2, c3, c4 = independent(instance, seed, 4)
    a = tensor_associator
    two_steps = vcompose(a(tensor_cells(c1, c2), c3, c4), a(c1, c2, tensor_cells(c3, c4)))
    three_steps = vcompose(
        vcompose(
            tensor_two_morphisms(a(c1, c2, c3), identity_two_morphism(c4)),
            a(c1, tensor_cells(c2, c3), c4),
        ),
        tensor_two_morphisms(identity_two_morphism(c1), a(c2, c3, c4)),
    )
    assert two_steps == three_steps

    assert tensor_left_unitor(c1).tgt_cell == c1
    assert tensor_right_unitor(c1).tgt_cell == c1


@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('instance', INSTANCES)
def test_interchange(instance, seed):
    c1, c2 = draw(instance, seed, 2)
    a, b, c = random_foot_map(c1.foot_in), random_foot_map(c1.foot_out), random_foot_map(c2.foot_out)
    t1, t2 = random_square(c1, a, b), random_square(c2, b, c)
    a_next, b_next, c_next = random_foot_map(a.cod), random_foot_map(b.cod), random_foot_map(c.cod)
    t3, t4 = random_square(t1.tgt_cell, a_next, b_next), random_square(t2.tgt_cell, b_next, c_next)

    assert vcompose(hcompose2(t1, t2), hcompose2(t3, t4)) == hcompose2(vcompose(t1, t3), vcompose(t2, t4))
    assert hcompose2(identity_two_morphism(c1), identity_two_morphism(c2)) == identity_two_morphism(hcompose(c1, c2))


@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('instance', INSTANCES)
def test_tensor_interchange(instance, seed):
    c1, c2 = independent(instance, seed, 2)
    t1 = random_square(c1, random_foot_map(c1.foot_in), random_foot_map(c1.foot_out))
    t2 = random_square(c2, random_foot_map(c2.foot_in), random_foot_map(c2.foot_out))
    t3 = random_square(t1.tgt_cell, random_foot_map(t1.alpha.cod), random_foot_map(t1.beta.cod))
    t4 = random_square(t2.tgt_cell, random_foot_map(t2.alpha.cod), random_foot_map(t2.beta.cod))

    assert (
        vcompose(tensor_two_morphisms(t1, t2), tensor_two_morphisms(t3, t4))
        == tensor_two_morphisms(vcompose(t1, t3), vcompose(t2, t4))
    )
    assert tensor_two_morphisms(identity_two_morphism(c1), identity_two_morphism(c2)) == identity_two_morphism(
        tensor_cells(c1, c2)
    )


@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('instance', INSTANCES)
def test_composition_commutes_with_tensor(instance, seed):
    factory.random.reseed_random(seed)
    build = OPEN_NETWORK_FACTORIES[instance]
    c1, c2 = build(), build()
    c3 = build(foot_in_size=c1.foot_out.size)
    c4 = build(foot_in_size=c2.foot_out.size)

    comparison = tensor_compose_comparison(c1, c2, c3, c4)
    assert comparison.is_globular()
    assert comparison.instance.is_iso(comparison.f)
    assert find_cospan_isomorphism(comparison.src_cell, comparison.tgt_cell) is not None


@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('instance', INSTANCES)
def test_iso_classes_form_a_category(instance, seed):
    k1, k2, k3 = (iso_class(c) for c in draw(instance, seed, 3))
    X = k1.instance

    assert decat_compose(decat_compose(k1, k2), k3) == decat_compose(k1, decat_compose(k2, k3))
    assert decat_compose(decat_identity(X, k1.foot_in), k1) == k1
    assert decat_compose(k1, decat_identity(X, k1.foot_out)) == k1


@pytest.mark.parametrize('seed', SEEDS)
@pytest.mark.parametrize('instance', INSTANCES)
def test_iso_classes_are_symmetric_monoidal(instance, seed):
    k1, k2, k3 = (iso_class(c) for c in independent(instance, seed, 3))
    X = k1.instance

    assert decat_tensor(decat_tensor(k1, k2), k3) == decat_tensor(k1, decat_tensor(k2, k3))
    naturality_left = decat_compose(decat_tensor(k1, k2), decat_braiding(X, k1.foot_out, k2.foot_out))
    naturality_right = decat_compose(decat_braiding(X, k1.foot_in, k2.foot_in), decat_tensor(k2, k1))
    assert naturality_left == naturality_right

    twice = decat_compose(decat_braiding(X, k1.foot_in, k2.foot_in), decat_braiding(X, k2.foot_in, k1.foot_in))
    assert twice == decat_identity(X, tensor_cells(k1.representative, k2.representative).foot_in)

