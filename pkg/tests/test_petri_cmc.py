"""
Open Petri nets and the open commutative monoidal categories they present.
"""

import pytest
import factory.random

from core.cospans import hcompose, hcompose_pushout
from core.exceptions import IllTypedCompose, IndexOutOfRange
from core.finset import FinSet
from core.functors import (
    alpha_is_natural,
    composition_comparison,
    composition_hexagon,
    map_cospan,
    unit_coherence,
    unit_comparison,
)
from core.instances import Multiset, petri_net
from petri.cmc import (
    CMC,
    Compose,
    Generator,
    Identity,
    Tensor,
    enabled,
    fire,
    map_term,
    petri_morphism_to_cmc,
    petri_cmc_square,
    petri_to_cmc,
    reachable,
    replay,
    search_firing_sequence,
    term_boundary,
    witness_term,
)

from .factories import OpenPetriFactory, PetriNetFactory, chain, random_function, random_multiset, rng

SEEDS = range(50)


@pytest.mark.parametrize('seed', SEEDS)
def test_composition_comparison_is_invertible(seed):
    factory.random.reseed_random(seed)
    c1, c2 = chain(OpenPetriFactory, 2)
    comparison = composition_comparison(petri_cmc_square(), c1, c2)
    assert comparison.is_globular()
    assert CMC.is_iso(comparison.f)


@pytest.mark.parametrize('seed', range(20))
def test_image_of_a_composite_has_all_generators(seed):
    factory.random.reseed_random(seed)
    c1, c2 = chain(OpenPetriFactory, 2)
    image = map_cospan(petri_cmc_square(), hcompose(c1, c2))
    assert len(image.apex.morphism_generators) == c1.apex.transitions.size + c2.apex.transitions.size


@pytest.mark.parametrize('seed', range(15))
def test_comparisons_are_coherent(seed):
    factory.random.reseed_random(seed)
    sq = petri_cmc_square()
    c1, c2, c3 = chain(OpenPetriFactory, 3)

    through_left, through_right = composition_hexagon(sq, c1, c2, c3)
    assert through_left == through_right

    (left, expected_left), (right, expected_right) = unit_coherence(sq, c1)
    assert left == expected_left
    assert right == expected_right
    assert CMC.is_iso(unit_comparison(sq, c1.foot_in).f)


@pytest.mark.parametrize('seed', range(10))
def test_alpha_is_natural(seed):
    factory.random.reseed_random(seed)
    g = random_function(seed % 4, seed % 3 + 1)
    assert alpha_is_natural(petri_cmc_square(), g)


def test_water_composite_presents_two_generators(water, dissociation):
    pres = petri_to_cmc(hcompose(water.cospan, dissociation.cospan).apex)
    assert pres.object_generators == FinSet(5)
    assert len(pres.morphism_generators) == 2


def test_generator_boundary(water):
    pres = petri_to_cmc(water.apex, water.point_names, water.arrow_names)
    source, target = term_boundary(Generator(0), pres)
    assert source.counts == (2, 1, 0)
    assert target.counts == (0, 0, 1)
    assert pres.morphism_generators[0].name == 'alpha'


def test_term_boundaries_compose_and_add(water):
    pres = petri_to_cmc(water.apex)
    places = water.apex.places
    oxygen = Multiset.from_mapping(places, {1: 1})

    source, target = term_boundary(Tensor(Generator(0), Identity(oxygen)), pres)
    assert source.counts == (2, 2, 0)
    assert target.counts == (0, 1, 1)

    water_only = Multiset.from_mapping(places, {2: 1})
    source, target = term_boundary(Compose(Generator(0), Identity(water_only)), pres)
    assert source.counts == (2, 1, 0)
    assert target == water_only


def test_ill_typed_terms_are_rejected(water):
    pres = petri_to_cmc(water.apex)
    with pytest.raises(IllTypedCompose):
        term_boundary(Compose(Generator(0), Generator(0)), pres)
    with pytest.raises(IndexOutOfRange):
        term_boundary(Generator(1), pres)


def test_witness_term_boundary(water, dissociation):
    net = hcompose(water.cospan, dissociation.cospan).apex
    start = Multiset.from_mapping(net.places, {0: 4, 1: 2})
    result = search_firing_sequence(net, start, Multiset.from_mapping(net.places, {3: 1, 4: 1}), 3)

    term = witness_term(net, start, result.sequence)
    assert term_boundary(term, petri_to_cmc(net)) == (start, replay(net, start, result.sequence))


def test_map_term_pushes_boundaries_forward(water, dissociation):
    _, po = hcompose_pushout(water.cospan, dissociation.cospan)
    m = petri_morphism_to_cmc(po.left)
    pres = petri_to_cmc(water.apex)
    term = Tensor(Generator(0), Identity(Multiset.from_mapping(water.apex.places, {2: 1})))

    source, target = term_boundary(term, pres)
    mapped = term_boundary(map_term(term, m), m.cod)
    assert mapped == (source.pushforward(m.g), target.pushforward(m.g))


def test_reachability_examples(water):
    net = water.apex
    places = net.places
    hydrogen = Multiset.from_mapping(places, {0: 1})
    assert not reachable(net, hydrogen, Multiset.from_mapping(places, {2: 1}), 10)
    assert reachable(net, hydrogen, hydrogen, 0)

    start = Multiset.from_mapping(places, {0: 2, 1: 1})
    assert reachable(net, start, Multiset.from_mapping(places, {2: 1}), 1)
    assert not reachable(net, start, Multiset.from_mapping(places, {2: 1}), 0)


def test_state_cap_makes_search_inconclusive():
    doubling = petri_net(1, [({0: 1}, {0: 2})])
    one, none = Multiset.from_mapping(FinSet(1), {0: 1}), Multiset.zero(FinSet(1))

    result = search_firing_sequence(doubling, one, none, 100, max_states=5)
    assert not result.found
    assert result.truncated
    assert result.states_visited == 5

    assert not search_firing_sequence(doubling, one, none, 3).truncated


@pytest.mark.parametrize('seed', SEEDS)
def test_reachability_grows_with_the_step_bound(seed):
    factory.random.reseed_random(seed)
    net = PetriNetFactory()
    start = Multiset.from_mapping(net.places, random_multiset(net.places.size, 3))
    goal, walked = start, 0
    for _ in range(rng().randint(0, 4)):
        options = [t for t in range(net.transitions.size) if enabled(net, goal, t)]
        if not options:
            break
        goal = fire(net, goal, rng().choice(options))
        walked += 1

    results = [search_firing_sequence(net, start, goal, steps) for steps in range(6)]
    found = [r.found for r in results]
    assert found == sorted(found)
    assert found[walked]
    for steps, result in enumerate(results):
        if result.found:
            assert len(result.sequence) <= steps
            assert replay(net, start, result.sequence) == goal
