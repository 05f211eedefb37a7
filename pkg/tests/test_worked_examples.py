"""
The water formation and dissociation nets, and the pair of open graphs that
differ only by the name of one edge.
"""

from fractions import Fraction

from core.cospans import StructuredCospan, find_cospan_isomorphism, hcompose, iso_class, tensor_cells
from core.finset import FinFunction
from core.instances import PETRI, Multiset, PetriNet
from dynamics.mass_action import OpenDynamics, vector_field
from networks.documents import compose_documents, tensor_documents
from networks.services import NetworkFileService
from petri.cmc import petri_to_cmc, replay, search_firing_sequence


def test_water_net_shape(water):
    c = water.cospan
    assert c.foot_in.size == 3 and c.foot_out.size == 1
    assert c.apex.places.size == 3 and c.apex.transitions.size == 1
    assert list(c.leg_in.g.map) == [0, 1, 1]
    assert list(c.leg_out.g.map) == [2]
    assert list(c.apex.src[0].counts) == [2, 1, 0]
    assert list(c.apex.tgt[0].counts) == [0, 0, 1]


def test_composite_has_five_places_and_two_transitions(water, dissociation):
    composite = hcompose(water.cospan, dissociation.cospan)
    assert composite.apex.places.size == 5
    assert composite.apex.transitions.size == 2
    assert composite.foot_in.size == 3 and composite.foot_out.size == 3

    named = compose_documents(water, dissociation)
    assert named.point_names == ('H', 'O', 'H2O', 'OH-', 'H3O+')
    assert named.arrow_names == ('alpha', 'beta')


def test_tensor_has_feet_of_four(water, dissociation):
    side_by_side = tensor_cells(water.cospan, dissociation.cospan)
    assert side_by_side.foot_in.size == 4
    assert side_by_side.foot_out.size == 4
    assert side_by_side.apex.places.size == 6

    named = tensor_documents(water, dissociation)
    assert named.point_names == ('H', 'O', 'H2O', "H2O'", 'OH-', 'H3O+')


def test_composite_presents_two_generators(water, dissociation):
    composite = hcompose(water.cospan, dissociation.cospan)
    pres = petri_to_cmc(composite.apex)
    assert len(pres.morphism_generators) == 2
    assert pres.object_generators.size == 5


def test_water_then_dissociation_is_reachable(water, dissociation):
    net = hcompose(water.cospan, dissociation.cospan).apex
    start = Multiset.from_mapping(net.places, {0: 4, 1: 2})
    goal = Multiset.from_mapping(net.places, {3: 1, 4: 1})

    result = search_firing_sequence(net, start, goal, 3)
    assert result.found
    assert result.sequence == (0, 0, 1)
    assert replay(net, start, result.sequence) == goal
    assert not search_firing_sequence(net, start, goal, 2).found


def test_single_hydrogen_never_makes_water(water):
    net = water.apex
    start = Multiset.from_mapping(net.places, {0: 1})
    goal = Multiset.from_mapping(net.places, {2: 1})
    assert not search_firing_sequence(net, start, goal, 10).found


def test_water_field_under_unit_rate(water):
    assert vector_field(water.apex, [1, 1, 0]) == (Fraction(-2), Fraction(-1), Fraction(1))
    assert OpenDynamics(water.cospan).vector_field([1, 1, 0]) == (-2, -1, 1)


def test_renamed_edge_gives_isomorphic_open_graphs():
    g5 = NetworkFileService.fixture('open_graph_e5')
    g6 = NetworkFileService.fixture('open_graph_e6')
    assert g5.cospan != g6.cospan

    iso = find_cospan_isomorphism(g5.cospan, g6.cospan)
    assert iso is not None
    assert list(iso.f.g.map) == [0, 1, 2, 3]
    diagonal = g5.arrow_names.index('e5')
    assert g6.arrow_names[iso.f.f(diagonal)] == 'e6'
    assert iso_class(g5.cospan) == iso_class(g6.cospan)


def test_retargeted_leg_is_a_different_open_graph():
    g5 = NetworkFileService.fixture('open_graph_e5').cospan
    retargeted = StructuredCospan.from_maps(
        g5.instance, g5.apex, g5.leg_in.g, FinFunction.from_list([1], g5.apex.points.size)
    )
    assert find_cospan_isomorphism(g5, retargeted) is None
    assert iso_class(g5) != iso_class(retargeted)


def test_plain_petri_instance_composes_too(water, dissociation):
    def forget_rates(c):
        net = PetriNet(c.apex.places, c.apex.transitions, c.apex.src, c.apex.tgt)
        return StructuredCospan.from_maps(PETRI, net, c.leg_in.g, c.leg_out.g)

    composite = hcompose(forget_rates(water.cospan), forget_rates(dissociation.cospan))
    assert composite.instance == PETRI
    assert composite.apex.places.size == 5
