from fractions import Fraction

from django.core.cache import cache
from django.test import SimpleTestCase, override_settings

from . import finset, linalg
from .cache_utils import cache_computation, computation_key, invalidate_computation
from .cospans import canonical_form, find_cospan_isomorphism, hcompose, identity_cell, StructuredCospan
from .exceptions import (
    DocumentError,
    IndexOutOfRange,
    InvalidStructure,
    LabelConflict,
    MismatchedBoundary,
    NonCommutingCocone,
    NonCommutingSquare,
    NotInvertible,
    RateConflict,
)
from .finset import FinFunction, FinSet
from .instances import GRAPH, LGRAPH, PETRI, PETRI_RATES, Graph, LGraph, Multiset, PetriWithRates, get_instance, petri_net
from .validators import InputValidator, validate_unique_names


class FinSetTests(SimpleTestCase):
    def test_rejects_bad_tables(self):
        with self.assertRaises(InvalidStructure):
            FinSet(-1)
        with self.assertRaises(IndexOutOfRange):
            FinFunction.from_list([0, 2], 2)
        with self.assertRaises(InvalidStructure):
            FinFunction(FinSet(2), FinSet(2), (0,))

    def test_pushout_numbers_classes_by_least_member(self):
        f = FinFunction.from_list([1], 2)
        g = FinFunction.from_list([0], 2)
        po = finset.pushout(f, g)
        self.assertEqual(po.apex, FinSet(3))
        self.assertEqual(po.left.map, (0, 1))
        self.assertEqual(po.right.map, (1, 2))
        self.assertEqual(finset.compose(po.left, f), finset.compose(po.right, g))

    def test_pushout_mediator(self):
        f = FinFunction.from_list([0, 0], 1)
        g = FinFunction.from_list([0, 1], 2)
        po = finset.pushout(f, g)
        self.assertEqual(po.apex, FinSet(1))

        u = finset.pushout_mediator(po, FinFunction.from_list([2], 3), FinFunction.from_list([2, 2], 3))
        self.assertEqual(u.map, (2,))
        with self.assertRaises(NonCommutingCocone):
            finset.pushout_mediator(po, FinFunction.from_list([2], 3), FinFunction.from_list([2, 1], 3))

    def test_coequalizer(self):
        f = FinFunction.from_list([0, 2], 4)
        g = FinFunction.from_list([1, 3], 4)
        coeq = finset.coequalizer(f, g)
        self.assertEqual(coeq.apex, FinSet(2))
        self.assertEqual(coeq.quotient.map, (0, 0, 1, 1))

    def test_swap_and_fold(self):
        self.assertEqual(finset.swap(FinSet(1), FinSet(2)).map, (2, 0, 1))
        self.assertEqual(finset.fold(FinSet(2)).map, (0, 1, 0, 1))

    def test_inverse(self):
        f = FinFunction.from_list([2, 0, 1], 3)
        self.assertEqual(finset.compose(finset.inverse(f), f), FinFunction.identity(FinSet(3)))
        with self.assertRaises(NotInvertible):
            finset.inverse(FinFunction.from_list([0, 0], 2))

    def test_hom_set_size(self):
        self.assertEqual(len(list(finset.hom_set(FinSet(2), FinSet(3)))), 9)
        self.assertEqual(len(list(finset.hom_set(FinSet(0), FinSet(0)))), 1)


class LinalgTests(SimpleTestCase):
    def test_rref_is_canonical(self):
        a, _ = linalg.rref([[2, 4], [1, 3]], 2)
        b, _ = linalg.rref([[1, 0], [0, 1], [1, 1]], 2)
        self.assertEqual(a, b)

    def test_nullspace(self):
        basis = linalg.nullspace([[1, 1, 0]], 3)
        self.assertEqual(basis, ((1, -1, 0), (0, 0, 1)))
        self.assertEqual(linalg.rank([[1, 2], [2, 4]], 2), 1)

    def test_eliminate_projects_solutions(self):
        # x = y and y = z, hide y
        kept = linalg.eliminate([[1, -1, 0], [0, 1, -1]], 3, [1])
        self.assertEqual(kept, ((1, -1),))

    def test_fractions_stay_exact(self):
        self.assertEqual(linalg.dot([Fraction(1, 3)] * 3, [1, 1, 1]), 1)


class InstanceTests(SimpleTestCase):
    def test_registry(self):
        self.assertIs(get_instance('graph'), GRAPH)
        with self.assertRaises(InvalidStructure):
            get_instance('hypergraph')

    def test_multiset_arithmetic(self):
        base = FinSet(3)
        m = Multiset.from_mapping(base, {0: 2, 2: 1})
        self.assertEqual((m + m).counts, (4, 0, 2))
        self.assertEqual(m.pushforward(FinFunction.from_list([0, 0, 0], 1)).counts, (3,))
        with self.assertRaises(InvalidStructure):
            Multiset.from_mapping(base, {1: 1}) - m

    def test_graph_pushout_glues_nodes(self):
        edge = Graph.from_edges(2, [(0, 1)])
        leg_out = GRAPH.leg(edge, FinFunction.from_list([1], 2))
        leg_in = GRAPH.leg(edge, FinFunction.from_list([0], 2))
        po = GRAPH.pushout(leg_out, leg_in)
        self.assertEqual(po.apex.nodes, FinSet(3))
        self.assertEqual(po.apex.src.map, (0, 1))
        self.assertEqual(po.apex.tgt.map, (1, 2))

    def test_merging_arrows_with_different_labels_fails(self):
        a = LGraph.from_edges(2, [(0, 1)], ['a'])
        b = LGraph.from_edges(2, [(0, 1)], ['b'])
        keep = LGRAPH.identity(a)
        relabel = LGRAPH.morphism(a, b, keep.f, keep.g)
        self.assertFalse(LGRAPH.is_valid_morphism(relabel))
        with self.assertRaises(LabelConflict):
            LGRAPH.pushout(keep, relabel)

        self.assertIsNone(LGRAPH.find_isomorphism(a, b))
        self.assertIsNotNone(LGRAPH.find_isomorphism(a, a))

    def test_merging_transitions_with_different_rates_fails(self):
        net = petri_net(2, [({0: 1}, {1: 1})])
        slow, fast = PetriWithRates(net, [1]), PetriWithRates(net, [2])
        keep = PETRI_RATES.identity(slow)
        with self.assertRaises(RateConflict):
            PETRI_RATES.pushout(keep, PETRI_RATES.morphism(slow, fast, keep.f, keep.g))
        self.assertEqual(PETRI_RATES.pushout(keep, keep).apex.rates, (1,))

    def test_merging_arrows_with_different_ends_fails(self):
        forward = Graph.from_edges(2, [(0, 1)])
        backward = Graph.from_edges(2, [(1, 0)])
        keep = GRAPH.identity(forward)
        with self.assertRaises(NonCommutingSquare):
            GRAPH.pushout(keep, GRAPH.morphism(forward, backward, keep.f, keep.g))

    def test_rates_must_be_positive(self):
        with self.assertRaises(InvalidStructure):
            PetriWithRates(petri_net(1, [({0: 1}, {})]), [0])

    def test_petri_isomorphism_respects_multiplicity(self):
        a = petri_net(2, [({0: 2}, {1: 1})])
        b = petri_net(2, [({1: 2}, {0: 1})])
        c = petri_net(2, [({1: 1}, {0: 1})])
        iso = PETRI.find_isomorphism(a, b)
        self.assertEqual(iso.g.map, (1, 0))
        self.assertIsNone(PETRI.find_isomorphism(a, c))

    def test_discrete_objects(self):
        self.assertEqual(PETRI_RATES.discrete(FinSet(2)).rates, ())
        self.assertEqual(GRAPH.discrete(FinSet(2)).edges, FinSet(0))


class CospanTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def edge(self):
        return StructuredCospan.from_maps(
            GRAPH, Graph.from_edges(2, [(0, 1)]), FinFunction.from_list([0], 2), FinFunction.from_list([1], 2)
        )

    def test_legs_must_land_on_the_apex(self):
        with self.assertRaises(MismatchedBoundary):
            StructuredCospan(
                GRAPH, FinSet(1), FinSet(1), Graph.from_edges(2, []),
                GRAPH.leg(Graph.from_edges(3, []), FinFunction.from_list([0], 3)),
                GRAPH.leg(Graph.from_edges(2, []), FinFunction.from_list([0], 2)),
            )

    def test_composing_edges_gives_a_path(self):
        path = hcompose(self.edge(), self.edge())
        self.assertEqual(path.apex.nodes, FinSet(3))
        self.assertEqual(path.leg_out.g.map, (2,))

    def test_composing_mismatched_feet_fails(self):
        with self.assertRaises(MismatchedBoundary):
            hcompose(self.edge(), identity_cell(GRAPH, FinSet(2)))

    def test_canonical_form_is_isomorphic(self):
        c = StructuredCospan.from_maps(
            GRAPH, Graph.from_edges(3, [(2, 1), (1, 0)]), FinFunction.from_list([2], 3), FinFunction.from_list([0], 3)
        )
        canonical = canonical_form(c)
        self.assertEqual(canonical.leg_in.g.map, (0,))
        self.assertIsNotNone(find_cospan_isomorphism(c, canonical))
        self.assertEqual(canonical_form(canonical), canonical)


class CacheTests(SimpleTestCase):
    def setUp(self):
        cache.clear()
        self.calls = 0

    def test_results_are_reused_until_invalidated(self):
        @cache_computation('square', timeout=60)
        def square(n):
            self.calls += 1
            return n * n

        self.assertEqual(square(4), 16)
        self.assertEqual(square(4), 16)
        self.assertEqual(self.calls, 1)

        invalidate_computation('square', 4)
        square(4)
        self.assertEqual(self.calls, 2)

    def test_keys_depend_on_arguments(self):
        self.assertNotEqual(computation_key('k', (1,), {}), computation_key('k', (2,), {}))
        self.assertTrue(computation_key('k', (1,), {}).startswith('k_'))

    @override_settings(CACHES={'default': {'BACKEND': 'django.core.cache.backends.dummy.DummyCache'}})
    def test_works_without_a_cache(self):
        @cache_computation('cube')
        def cube(n):
            self.calls += 1
            return n ** 3

        self.assertEqual(cube(2), 8)
        self.assertEqual(cube(2), 8)


class ValidatorTests(SimpleTestCase):
    def test_fractions(self):
        self.assertEqual(InputValidator.validate_fraction('3/2'), Fraction(3, 2))
        self.assertEqual(InputValidator.validate_fraction('0.5'), Fraction(1, 2))
        self.assertEqual(InputValidator.validate_fraction(2), 2)
        for bad in ('', 'abc', '1/0', True, None, 1.5):
            with self.assertRaises(InvalidStructure):
                InputValidator.validate_fraction(bad)

    def test_positive_fractions(self):
        with self.assertRaises(InvalidStructure):
            InputValidator.validate_positive_fraction('0')

    def test_names(self):
        self.assertEqual(InputValidator.sanitize_name('  H2O '), 'H2O')
        for bad in ('', '<b>H</b>', 'a\x00b', 'x' * 65, 3):
            with self.assertRaises(InvalidStructure):
                InputValidator.sanitize_name(bad)

    def test_assignments(self):
        names = ['H', 'O', 'H2O']
        self.assertEqual(InputValidator.parse_assignments('H:4, O:2', names, natural=True), [4, 2, 0])
        self.assertEqual(InputValidator.parse_assignments('', names), [0, 0, 0])
        with self.assertRaises(InvalidStructure):
            InputValidator.parse_assignments('H:1/2', names, natural=True)
        with self.assertRaises(InvalidStructure):
            InputValidator.parse_assignments('H', names)

    def test_duplicate_names_are_located(self):
        with self.assertRaises(DocumentError) as ctx:
            validate_unique_names(['a', 'b', 'a'], '$.apex.node_names')
        self.assertEqual(ctx.exception.code, 'duplicate-name')
        self.assertEqual(ctx.exception.path, '$.apex.node_names[2]')
