from django.test import SimpleTestCase

from core.cospans import StructuredCospan, identity_cell
from core.exceptions import MismatchedBoundary, NonpositiveResistance
from core.finset import FinFunction, FinSet
from core.instances import GRAPH, LGRAPH, LGraph

from .blackbox import blackbox, resistances, series
from .relations import LinearRelation, compose_relations, resistor_relation


class LinearRelationTests(SimpleTestCase):
    def test_identity_is_neutral(self):
        r = resistor_relation(3)
        self.assertEqual(compose_relations(LinearRelation.identity(2), r), r)
        self.assertEqual(compose_relations(r, LinearRelation.identity(2)), r)

    def test_transpose_is_an_involution(self):
        r = resistor_relation(2)
        self.assertEqual(r.transpose().transpose(), r)
        self.assertEqual((r.transpose().dim_in, r.transpose().dim_out), (2, 2))

    def test_full_relation(self):
        self.assertEqual(LinearRelation.full(1, 1).dimension, 2)
        self.assertEqual(LinearRelation.full(1, 1).constraints(), ())

    def test_shape_errors(self):
        with self.assertRaises(MismatchedBoundary):
            compose_relations(resistor_relation(1), LinearRelation.identity(3))
        with self.assertRaises(MismatchedBoundary):
            resistor_relation(1).contains([0, 0])
        with self.assertRaises(MismatchedBoundary):
            resistor_relation(1).permute([0, 0, 1, 2])

    def test_printing(self):
        self.assertEqual(str(resistor_relation(2)).splitlines()[0], 'LinearRelation 2 -> 2, dimension 2')


class BlackboxTests(SimpleTestCase):
    def test_labels_must_be_resistances(self):
        c = StructuredCospan.from_maps(
            LGRAPH, LGraph.from_edges(2, [(0, 1)], ['a']), FinFunction.from_list([0], 2), FinFunction.from_list([1], 2)
        )
        with self.assertRaises(NonpositiveResistance):
            resistances(c)
        with self.assertRaises(MismatchedBoundary):
            resistances(identity_cell(GRAPH, FinSet(1)))

    def test_black_box_is_a_subspace(self):
        r = blackbox(series([1, 2, 3]))
        self.assertTrue(r.contains([0, 0, 0, 0]))
        for row in r.basis:
            self.assertTrue(r.contains([3 * v for v in row]))
        self.assertEqual(r, resistor_relation(6))
