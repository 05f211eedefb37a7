from django.test import SimpleTestCase

from core.exceptions import IllTypedCompose, IndexOutOfRange, InvalidStructure, MismatchedBoundary
from core.finset import FinSet
from core.instances import Multiset, get_instance, petri_net

from .cmc import CMC, Compose, Generator, Identity, enabled, fire, petri_to_cmc, replay, term_boundary, witness_term


def exchange():
    # A -> B and B -> A
    return petri_net(2, [({0: 1}, {1: 1}), ({1: 1}, {0: 1})])


def marking(a, b):
    return Multiset(FinSet(2), (a, b))


class FiringTests(SimpleTestCase):
    def test_fire(self):
        net = exchange()
        self.assertTrue(enabled(net, marking(1, 0), 0))
        self.assertFalse(enabled(net, marking(1, 0), 1))
        self.assertEqual(fire(net, marking(1, 0), 0), marking(0, 1))
        self.assertIsNone(fire(net, marking(1, 0), 1))
        with self.assertRaises(IndexOutOfRange):
            fire(net, marking(1, 0), 2)

    def test_replay(self):
        net = exchange()
        self.assertEqual(replay(net, marking(2, 0), [0, 0, 1]), marking(1, 1))
        with self.assertRaises(InvalidStructure):
            replay(net, marking(1, 0), [1])

    def test_witness_fires_one_generator_per_step(self):
        net = exchange()
        term = witness_term(net, marking(2, 0), [0, 0])
        self.assertIsInstance(term, Compose)
        self.assertEqual(term_boundary(term, petri_to_cmc(net)), (marking(2, 0), marking(0, 2)))
        self.assertEqual(witness_term(net, marking(2, 0), []), Identity(marking(2, 0)))


class PresentationTests(SimpleTestCase):
    def test_registered(self):
        self.assertIs(get_instance('cmc'), CMC)

    def test_generators_follow_transitions(self):
        pres = petri_to_cmc(exchange(), ['A', 'B'], ['forward', 'back'])
        self.assertEqual(pres.object_generators, FinSet(2))
        self.assertEqual([g.name for g in pres.morphism_generators], ['forward', 'back'])
        self.assertEqual(pres, petri_to_cmc(exchange()))

    def test_ill_typed_terms(self):
        pres = petri_to_cmc(exchange())
        with self.assertRaises(IllTypedCompose):
            term_boundary(Compose(Generator(0), Generator(0)), pres)
        with self.assertRaises(MismatchedBoundary):
            term_boundary(Identity(Multiset.zero(FinSet(3))), pres)
