from fractions import Fraction

from django.test import SimpleTestCase

from core.exceptions import InvalidStructure, MismatchedBoundary
from core.finset import FinFunction
from core.instances import PetriWithRates, petri_net

from .mass_action import (
    concentration,
    integrate,
    pushforward_field,
    restrict_concentration,
    stoichiometric_matrix,
    transition_rate,
)


def water():
    # 2 H + O -> H2O
    return PetriWithRates(petri_net(3, [({0: 2, 1: 1}, {2: 1})]), [1])


class ConcentrationTests(SimpleTestCase):
    def test_values_become_fractions(self):
        self.assertEqual(concentration(water(), [1, '1/2', Fraction(3)]), (1, Fraction(1, 2), 3))

    def test_bad_concentrations(self):
        with self.assertRaises(MismatchedBoundary):
            concentration(water(), [1, 1])
        with self.assertRaises(InvalidStructure):
            concentration(water(), [1, -1, 0])


class MassActionTests(SimpleTestCase):
    def test_rate_is_a_monomial_in_the_inputs(self):
        self.assertEqual(transition_rate(water(), 0, [2, 3, 5]), 12)
        self.assertEqual(transition_rate(water(), 0, [0, 3, 5]), 0)

    def test_stoichiometry(self):
        self.assertEqual(stoichiometric_matrix(water()), ((-2,), (-1,), (1,)))

    def test_integrate_chains_steps(self):
        trajectory = integrate(water(), [1, 1, 0], Fraction(1, 10), 2)
        self.assertEqual(len(trajectory), 2)
        self.assertEqual(trajectory[0].concentration, (Fraction(4, 5), Fraction(9, 10), Fraction(1, 10)))
        self.assertEqual(integrate(water(), [1, 1, 0], 1, 0), [])


class GluingTests(SimpleTestCase):
    def test_fields_add_over_fibres(self):
        g = FinFunction.from_list([0, 0, 1], 2)
        self.assertEqual(pushforward_field([1, 2, 3], g), (3, 3))
        self.assertEqual(restrict_concentration([5, 7], g), (5, 5, 7))
        with self.assertRaises(MismatchedBoundary):
            pushforward_field([1, 2], g)
