"""
Special commutative Frobenius structure on every object of structured cospans.

Laws are compared up to isomorphism of cospans that fixes the feet, which is
equality in the category of isomorphism classes.
"""

import logging
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Tuple

from . import finset
from .cospans import (
    StructuredCospan,
    TwoMorphism,
    companion,
    find_cospan_isomorphism,
    hcompose,
    identity_cell,
    mirror,
    tensor_cells,
)
from .finset import FinFunction, FinSet
from .instances import TwoSortedInstance

logger = logging.getLogger(__name__)


class FrobeniusKit(NamedTuple):
    a: FinSet
    mult: StructuredCospan
    unit: StructuredCospan
    comult: StructuredCospan
    counit: StructuredCospan


class LawResult(NamedTuple):
    name: str
    passed: bool
    isomorphisms: Tuple[Optional[TwoMorphism], ...]


@dataclass
class LawReport:
    instance: TwoSortedInstance
    size: int
    results: List[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[str]:
        return [r.name for r in self.results if not r.passed]


def from_plain_cospan(instance: TwoSortedInstance, f: FinFunction, g: FinFunction) -> StructuredCospan:
    """The structured cospan ``L(a) -> L(n) <- L(b)`` of a cospan of finite sets."""
    return StructuredCospan.from_maps(instance, instance.discrete(f.cod), f, g)


def frobenius_generators(instance: TwoSortedInstance, a: FinSet) -> FrobeniusKit:
    La = instance.discrete(a)
    mult = StructuredCospan(
        instance,
        finset.coproduct(a, a).apex,
        a,
        La,
        instance.discrete_map(finset.fold(a)),
        instance.identity(La),
    )
    unit = StructuredCospan(
        instance, FinSet(0), a, La, instance.discrete_map(finset.initial_map(a)), instance.identity(La)
    )
    return FrobeniusKit(a, mult, unit, mirror(mult), mirror(unit))


def braid(instance: TwoSortedInstance, a: FinSet, b: FinSet) -> StructuredCospan:
    return companion(instance, finset.swap(a, b)).cell


def _law(name: str, *sides: StructuredCospan) -> LawResult:
    isomorphisms = tuple(find_cospan_isomorphism(sides[0], side) for side in sides[1:])
    passed = all(iso is not None for iso in isomorphisms)
    if not passed:
        logger.debug(f"Law {name} fails")
    return LawResult(name, passed, isomorphisms)


def check_frobenius(instance: TwoSortedInstance, a: FinSet) -> LawReport:
    kit = frobenius_generators(instance, a)
    one = identity_cell(instance, a)
    mu, eta, delta, eps = kit.mult, kit.unit, kit.comult, kit.counit

    report = LawReport(instance, a.size)
    report.results = [
        _law('associativity', hcompose(tensor_cells(mu, one), mu), hcompose(tensor_cells(one, mu), mu)),
        _law('left unit', hcompose(tensor_cells(eta, one), mu), one),
        _law('right unit', hcompose(tensor_cells(one, eta), mu), one),
        _law('coassociativity', hcompose(delta, tensor_cells(delta, one)), hcompose(delta, tensor_cells(one, delta))),
        _law('left counit', hcompose(delta, tensor_cells(eps, one)), one),
        _law('right counit', hcompose(delta, tensor_cells(one, eps)), one),
        _law('commutativity', hcompose(braid(instance, a, a), mu), mu),
        _law(
            'frobenius',
            hcompose(mu, delta),
            hcompose(tensor_cells(delta, one), tensor_cells(one, mu)),
            hcompose(tensor_cells(one, delta), tensor_cells(mu, one)),
        ),
        _law('special', hcompose(delta, mu), one),
    ]
    logger.info(f"Frobenius check on {instance.name} object of size {a.size}: {'pass' if report.passed else 'fail'}")
    return report


def tensor_compatibility(instance: TwoSortedInstance, a: FinSet, b: FinSet) -> List[LawResult]:
    """The structure on ``a + b`` against the one induced from ``a`` and ``b``."""
    kit_a, kit_b = frobenius_generators(instance, a), frobenius_generators(instance, b)
    kit_ab = frobenius_generators(instance, finset.coproduct(a, b).apex)
    shuffle = tensor_cells(tensor_cells(identity_cell(instance, a), braid(instance, b, a)), identity_cell(instance, b))
    induced_mult = hcompose(shuffle, tensor_cells(kit_a.mult, kit_b.mult))
    induced_unit = tensor_cells(kit_a.unit, kit_b.unit)
    return [
        _law('multiplication', kit_ab.mult, induced_mult),
        _law('unit', kit_ab.unit, induced_unit),
        _law('comultiplication', kit_ab.comult, mirror(induced_mult)),
        _law('counit', kit_ab.counit, mirror(induced_unit)),
    ]


def preserves_multiplication(c: StructuredCospan) -> LawResult:
    """Whether ``mult ; c`` agrees with ``(c c) ; mult`` up to isomorphism."""
    source = frobenius_generators(c.instance, c.foot_in)
    target = frobenius_generators(c.instance, c.foot_out)
    return _law('preserves multiplication', hcompose(source.mult, c), hcompose(tensor_cells(c, c), target.mult))
