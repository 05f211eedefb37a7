"""
Universal properties behind every composite: chosen pushouts of finite sets,
the free/underlying adjunction of each instance, and pushouts of instance
objects. Isomorphism search is checked against permutation search.
"""

import itertools
from collections import Counter

import pytest
import factory.random

from core import finset
from core.exceptions import NonCommutingCocone
from core.finset import FinFunction, FinSet, hom_set
from core.instances import GRAPH, LGRAPH, PETRI, PETRI_RATES

from .factories import (
    GraphFactory,
    PetriNetFactory,
    PetriWithRatesFactory,
    ResistorNetworkFactory,
    random_function,
    rng,
)

INSTANCES = [GRAPH, LGRAPH, PETRI, PETRI_RATES]
OBJECT_FACTORIES = {
    'graph': GraphFactory,
    'lgraph': ResistorNetworkFactory,
    'petri': PetriNetFactory,
    'petri_rates': PetriWithRatesFactory,
}

_homs = {}


def homs(a: int, b: int):
    if (a, b) not in _homs:
        _homs[a, b] = list(hom_set(FinSet(a), FinSet(b)))
    return _homs[a, b]


@pytest.mark.parametrize('a,b,c', list(itertools.product(range(4), repeat=3)))
def test_pushout_of_finite_sets_is_universal(a, b, c):
    for f in homs(a, b):
        for g in homs(a, c):
            po = finset.pushout(f, g)
            assert finset.compose(po.left, f) == finset.compose(po.right, g)
            for d in range(4):
                commuting = 0
                for h_b in homs(b, d):
                    for h_c in homs(c, d):
                        if all(h_b(f(x)) == h_c(g(x)) for x in range(a)):
                            u = finset.pushout_mediator(po, h_b, h_c)
                            assert finset.compose(u, po.left) == h_b
                            assert finset.compose(u, po.right) == h_c
                            commuting += 1
                        else:
                            with pytest.raises(NonCommutingCocone):
                                finset.pushout_mediator(po, h_b, h_c)
                # every map out of the apex is the mediator of exactly one cocone
                assert commuting == d ** po.apex.size


def draw_object(instance, **kwargs):
    return OBJECT_FACTORIES[instance.name](**kwargs)


@pytest.mark.parametrize('seed', range(10))
@pytest.mark.parametrize('instance', INSTANCES, ids=lambda X: X.name)
def test_legs_are_transposes_of_functions(instance, seed):
    factory.random.reseed_random(seed)
    x = draw_object(instance)
    for size in range(5):
        a = FinSet(size)
        free = instance.discrete(a)
        assert instance.underlying(free) == a

        functions = list(hom_set(a, instance.underlying(x)))
        candidates = [
            instance.morphism(free, x, arrow_map, point_map)
            for arrow_map in hom_set(free.arrows, x.arrows)
            for point_map in hom_set(free.points, x.points)
        ]
        morphisms = [m for m in candidates if instance.is_valid_morphism(m)]
        assert [instance.leg(x, fn) for fn in functions] == morphisms
        assert [m.g for m in morphisms] == functions


@pytest.mark.parametrize('seed', range(10))
@pytest.mark.parametrize('instance', INSTANCES, ids=lambda X: X.name)
def test_legs_are_natural(instance, seed):
    factory.random.reseed_random(seed)
    x, y = draw_object(instance), draw_object(instance)
    h = instance.coproduct(x, y).left
    fn = random_function(3, x.points.size)
    q = random_function(2, 3)

    assert instance.compose(h, instance.leg(x, fn)) == instance.leg(h.cod, finset.compose(h.g, fn))
    assert instance.compose(instance.leg(x, fn), instance.discrete_map(q)) == instance.leg(x, finset.compose(fn, q))


def arrow_multiset(instance, x, g: FinFunction) -> Counter:
    return Counter(
        (instance.push_end(x.src_ends[e], g), instance.push_end(x.tgt_ends[e], g), x.decorations[e])
        for e in range(x.arrows.size)
    )


def isomorphic_by_permutation(instance, x, y) -> bool:
    if x.points != y.points or x.arrows != y.arrows:
        return False
    target = arrow_multiset(instance, y, FinFunction.identity(y.points))
    return any(
        arrow_multiset(instance, x, FinFunction(x.points, y.points, perm)) == target
        for perm in itertools.permutations(range(x.points.size))
    )


def shuffled(size: int) -> FinFunction:
    values = list(range(size))
    rng().shuffle(values)
    return FinFunction.from_list(values, size)


def moved_end(instance, x):
    """``x`` with the target of its first arrow pushed along a random function."""
    if not x.arrows.size:
        return x
    tgt_ends = list(x.tgt_ends)
    tgt_ends[0] = instance.push_end(tgt_ends[0], random_function(x.points.size, x.points.size))
    return instance.build(x.points, x.arrows, x.src_ends, tgt_ends, x.decorations)


@pytest.mark.parametrize('seed', range(60))
@pytest.mark.parametrize('instance', [GRAPH, LGRAPH, PETRI], ids=lambda X: X.name)
def test_isomorphism_search_agrees_with_permutations(instance, seed):
    factory.random.reseed_random(seed)
    sizes = {'places': 5} if instance is PETRI else {'nodes': 5}
    x = draw_object(instance, **sizes)
    relabelled, _ = instance.relabel(x, shuffled(x.points.size), shuffled(x.arrows.size))

    for y in (relabelled, moved_end(instance, relabelled)):
        found = instance.find_isomorphism(x, y)
        assert (found is not None) == isomorphic_by_permutation(instance, x, y)
        if found is not None:
            assert (found.dom, found.cod) == (x, y)
            assert instance.is_iso(found)
    assert instance.find_isomorphism(x, relabelled) is not None


def random_morphism_from(instance, w):
    """Include ``w`` in a bigger object, then glue a few of its points together."""
    inclusion = instance.coproduct(w, draw_object(instance)).left
    bigger = inclusion.cod
    k = rng().randint(0, 2)
    glued = instance.pushout(
        instance.leg(bigger, random_function(k, bigger.points.size)),
        instance.discrete_map(random_function(k, max(k, 1))),
    )
    return instance.compose(glued.left, inclusion)


@pytest.mark.parametrize('seed', range(50))
@pytest.mark.parametrize('instance', INSTANCES, ids=lambda X: X.name)
def test_pushout_legs_are_morphisms(instance, seed):
    factory.random.reseed_random(seed)
    w = draw_object(instance)
    f, g = random_morphism_from(instance, w), random_morphism_from(instance, w)
    assert instance.is_valid_morphism(f)
    assert instance.is_valid_morphism(g)

    po = instance.pushout(f, g)
    assert instance.is_valid_morphism(po.left)
    assert instance.is_valid_morphism(po.right)
    assert instance.compose(po.left, f) == instance.compose(po.right, g)
    assert instance.pushout_mediator(po, po.left, po.right) == instance.identity(po.apex)
