"""
Maps between structured-cospan categories induced by a commuting square.

A square consists of a functor ``F0`` on finite sets, a pushout-preserving
functor ``F1`` between instances, and a natural isomorphism
``alpha_a : L'(F0 a) -> F1(L a)``.
"""

from dataclasses import dataclass
from typing import Any, Callable, Tuple

from .cospans import (
    StructuredCospan,
    TwoMorphism,
    associator,
    hcompose2,
    hcompose_pushout,
    identity_cell,
    identity_two_morphism,
    left_unitor,
    right_unitor,
    vcompose,
)
from .finset import FinFunction, FinSet
from .instances import TwoSortedInstance, TwoSortedMorphism


@dataclass(frozen=True)
class SquareData:
    source: TwoSortedInstance
    target: TwoSortedInstance
    object_map: Callable[[FinSet], FinSet]
    function_map: Callable[[FinFunction], FinFunction]
    apex_map: Callable[[Any], Any]
    morphism_map: Callable[[TwoSortedMorphism], TwoSortedMorphism]
    alpha: Callable[[FinSet], TwoSortedMorphism]


def identity_square_data(instance: TwoSortedInstance) -> SquareData:
    return SquareData(
        source=instance,
        target=instance,
        object_map=lambda a: a,
        function_map=lambda f: f,
        apex_map=lambda x: x,
        morphism_map=lambda m: m,
        alpha=lambda a: instance.identity(instance.discrete(a)),
    )


def alpha_is_natural(sq: SquareData, g: FinFunction) -> bool:
    """``F1(L g) . alpha_a == alpha_b . L'(F0 g)``."""
    X, Y = sq.source, sq.target
    lhs = Y.compose(sq.morphism_map(X.discrete_map(g)), sq.alpha(g.dom))
    rhs = Y.compose(sq.alpha(g.cod), Y.discrete_map(sq.function_map(g)))
    return lhs == rhs


def map_cospan(sq: SquareData, c: StructuredCospan) -> StructuredCospan:
    Y = sq.target
    return StructuredCospan(
        Y,
        sq.object_map(c.foot_in),
        sq.object_map(c.foot_out),
        sq.apex_map(c.apex),
        Y.compose(sq.morphism_map(c.leg_in), sq.alpha(c.foot_in)),
        Y.compose(sq.morphism_map(c.leg_out), sq.alpha(c.foot_out)),
    )


def map_two_morphism(sq: SquareData, t: TwoMorphism) -> TwoMorphism:
    return TwoMorphism(
        map_cospan(sq, t.src_cell),
        map_cospan(sq, t.tgt_cell),
        sq.function_map(t.alpha),
        sq.function_map(t.beta),
        sq.morphism_map(t.f),
    )


def composition_comparison(sq: SquareData, c1: StructuredCospan, c2: StructuredCospan) -> TwoMorphism:
    """``F(c1) ; F(c2) => F(c1 ; c2)``, the mediator out of the pushout of images."""
    Y = sq.target
    composite, po = hcompose_pushout(c1, c2)
    source, po_images = hcompose_pushout(map_cospan(sq, c1), map_cospan(sq, c2))
    apex_map = Y.pushout_mediator(po_images, sq.morphism_map(po.left), sq.morphism_map(po.right))
    return TwoMorphism(
        source,
        map_cospan(sq, composite),
        FinFunction.identity(source.foot_in),
        FinFunction.identity(source.foot_out),
        apex_map,
    )


def unit_comparison(sq: SquareData, a: FinSet) -> TwoMorphism:
    """``U'_{F0 a} => F(U_a)`` with apex map ``alpha_a``."""
    b = sq.object_map(a)
    return TwoMorphism(
        identity_cell(sq.target, b),
        map_cospan(sq, identity_cell(sq.source, a)),
        FinFunction.identity(b),
        FinFunction.identity(b),
        sq.alpha(a),
    )


def composition_hexagon(sq: SquareData, c1, c2, c3) -> Tuple[TwoMorphism, TwoMorphism]:
    """Both ways from ``(F c1 ; F c2) ; F c3`` to ``F(c1 ; (c2 ; c3))``."""
    f1, f2, f3 = (map_cospan(sq, c) for c in (c1, c2, c3))
    c12, _ = hcompose_pushout(c1, c2)
    c23, _ = hcompose_pushout(c2, c3)
    through_left = vcompose(
        vcompose(
            hcompose2(composition_comparison(sq, c1, c2), identity_two_morphism(f3)),
            composition_comparison(sq, c12, c3),
        ),
        map_two_morphism(sq, associator(c1, c2, c3)),
    )
    through_right = vcompose(
        vcompose(
            associator(f1, f2, f3),
            hcompose2(identity_two_morphism(f1), composition_comparison(sq, c2, c3)),
        ),
        composition_comparison(sq, c1, c23),
    )
    return through_left, through_right


def unit_coherence(sq: SquareData, c: StructuredCospan) -> Tuple[Tuple[TwoMorphism, TwoMorphism], Tuple[TwoMorphism, TwoMorphism]]:
    """The left and right unit squares, each as a pair of paths that should agree."""
    fc = map_cospan(sq, c)
    left = vcompose(
        vcompose(
            hcompose2(unit_comparison(sq, c.foot_in), identity_two_morphism(fc)),
            composition_comparison(sq, identity_cell(sq.source, c.foot_in), c),
        ),
        map_two_morphism(sq, left_unitor(c)),
    )
    right = vcompose(
        vcompose(
            hcompose2(identity_two_morphism(fc), unit_comparison(sq, c.foot_out)),
            composition_comparison(sq, c, identity_cell(sq.source, c.foot_out)),
        ),
        map_two_morphism(sq, right_unitor(c)),
    )
    return (left, left_unitor(fc)), (right, right_unitor(fc))
