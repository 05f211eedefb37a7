"""
Structured cospans ``L(a) -> x <- L(b)`` over a two-sorted instance category.

Horizontal composition glues apexes along the chosen pushout, tensor places
cells side by side along chosen coproducts, and 2-morphisms are commuting
rectangles checked when they are built. Coherence cells are assembled from
explicit mediators so that their laws can be checked as equalities.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, NamedTuple, Optional, Tuple

from . import finset
from .cache_utils import cache_computation
from .exceptions import MismatchedBoundary, NonCommutingSquare, NotInvertible
from .finset import FinFunction, FinSet
from .instances import InstancePushout, TwoSortedInstance, TwoSortedMorphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StructuredCospan:
    instance: TwoSortedInstance
    foot_in: FinSet
    foot_out: FinSet
    apex: Any
    leg_in: TwoSortedMorphism
    leg_out: TwoSortedMorphism

    def __post_init__(self):
        X = self.instance
        if self.leg_in.dom != X.discrete(self.foot_in) or self.leg_out.dom != X.discrete(self.foot_out):
            raise MismatchedBoundary("a leg does not start at the image of its foot")
        if self.leg_in.cod != self.apex or self.leg_out.cod != self.apex:
            raise MismatchedBoundary("a leg does not end at the apex")

    @classmethod
    def from_maps(cls, instance: TwoSortedInstance, apex, leg_in: FinFunction, leg_out: FinFunction) -> 'StructuredCospan':
        """Build a cospan from the functions the legs carry on points."""
        return cls(instance, leg_in.dom, leg_out.dom, apex, instance.leg(apex, leg_in), instance.leg(apex, leg_out))

    def __repr__(self):
        return (
            f"StructuredCospan({self.instance.name}, {self.foot_in.size}->{self.foot_out.size}, "
            f"apex={self.apex!r}, in={list(self.leg_in.g.map)}, out={list(self.leg_out.g.map)})"
        )


@dataclass(frozen=True)
class TwoMorphism:
    """A commuting rectangle from ``src_cell`` to ``tgt_cell``."""

    src_cell: StructuredCospan
    tgt_cell: StructuredCospan
    alpha: FinFunction
    beta: FinFunction
    f: TwoSortedMorphism

    def __post_init__(self):
        src, tgt = self.src_cell, self.tgt_cell
        if src.instance != tgt.instance:
            raise MismatchedBoundary("a 2-morphism cannot change instance")
        X = src.instance
        if self.alpha.dom != src.foot_in or self.alpha.cod != tgt.foot_in:
            raise MismatchedBoundary("alpha does not run between the input feet")
        if self.beta.dom != src.foot_out or self.beta.cod != tgt.foot_out:
            raise MismatchedBoundary("beta does not run between the output feet")
        if self.f.dom != src.apex or self.f.cod != tgt.apex:
            raise MismatchedBoundary("apex map does not run between the apexes")
        X.check_morphism(self.f)
        if X.compose(self.f, src.leg_in) != X.compose(tgt.leg_in, X.discrete_map(self.alpha)):
            raise NonCommutingSquare("input square does not commute")
        if X.compose(self.f, src.leg_out) != X.compose(tgt.leg_out, X.discrete_map(self.beta)):
            raise NonCommutingSquare("output square does not commute")

    @property
    def instance(self) -> TwoSortedInstance:
        return self.src_cell.instance

    def is_globular(self) -> bool:
        return (
            self.alpha == FinFunction.identity(self.alpha.dom)
            and self.beta == FinFunction.identity(self.beta.dom)
        )


class Companion(NamedTuple):
    cell: StructuredCospan
    alpha_cell: TwoMorphism
    beta_cell: TwoMorphism


def _same_instance(*cells) -> TwoSortedInstance:
    instance = cells[0].instance
    if any(c.instance != instance for c in cells[1:]):
        raise MismatchedBoundary("cells live in different instances")
    return instance


# Horizontal structure

def identity_cell(instance: TwoSortedInstance, a: FinSet) -> StructuredCospan:
    La = instance.discrete(a)
    unit = instance.identity(La)
    return StructuredCospan(instance, a, a, La, unit, unit)


def hcompose_pushout(c1: StructuredCospan, c2: StructuredCospan) -> Tuple[StructuredCospan, InstancePushout]:
    """The composite together with the pushout that built it."""
    X = _same_instance(c1, c2)
    if c1.foot_out != c2.foot_in:
        raise MismatchedBoundary(f"cannot compose: output foot {c1.foot_out.size} meets input foot {c2.foot_in.size}")
    po = X.pushout(c1.leg_out, c2.leg_in)
    cell = StructuredCospan(
        X,
        c1.foot_in,
        c2.foot_out,
        po.apex,
        X.compose(po.left, c1.leg_in),
        X.compose(po.right, c2.leg_out),
    )
    return cell, po


def hcompose(c1: StructuredCospan, c2: StructuredCospan) -> StructuredCospan:
    """``c2 . c1`` in diagrammatic order: c1 runs a -> b and c2 runs b -> c."""
    return hcompose_pushout(c1, c2)[0]


def mirror(c: StructuredCospan) -> StructuredCospan:
    """The same cospan read backwards."""
    return StructuredCospan(c.instance, c.foot_out, c.foot_in, c.apex, c.leg_out, c.leg_in)


# Vertical structure

def identity_two_morphism(c: StructuredCospan) -> TwoMorphism:
    return TwoMorphism(
        c, c, FinFunction.identity(c.foot_in), FinFunction.identity(c.foot_out), c.instance.identity(c.apex)
    )


def identity_square(instance: TwoSortedInstance, f: FinFunction) -> TwoMorphism:
    """``U_f`` between the identity cells on the ends of ``f``."""
    return TwoMorphism(identity_cell(instance, f.dom), identity_cell(instance, f.cod), f, f, instance.discrete_map(f))


def vcompose(t1: TwoMorphism, t2: TwoMorphism) -> TwoMorphism:
    """``t1`` then ``t2``; componentwise composition."""
    if t1.tgt_cell != t2.src_cell:
        raise MismatchedBoundary("vertical composition needs the first target to be the second source")
    X = t1.instance
    return TwoMorphism(
        t1.src_cell,
        t2.tgt_cell,
        finset.compose(t2.alpha, t1.alpha),
        finset.compose(t2.beta, t1.beta),
        X.compose(t2.f, t1.f),
    )


def hcompose2(t1: TwoMorphism, t2: TwoMorphism) -> TwoMorphism:
    """Horizontal composite; the apex map is the mediator out of the source pushout."""
    X = t1.instance
    if t1.beta != t2.alpha:
        raise MismatchedBoundary("2-morphisms are not horizontally adjacent")
    source, po_source = hcompose_pushout(t1.src_cell, t2.src_cell)
    target, po_target = hcompose_pushout(t1.tgt_cell, t2.tgt_cell)
    apex_map = X.pushout_mediator(po_source, X.compose(po_target.left, t1.f), X.compose(po_target.right, t2.f))
    return TwoMorphism(source, target, t1.alpha, t2.beta, apex_map)


def mirror_two_morphism(t: TwoMorphism) -> TwoMorphism:
    return TwoMorphism(mirror(t.src_cell), mirror(t.tgt_cell), t.beta, t.alpha, t.f)


def invert_two_morphism(t: TwoMorphism) -> TwoMorphism:
    X = t.instance
    return TwoMorphism(t.tgt_cell, t.src_cell, finset.inverse(t.alpha), finset.inverse(t.beta), X.invert(t.f))


def associator(c1: StructuredCospan, c2: StructuredCospan, c3: StructuredCospan) -> TwoMorphism:
    """``(c1 c2) c3 => c1 (c2 c3)``, both read in diagrammatic order."""
    X = _same_instance(c1, c2, c3)
    c12, po12 = hcompose_pushout(c1, c2)
    left, po_left = hcompose_pushout(c12, c3)
    c23, po23 = hcompose_pushout(c2, c3)
    right, po_right = hcompose_pushout(c1, c23)
    inner = X.pushout_mediator(po12, po_right.left, X.compose(po_right.right, po23.left))
    apex_map = X.pushout_mediator(po_left, inner, X.compose(po_right.right, po23.right))
    return TwoMorphism(
        left, right, FinFunction.identity(c1.foot_in), FinFunction.identity(c3.foot_out), apex_map
    )


def left_unitor(c: StructuredCospan) -> TwoMorphism:
    """``U_a c => c``."""
    X = c.instance
    composite, po = hcompose_pushout(identity_cell(X, c.foot_in), c)
    apex_map = X.pushout_mediator(po, c.leg_in, X.identity(c.apex))
    return TwoMorphism(composite, c, FinFunction.identity(c.foot_in), FinFunction.identity(c.foot_out), apex_map)


def right_unitor(c: StructuredCospan) -> TwoMorphism:
    """``c U_b => c``."""
    X = c.instance
    composite, po = hcompose_pushout(c, identity_cell(X, c.foot_out))
    apex_map = X.pushout_mediator(po, X.identity(c.apex), c.leg_out)
    return TwoMorphism(composite, c, FinFunction.identity(c.foot_in), FinFunction.identity(c.foot_out), apex_map)


# Monoidal structure

def _tensor_leg(X: TwoSortedInstance, leg1: TwoSortedMorphism, leg2: TwoSortedMorphism, apex) -> TwoSortedMorphism:
    """``(leg1 + leg2)`` precomposed with the comparison ``L(a1 + a2) -> L(a1) + L(a2)``."""
    a1, a2 = leg1.g.dom, leg2.g.dom
    feet = finset.coproduct(a1, a2)
    comparison = X.invert(X.copair(X.discrete_map(feet.left), X.discrete_map(feet.right)))
    summed = X.coproduct(leg1.cod, leg2.cod)
    if summed.apex != apex:
        raise MismatchedBoundary("tensor leg aimed at the wrong apex")
    return X.compose(X.copair(X.compose(summed.left, leg1), X.compose(summed.right, leg2)), comparison)


def tensor_cells(c1: StructuredCospan, c2: StructuredCospan) -> StructuredCospan:
    X = _same_instance(c1, c2)
    apex = X.coproduct(c1.apex, c2.apex).apex
    return StructuredCospan(
        X,
        finset.coproduct(c1.foot_in, c2.foot_in).apex,
        finset.coproduct(c1.foot_out, c2.foot_out).apex,
        apex,
        _tensor_leg(X, c1.leg_in, c2.leg_in, apex),
        _tensor_leg(X, c1.leg_out, c2.leg_out, apex),
    )


def tensor_two_morphisms(t1: TwoMorphism, t2: TwoMorphism) -> TwoMorphism:
    X = _same_instance(t1.src_cell, t2.src_cell)
    return TwoMorphism(
        tensor_cells(t1.src_cell, t2.src_cell),
        tensor_cells(t1.tgt_cell, t2.tgt_cell),
        finset.coproduct_map(t1.alpha, t2.alpha),
        finset.coproduct_map(t1.beta, t2.beta),
        X.coproduct_map(t1.f, t2.f),
    )


def monoidal_unit(instance: TwoSortedInstance) -> StructuredCospan:
    return identity_cell(instance, FinSet(0))


def _finset_associator(a: FinSet, b: FinSet, c: FinSet) -> FinFunction:
    inner = finset.coproduct(b, c)
    outer = finset.coproduct(a, inner.apex)
    return finset.copair(
        finset.copair(outer.left, finset.compose(outer.right, inner.left)),
        finset.compose(outer.right, inner.right),
    )


def tensor_associator(c1: StructuredCospan, c2: StructuredCospan, c3: StructuredCospan) -> TwoMorphism:
    """``(c1 c2) c3 => c1 (c2 c3)`` for the tensor product."""
    X = _same_instance(c1, c2, c3)
    inner = X.coproduct(c2.apex, c3.apex)
    outer = X.coproduct(c1.apex, inner.apex)
    apex_map = X.copair(
        X.copair(outer.left, X.compose(outer.right, inner.left)),
        X.compose(outer.right, inner.right),
    )
    return TwoMorphism(
        tensor_cells(tensor_cells(c1, c2), c3),
        tensor_cells(c1, tensor_cells(c2, c3)),
        _finset_associator(c1.foot_in, c2.foot_in, c3.foot_in),
        _finset_associator(c1.foot_out, c2.foot_out, c3.foot_out),
        apex_map,
    )


def tensor_left_unitor(c: StructuredCospan) -> TwoMorphism:
    """``I c => c`` where I is the monoidal unit."""
    X = c.instance
    return TwoMorphism(
        tensor_cells(monoidal_unit(X), c),
        c,
        finset.copair(finset.initial_map(c.foot_in), FinFunction.identity(c.foot_in)),
        finset.copair(finset.initial_map(c.foot_out), FinFunction.identity(c.foot_out)),
        X.copair(X.initial_map(c.apex), X.identity(c.apex)),
    )


def tensor_right_unitor(c: StructuredCospan) -> TwoMorphism:
    """``c I => c``."""
    X = c.instance
    return TwoMorphism(
        tensor_cells(c, monoidal_unit(X)),
        c,
        finset.copair(FinFunction.identity(c.foot_in), finset.initial_map(c.foot_in)),
        finset.copair(FinFunction.identity(c.foot_out), finset.initial_map(c.foot_out)),
        X.copair(X.identity(c.apex), X.initial_map(c.apex)),
    )


def braiding_cells(c1: StructuredCospan, c2: StructuredCospan) -> TwoMorphism:
    """The symmetry ``c1 c2 => c2 c1``: block swaps on both feet and on the apex."""
    X = _same_instance(c1, c2)
    target = X.coproduct(c2.apex, c1.apex)
    return TwoMorphism(
        tensor_cells(c1, c2),
        tensor_cells(c2, c1),
        finset.swap(c1.foot_in, c2.foot_in),
        finset.swap(c1.foot_out, c2.foot_out),
        X.copair(target.right, target.left),
    )


def tensor_compose_comparison(c1, c2, c3, c4) -> TwoMorphism:
    """The interchange cell ``(c1 c2) ; (c3 c4) => (c1 ; c3)(c2 ; c4)``, tensor inside, composite outside."""
    X = _same_instance(c1, c2, c3, c4)
    source, po = hcompose_pushout(tensor_cells(c1, c2), tensor_cells(c3, c4))
    c13, po13 = hcompose_pushout(c1, c3)
    c24, po24 = hcompose_pushout(c2, c4)
    target = tensor_cells(c13, c24)
    into = X.coproduct(c13.apex, c24.apex)
    apex_map = X.pushout_mediator(
        po,
        X.copair(X.compose(into.left, po13.left), X.compose(into.right, po24.left)),
        X.copair(X.compose(into.left, po13.right), X.compose(into.right, po24.right)),
    )
    return TwoMorphism(
        source, target, FinFunction.identity(source.foot_in), FinFunction.identity(source.foot_out), apex_map
    )


# Companions and conjoints

def companion(instance: TwoSortedInstance, f: FinFunction) -> Companion:
    """``L(a) --L(f)--> L(b) <--1-- L(b)`` with its two binding cells."""
    if not f.is_bijective():
        raise NotInvertible(f"companions are built for bijections, got {list(f.map)}")
    Lb = instance.discrete(f.cod)
    cell = StructuredCospan(instance, f.dom, f.cod, Lb, instance.discrete_map(f), instance.identity(Lb))
    alpha_cell = TwoMorphism(cell, identity_cell(instance, f.cod), f, FinFunction.identity(f.cod), instance.identity(Lb))
    beta_cell = TwoMorphism(
        identity_cell(instance, f.dom), cell, FinFunction.identity(f.dom), f, instance.discrete_map(f)
    )
    return Companion(cell, alpha_cell, beta_cell)


def conjoint(instance: TwoSortedInstance, f: FinFunction) -> Companion:
    """The companion read in the horizontal opposite."""
    comp = companion(instance, f)
    return Companion(mirror(comp.cell), mirror_two_morphism(comp.alpha_cell), mirror_two_morphism(comp.beta_cell))


# Isomorphism classes

def leg_pinning(c1: StructuredCospan, c2: StructuredCospan) -> Optional[dict]:
    """Point assignments forced on an apex iso that fixes the legs, or None if they clash."""
    fixed = {}
    for leg1, leg2 in ((c1.leg_in.g, c2.leg_in.g), (c1.leg_out.g, c2.leg_out.g)):
        for k in range(leg1.dom.size):
            if fixed.setdefault(leg1(k), leg2(k)) != leg2(k):
                return None
    return fixed


def find_cospan_isomorphism(c1: StructuredCospan, c2: StructuredCospan) -> Optional[TwoMorphism]:
    """A globular invertible 2-morphism ``c1 => c2`` if one exists."""
    X = c1.instance
    if c1.instance != c2.instance or c1.foot_in != c2.foot_in or c1.foot_out != c2.foot_out:
        return None
    fixed = leg_pinning(c1, c2)
    if fixed is None:
        return None
    iso = X.find_isomorphism(c1.apex, c2.apex, fixed)
    if iso is None:
        return None
    return TwoMorphism(c1, c2, FinFunction.identity(c1.foot_in), FinFunction.identity(c1.foot_out), iso)


@cache_computation('cospan_canonical')
def canonical_form(c: StructuredCospan) -> StructuredCospan:
    """
    Renumber the apex: leg images first, then breadth-first along arrows.

    Points no leg reaches are seeded by incidence signature. Arrows are then
    sorted by their ends under the new numbering.
    """
    X = c.instance
    x = c.apex
    n = x.points.size
    signatures = X.point_signatures(x)
    neighbours = [set() for _ in range(n)]
    for e in range(x.arrows.size):
        support = set(X.end_support(x.src_ends[e])) | set(X.end_support(x.tgt_ends[e]))
        for p in support:
            neighbours[p] |= support - {p}

    order, seen = [], set()

    def visit(seeds):
        queue = deque()
        for p in seeds:
            if p not in seen:
                seen.add(p)
                order.append(p)
                queue.append(p)
        while queue:
            p = queue.popleft()
            for q in sorted(neighbours[p] - seen, key=lambda q: (signatures[q], q)):
                seen.add(q)
                order.append(q)
                queue.append(q)

    visit(list(c.leg_in.g.map) + list(c.leg_out.g.map))
    for p in sorted(range(n), key=lambda p: (signatures[p], p)):
        visit([p])

    points = FinFunction(x.points, x.points, tuple(order.index(p) for p in range(n)))
    mapping = {p: points(p) for p in range(n)}
    arrow_order = sorted(range(x.arrows.size), key=lambda e: (repr(X.arrow_key(x, e, mapping)), e))
    arrows = FinFunction(x.arrows, x.arrows, tuple(arrow_order.index(e) for e in range(x.arrows.size)))
    y, iso = X.relabel(x, points, arrows)
    return StructuredCospan(c.instance, c.foot_in, c.foot_out, y, X.compose(iso, c.leg_in), X.compose(iso, c.leg_out))


class CospanIsoClass:
    """An isomorphism class of structured cospans, held by a canonical representative."""

    def __init__(self, representative: StructuredCospan):
        self.representative = representative

    @property
    def instance(self):
        return self.representative.instance

    @property
    def foot_in(self):
        return self.representative.foot_in

    @property
    def foot_out(self):
        return self.representative.foot_out

    def isomorphism(self, other: 'CospanIsoClass') -> Optional[TwoMorphism]:
        return find_cospan_isomorphism(self.representative, other.representative)

    def __eq__(self, other):
        if not isinstance(other, CospanIsoClass):
            return NotImplemented
        if self.representative == other.representative:
            return True
        return self.isomorphism(other) is not None

    def __hash__(self):
        rep = self.representative
        signatures = rep.instance.point_signatures(rep.apex)
        return hash((
            rep.instance.name,
            rep.foot_in.size,
            rep.foot_out.size,
            rep.apex.points.size,
            rep.apex.arrows.size,
            tuple(sorted(signatures)),
        ))

    def __repr__(self):
        return f"CospanIsoClass({self.representative!r})"


def iso_class(c: StructuredCospan) -> CospanIsoClass:
    return CospanIsoClass(canonical_form(c))


def decat_compose(k1: CospanIsoClass, k2: CospanIsoClass) -> CospanIsoClass:
    return iso_class(hcompose(k1.representative, k2.representative))


def decat_identity(instance: TwoSortedInstance, a: FinSet) -> CospanIsoClass:
    return iso_class(identity_cell(instance, a))


def decat_tensor(k1: CospanIsoClass, k2: CospanIsoClass) -> CospanIsoClass:
    return iso_class(tensor_cells(k1.representative, k2.representative))


def decat_braiding(instance: TwoSortedInstance, a: FinSet, b: FinSet) -> CospanIsoClass:
    """The class of the companion of the block swap ``a + b -> b + a``."""
    return iso_class(companion(instance, finset.swap(a, b)).cell)
