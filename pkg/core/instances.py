"""
Finitely cocomplete instance categories with a left adjoint from FinSet.

Every instance here is two-sorted: an object has a set of points (nodes or
places) and a set of arrows (edges or transitions), and each arrow has a source
end and a target end living over the points. For graphs an end is a single
node; for Petri nets it is a multiset of places. Labels and rates ride on the
arrows as decorations that morphisms must preserve.

Colimits are computed pointwise from the chosen colimits in ``core.finset``.
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, NamedTuple, Optional, Sequence, Tuple

from django.conf import settings

from . import finset
from .exceptions import (
    IndexOutOfRange,
    InvalidStructure,
    LabelConflict,
    MismatchedBoundary,
    NonCommutingSquare,
    NotInvertible,
    RateConflict,
)
from .finset import FinFunction, FinSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Multiset:
    """A finite multiset over ``base`` stored as dense counts."""

    base: FinSet
    counts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'counts', tuple(self.counts))
        if len(self.counts) != self.base.size:
            raise InvalidStructure(f"multiset has {len(self.counts)} counts over a base of size {self.base.size}")
        if any(not isinstance(c, int) or c < 0 for c in self.counts):
            raise InvalidStructure(f"multiset counts must be natural numbers, got {list(self.counts)}")

    @classmethod
    def zero(cls, base: FinSet) -> 'Multiset':
        return cls(base, (0,) * base.size)

    @classmethod
    def from_mapping(cls, base: FinSet, mapping: Dict[int, int]) -> 'Multiset':
        counts = [0] * base.size
        for index, count in mapping.items():
            if not 0 <= index < base.size:
                raise IndexOutOfRange(f"element {index} outside a base of size {base.size}")
            counts[index] += count
        return cls(base, tuple(counts))

    def __add__(self, other: 'Multiset') -> 'Multiset':
        if self.base != other.base:
            raise MismatchedBoundary("cannot add multisets over different bases")
        return Multiset(self.base, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: 'Multiset') -> 'Multiset':
        if not self.covers(other):
            raise InvalidStructure("multiset difference would be negative")
        return Multiset(self.base, tuple(a - b for a, b in zip(self.counts, other.counts)))

    def covers(self, other: 'Multiset') -> bool:
        return self.base == other.base and all(a >= b for a, b in zip(self.counts, other.counts))

    def pushforward(self, g: FinFunction) -> 'Multiset':
        """Image along ``g``, summing counts over each fiber."""
        if g.dom != self.base:
            raise MismatchedBoundary(f"cannot push a multiset over {self.base.size} along a map from {g.dom.size}")
        counts = [0] * g.cod.size
        for element, count in enumerate(self.counts):
            counts[g(element)] += count
        return Multiset(g.cod, tuple(counts))

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.counts) if c)

    def total(self) -> int:
        return sum(self.counts)

    def scale(self, k: int) -> 'Multiset':
        return Multiset(self.base, tuple(k * c for c in self.counts))


@dataclass(frozen=True)
class Graph:
    nodes: FinSet
    edges: FinSet
    src: FinFunction
    tgt: FinFunction

    def __post_init__(self):
        for name, fn in (('src', self.src), ('tgt', self.tgt)):
            if fn.dom != self.edges or fn.cod != self.nodes:
                raise InvalidStructure(f"{name} must map the {self.edges.size} edges into the {self.nodes.size} nodes")

    @classmethod
    def from_edges(cls, nodes: int, edges: Sequence[Tuple[int, int]]) -> 'Graph':
        edge_set, node_set = FinSet(len(edges)), FinSet(nodes)
        return cls(
            node_set,
            edge_set,
            FinFunction(edge_set, node_set, tuple(s for s, _ in edges)),
            FinFunction(edge_set, node_set, tuple(t for _, t in edges)),
        )

    @property
    def points(self) -> FinSet:
        return self.nodes

    @property
    def arrows(self) -> FinSet:
        return self.edges

    @property
    def src_ends(self) -> Tuple[int, ...]:
        return self.src.map

    @property
    def tgt_ends(self) -> Tuple[int, ...]:
        return self.tgt.map

    @property
    def decorations(self) -> Tuple[None, ...]:
        return (None,) * self.edges.size


@dataclass(frozen=True)
class LGraph:
    """A graph whose edges carry labels from a fixed label set."""

    graph: Graph
    labels: Tuple[Any, ...]

    def __post_init__(self):
        object.__setattr__(self, 'labels', tuple(self.labels))
        if len(self.labels) != self.graph.edges.size:
            raise InvalidStructure(f"{len(self.labels)} labels for {self.graph.edges.size} edges")

    @classmethod
    def from_edges(cls, nodes: int, edges: Sequence[Tuple[int, int]], labels: Sequence[Any]) -> 'LGraph':
        return cls(Graph.from_edges(nodes, edges), tuple(labels))

    nodes = property(lambda self: self.graph.nodes)
    edges = property(lambda self: self.graph.edges)
    src = property(lambda self: self.graph.src)
    tgt = property(lambda self: self.graph.tgt)
    points = property(lambda self: self.graph.nodes)
    arrows = property(lambda self: self.graph.edges)
    src_ends = property(lambda self: self.graph.src.map)
    tgt_ends = property(lambda self: self.graph.tgt.map)
    decorations = property(lambda self: self.labels)


@dataclass(frozen=True)
class PetriNet:
    places: FinSet
    transitions: FinSet
    src: Tuple[Multiset, ...]
    tgt: Tuple[Multiset, ...]

    def __post_init__(self):
        object.__setattr__(self, 'src', tuple(self.src))
        object.__setattr__(self, 'tgt', tuple(self.tgt))
        if len(self.src) != self.transitions.size or len(self.tgt) != self.transitions.size:
            raise InvalidStructure("every transition needs one input and one output multiset")
        for m in self.src + self.tgt:
            if m.base != self.places:
                raise InvalidStructure(f"transition multiset over {m.base.size} places, net has {self.places.size}")

    @property
    def points(self) -> FinSet:
        return self.places

    @property
    def arrows(self) -> FinSet:
        return self.transitions

    @property
    def src_ends(self) -> Tuple[Multiset, ...]:
        return self.src

    @property
    def tgt_ends(self) -> Tuple[Multiset, ...]:
        return self.tgt

    @property
    def decorations(self) -> Tuple[None, ...]:
        return (None,) * self.transitions.size


@dataclass(frozen=True)
class PetriWithRates:
    net: PetriNet
    rates: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'rates', tuple(Fraction(r) for r in self.rates))
        if len(self.rates) != self.net.transitions.size:
            raise InvalidStructure(f"{len(self.rates)} rates for {self.net.transitions.size} transitions")
        if any(r <= 0 for r in self.rates):
            raise InvalidStructure("rate constants must be positive")

    places = property(lambda self: self.net.places)
    transitions = property(lambda self: self.net.transitions)
    src = property(lambda self: self.net.src)
    tgt = property(lambda self: self.net.tgt)
    points = property(lambda self: self.net.places)
    arrows = property(lambda self: self.net.transitions)
    src_ends = property(lambda self: self.net.src)
    tgt_ends = property(lambda self: self.net.tgt)
    decorations = property(lambda self: self.rates)


@dataclass(frozen=True)
class TwoSortedMorphism:
    """A pair of functions: ``f`` on arrows and ``g`` on points."""

    dom: Any
    cod: Any
    f: FinFunction
    g: FinFunction

    def __post_init__(self):
        if self.f.dom != self.dom.arrows or self.f.cod != self.cod.arrows:
            raise MismatchedBoundary("arrow map does not match the arrows of its domain and codomain")
        if self.g.dom != self.dom.points or self.g.cod != self.cod.points:
            raise MismatchedBoundary("point map does not match the points of its domain and codomain")


class GraphMorphism(TwoSortedMorphism):
    pass


class PetriMorphism(TwoSortedMorphism):
    pass


class InstanceCoproduct(NamedTuple):
    apex: Any
    left: TwoSortedMorphism
    right: TwoSortedMorphism


class InstancePushout(NamedTuple):
    apex: Any
    left: TwoSortedMorphism
    right: TwoSortedMorphism
    span: Tuple[TwoSortedMorphism, TwoSortedMorphism]
    points: finset.Pushout
    arrows: finset.Pushout


class TwoSortedInstance:
    """
    Shared machinery for the instance categories.

    Subclasses say how to build an object from raw parts and how an arrow end
    moves along a function on points.
    """

    name = None
    morphism_class = TwoSortedMorphism
    conflict_error = LabelConflict

    # Construction hooks

    def build(self, points: FinSet, arrows: FinSet, src_ends: Sequence, tgt_ends: Sequence, decorations: Sequence):
        raise NotImplementedError

    def push_end(self, end, g: FinFunction):
        raise NotImplementedError

    def end_support(self, end) -> Tuple[int, ...]:
        raise NotImplementedError

    def end_image(self, end, mapping: Dict[int, int]):
        """A hashable image of ``end`` under a point mapping defined on its support."""
        raise NotImplementedError

    def end_weight(self, end, point: int) -> int:
        raise NotImplementedError

    # Identity of the instance survives pickling through the cache

    def __eq__(self, other):
        return isinstance(other, TwoSortedInstance) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __reduce__(self):
        return (get_instance, (self.name,))

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    # Objects and morphisms

    def morphism(self, dom, cod, f: FinFunction, g: FinFunction) -> TwoSortedMorphism:
        return self.morphism_class(dom, cod, f, g)

    def discrete(self, a: FinSet):
        """L(a): the points ``a`` and no arrows."""
        return self.build(a, FinSet(0), (), (), ())

    def discrete_map(self, g: FinFunction) -> TwoSortedMorphism:
        """L(g), carrying ``g`` on points and the empty map on arrows."""
        empty = FinFunction(FinSet(0), FinSet(0), ())
        return self.morphism(self.discrete(g.dom), self.discrete(g.cod), empty, g)

    def underlying(self, x) -> FinSet:
        return x.points

    def leg(self, x, fn: FinFunction) -> TwoSortedMorphism:
        """The morphism ``L(a) -> x`` transposed from a function ``a -> underlying(x)``."""
        if fn.cod != x.points:
            raise MismatchedBoundary(f"leg lands in {fn.cod.size} points but the apex has {x.points.size}")
        return self.morphism(self.discrete(fn.dom), x, finset.initial_map(x.arrows), fn)

    def identity(self, x) -> TwoSortedMorphism:
        return self.morphism(x, x, FinFunction.identity(x.arrows), FinFunction.identity(x.points))

    def compose(self, m2: TwoSortedMorphism, m1: TwoSortedMorphism) -> TwoSortedMorphism:
        """``m2 . m1``."""
        if m1.cod != m2.dom:
            raise MismatchedBoundary("cannot compose morphisms whose boundary objects differ")
        return self.morphism(m1.dom, m2.cod, finset.compose(m2.f, m1.f), finset.compose(m2.g, m1.g))

    def is_valid_morphism(self, m: TwoSortedMorphism) -> bool:
        try:
            self.check_morphism(m)
        except NonCommutingSquare:
            return False
        return True

    def check_morphism(self, m: TwoSortedMorphism) -> None:
        for e in range(m.dom.arrows.size):
            image = m.f(e)
            if self.push_end(m.dom.src_ends[e], m.g) != m.cod.src_ends[image]:
                raise NonCommutingSquare(f"source square fails at arrow {e}")
            if self.push_end(m.dom.tgt_ends[e], m.g) != m.cod.tgt_ends[image]:
                raise NonCommutingSquare(f"target square fails at arrow {e}")
            if m.dom.decorations[e] != m.cod.decorations[image]:
                raise NonCommutingSquare(f"arrow {e} changes its decoration")

    def is_iso(self, m: TwoSortedMorphism) -> bool:
        return m.f.is_bijective() and m.g.is_bijective() and self.is_valid_morphism(m)

    def invert(self, m: TwoSortedMorphism) -> TwoSortedMorphism:
        if not self.is_iso(m):
            raise NotInvertible("morphism is not an isomorphism")
        return self.morphism(m.cod, m.dom, finset.inverse(m.f), finset.inverse(m.g))

    def relabel(self, x, points: FinFunction, arrows: FinFunction):
        """Transport ``x`` along permutations; returns the new object and the iso onto it."""
        if not points.is_bijective() or not arrows.is_bijective():
            raise NotInvertible("relabelling needs permutations of points and arrows")
        back = finset.inverse(arrows)
        order = [back(k) for k in range(x.arrows.size)]
        y = self.build(
            x.points,
            x.arrows,
            [self.push_end(x.src_ends[e], points) for e in order],
            [self.push_end(x.tgt_ends[e], points) for e in order],
            [x.decorations[e] for e in order],
        )
        return y, self.morphism(x, y, arrows, points)

    # Colimits

    def initial(self):
        return self.discrete(FinSet(0))

    def initial_map(self, x) -> TwoSortedMorphism:
        return self.leg(x, finset.initial_map(x.points))

    def coproduct(self, x, y) -> InstanceCoproduct:
        points = finset.coproduct(x.points, y.points)
        arrows = finset.coproduct(x.arrows, y.arrows)
        apex = self.build(
            points.apex,
            arrows.apex,
            [self.push_end(s, points.left) for s in x.src_ends] + [self.push_end(s, points.right) for s in y.src_ends],
            [self.push_end(t, points.left) for t in x.tgt_ends] + [self.push_end(t, points.right) for t in y.tgt_ends],
            list(x.decorations) + list(y.decorations),
        )
        return InstanceCoproduct(
            apex,
            self.morphism(x, apex, arrows.left, points.left),
            self.morphism(y, apex, arrows.right, points.right),
        )

    def copair(self, m1: TwoSortedMorphism, m2: TwoSortedMorphism) -> TwoSortedMorphism:
        if m1.cod != m2.cod:
            raise MismatchedBoundary("cannot copair morphisms into different objects")
        apex = self.coproduct(m1.dom, m2.dom).apex
        return self.morphism(apex, m1.cod, finset.copair(m1.f, m2.f), finset.copair(m1.g, m2.g))

    def coproduct_map(self, m1: TwoSortedMorphism, m2: TwoSortedMorphism) -> TwoSortedMorphism:
        """``m1 + m2`` between chosen coproducts."""
        target = self.coproduct(m1.cod, m2.cod)
        return self.copair(self.compose(target.left, m1), self.compose(target.right, m2))

    def pushout(self, f: TwoSortedMorphism, g: TwoSortedMorphism) -> InstancePushout:
        """
        Pointwise pushout of ``b <-f- a -g-> c``.

        Legs of structured cospans start at arrow-free objects, so composing
        cospans never merges arrows. Merged arrows can only disagree when a leg
        of the span is not a valid morphism, which raises ``conflict_error``.
        """
        if f.dom != g.dom:
            raise MismatchedBoundary("pushout needs a span with a common domain")
        points = finset.pushout(f.g, g.g)
        arrows = finset.pushout(f.f, g.f)
        size = arrows.apex.size
        src, tgt, dec, seen = [None] * size, [None] * size, [None] * size, [False] * size
        for obj, arrow_leg, point_leg in ((f.cod, arrows.left, points.left), (g.cod, arrows.right, points.right)):
            for e in range(obj.arrows.size):
                k = arrow_leg(e)
                ends = (self.push_end(obj.src_ends[e], point_leg), self.push_end(obj.tgt_ends[e], point_leg))
                decoration = obj.decorations[e]
                if not seen[k]:
                    src[k], tgt[k], dec[k], seen[k] = ends[0], ends[1], decoration, True
                    continue
                if (src[k], tgt[k]) != ends:
                    raise NonCommutingSquare(f"merged arrow {k} would have two different boundaries")
                if dec[k] != decoration:
                    raise self.conflict_error(f"merged arrow {k} carries both {dec[k]} and {decoration}")
        apex = self.build(points.apex, arrows.apex, src, tgt, dec)
        return InstancePushout(
            apex=apex,
            left=self.morphism(f.cod, apex, arrows.left, points.left),
            right=self.morphism(g.cod, apex, arrows.right, points.right),
            span=(f, g),
            points=points,
            arrows=arrows,
        )

    def pushout_mediator(self, po: InstancePushout, h_b: TwoSortedMorphism, h_c: TwoSortedMorphism) -> TwoSortedMorphism:
        if h_b.cod != h_c.cod:
            raise MismatchedBoundary("cocone legs end in different objects")
        return self.morphism(
            po.apex,
            h_b.cod,
            finset.pushout_mediator(po.arrows, h_b.f, h_c.f),
            finset.pushout_mediator(po.points, h_b.g, h_c.g),
        )

    # Isomorphism search

    def point_signatures(self, x) -> Tuple[tuple, ...]:
        """Per point, the sorted incidences (weight as source, weight as target, decoration)."""
        incidences = defaultdict(list)
        for e in range(x.arrows.size):
            s, t = x.src_ends[e], x.tgt_ends[e]
            for p in set(self.end_support(s)) | set(self.end_support(t)):
                incidences[p].append((self.end_weight(s, p), self.end_weight(t, p), repr(x.decorations[e])))
        return tuple(tuple(sorted(incidences[p])) for p in range(x.points.size))

    def arrow_key(self, x, e: int, mapping: Dict[int, int]) -> tuple:
        return (
            self.end_image(x.src_ends[e], mapping),
            self.end_image(x.tgt_ends[e], mapping),
            repr(x.decorations[e]),
        )

    def find_isomorphism(self, x, y, fixed: Optional[Dict[int, int]] = None) -> Optional[TwoSortedMorphism]:
        """
        Search for an isomorphism ``x -> y``.

        ``fixed`` pins part of the point map; the constrained search is what
        compares structured cospans with their legs held in place.
        """
        if x.points != y.points or x.arrows != y.arrows:
            return None
        n = x.points.size
        sig_x, sig_y = self.point_signatures(x), self.point_signatures(y)
        if sorted(sig_x) != sorted(sig_y):
            return None
        fixed = dict(fixed or {})
        reserved = {}
        for p, q in fixed.items():
            if reserved.setdefault(q, p) != p:
                return None
        if n > getattr(settings, 'COSPAN_ISO_NODE_LIMIT', 12):
            logger.warning(f"Isomorphism search over {n} points exceeds the desk-scale limit")

        supports_x = [set(self.end_support(x.src_ends[e])) | set(self.end_support(x.tgt_ends[e])) for e in range(x.arrows.size)]
        completes_at = defaultdict(list)
        for e, support in enumerate(supports_x):
            completes_at[max(support) if support else -1].append(e)
        supports_y = [set(self.end_support(y.src_ends[e])) | set(self.end_support(y.tgt_ends[e])) for e in range(y.arrows.size)]
        touching_y = defaultdict(list)
        for e, support in enumerate(supports_y):
            for q in support:
                touching_y[q].append(e)
        identity = {q: q for q in range(n)}
        keys_y = [self.arrow_key(y, e, identity) for e in range(y.arrows.size)]

        free_y = [keys_y[e] for e, support in enumerate(supports_y) if not support]
        if Counter(self.arrow_key(x, e, {}) for e in completes_at[-1]) != Counter(free_y):
            return None

        mapping, used = {}, set()
        explored = 0

        def extend(p):
            nonlocal explored
            if p == n:
                return True
            candidates = [fixed[p]] if p in fixed else range(n)
            for q in candidates:
                if q in used or sig_y[q] != sig_x[p] or reserved.get(q, p) != p:
                    continue
                explored += 1
                mapping[p] = q
                used.add(q)
                done_x = Counter(self.arrow_key(x, e, mapping) for e in completes_at[p])
                done_y = Counter(keys_y[e] for e in touching_y[q] if supports_y[e] <= used)
                if done_x == done_y and extend(p + 1):
                    return True
                del mapping[p]
                used.discard(q)
            return False

        found = extend(0)
        logger.debug(f"{self.name} isomorphism search explored {explored} partial maps, found={found}")
        if not found:
            return None

        g = FinFunction(x.points, y.points, tuple(mapping[p] for p in range(n)))
        pending = defaultdict(list)
        for e in range(y.arrows.size):
            pending[keys_y[e]].append(e)
        arrow_map = []
        for e in range(x.arrows.size):
            arrow_map.append(pending[self.arrow_key(x, e, mapping)].pop(0))
        return self.morphism(x, y, FinFunction(x.arrows, y.arrows, tuple(arrow_map)), g)


class GraphInstance(TwoSortedInstance):
    name = 'graph'
    morphism_class = GraphMorphism

    def build(self, points, arrows, src_ends, tgt_ends, decorations):
        return Graph(points, arrows, FinFunction(arrows, points, tuple(src_ends)), FinFunction(arrows, points, tuple(tgt_ends)))

    def push_end(self, end, g):
        return g(end)

    def end_support(self, end):
        return (end,)

    def end_image(self, end, mapping):
        return mapping[end]

    def end_weight(self, end, point):
        return int(end == point)


class LGraphInstance(GraphInstance):
    name = 'lgraph'

    def build(self, points, arrows, src_ends, tgt_ends, decorations):
        return LGraph(super().build(points, arrows, src_ends, tgt_ends, decorations), tuple(decorations))


class PetriInstance(TwoSortedInstance):
    name = 'petri'
    morphism_class = PetriMorphism
    conflict_error = RateConflict

    def build(self, points, arrows, src_ends, tgt_ends, decorations):
        return PetriNet(points, arrows, tuple(src_ends), tuple(tgt_ends))

    def push_end(self, end, g):
        return end.pushforward(g)

    def end_support(self, end):
        return end.support()

    def end_image(self, end, mapping):
        return tuple(sorted((mapping[p], end.counts[p]) for p in end.support()))

    def end_weight(self, end, point):
        return end.counts[point]


class PetriRatesInstance(PetriInstance):
    name = 'petri_rates'

    def build(self, points, arrows, src_ends, tgt_ends, decorations):
        return PetriWithRates(super().build(points, arrows, src_ends, tgt_ends, decorations), tuple(decorations))


INSTANCES: Dict[str, TwoSortedInstance] = {}


def register_instance(instance: TwoSortedInstance) -> TwoSortedInstance:
    INSTANCES[instance.name] = instance
    return instance


def get_instance(name: str) -> TwoSortedInstance:
    try:
        return INSTANCES[name]
    except KeyError:
        raise InvalidStructure(f"unknown instance {name!r}; known: {', '.join(sorted(INSTANCES))}")


GRAPH = register_instance(GraphInstance())
LGRAPH = register_instance(LGraphInstance())
PETRI = register_instance(PetriInstance())
PETRI_RATES = register_instance(PetriRatesInstance())


def petri_net(places: int, transitions: Iterable[Tuple[Dict[int, int], Dict[int, int]]]) -> PetriNet:
    """Build a net from ``(inputs, outputs)`` pairs of ``{place: count}`` dicts."""
    base = FinSet(places)
    transitions = list(transitions)
    return PetriNet(
        base,
        FinSet(len(transitions)),
        tuple(Multiset.from_mapping(base, s) for s, _ in transitions),
        tuple(Multiset.from_mapping(base, t) for _, t in transitions),
    )
