"""
Petri nets as presentations of free commutative monoidal categories.

Objects of the category presented by a net are markings (multisets of places);
each transition contributes a generating morphism from its inputs to its
outputs. Existence of a morphism between two markings is reachability.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional, Sequence, Tuple, Union

from core.exceptions import IllTypedCompose, IndexOutOfRange, InvalidStructure, MismatchedBoundary
from core.finset import FinFunction, FinSet
from core.functors import SquareData
from core.instances import (
    PETRI,
    Multiset,
    PetriInstance,
    PetriMorphism,
    PetriNet,
    TwoSortedMorphism,
    register_instance,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MorphismGenerator:
    source: Multiset
    target: Multiset
    name: str = field(default='', compare=False)


@dataclass(frozen=True)
class CmcPresentation:
    object_generators: FinSet
    morphism_generators: Tuple[MorphismGenerator, ...]
    object_names: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'morphism_generators', tuple(self.morphism_generators))
        for gen in self.morphism_generators:
            if gen.source.base != self.object_generators or gen.target.base != self.object_generators:
                raise InvalidStructure("generator boundary is not over the object generators")

    @property
    def points(self) -> FinSet:
        return self.object_generators

    @property
    def arrows(self) -> FinSet:
        return FinSet(len(self.morphism_generators))

    @property
    def src_ends(self) -> Tuple[Multiset, ...]:
        return tuple(g.source for g in self.morphism_generators)

    @property
    def tgt_ends(self) -> Tuple[Multiset, ...]:
        return tuple(g.target for g in self.morphism_generators)

    @property
    def decorations(self) -> Tuple[None, ...]:
        return (None,) * len(self.morphism_generators)


class PresentationMap(TwoSortedMorphism):
    """Generator maps: object generators by ``g``, morphism generators by ``f``."""


class CmcInstance(PetriInstance):
    name = 'cmc'
    morphism_class = PresentationMap

    def build(self, points, arrows, src_ends, tgt_ends, decorations):
        return CmcPresentation(points, tuple(MorphismGenerator(s, t) for s, t in zip(src_ends, tgt_ends)))


CMC = register_instance(CmcInstance())


def petri_to_cmc(p: PetriNet, place_names: Sequence[str] = (), transition_names: Sequence[str] = ()) -> CmcPresentation:
    names = list(transition_names) or [''] * p.transitions.size
    return CmcPresentation(
        p.places,
        tuple(MorphismGenerator(s, t, name) for s, t, name in zip(p.src, p.tgt, names)),
        tuple(place_names),
    )


def petri_morphism_to_cmc(m: PetriMorphism) -> PresentationMap:
    return PresentationMap(petri_to_cmc(m.dom), petri_to_cmc(m.cod), m.f, m.g)


def petri_cmc_square() -> SquareData:
    """Open(F): identity on interfaces, ``petri_to_cmc`` on apexes, alpha the identity."""
    return SquareData(
        source=PETRI,
        target=CMC,
        object_map=lambda a: a,
        function_map=lambda f: f,
        apex_map=petri_to_cmc,
        morphism_map=petri_morphism_to_cmc,
        alpha=lambda a: CMC.identity(CMC.discrete(a)),
    )


# Terms

@dataclass(frozen=True)
class Generator:
    index: int


@dataclass(frozen=True)
class Identity:
    object: Multiset


@dataclass(frozen=True)
class Tensor:
    left: 'CmcTerm'
    right: 'CmcTerm'


@dataclass(frozen=True)
class Compose:
    """``first`` then ``second``."""

    first: 'CmcTerm'
    second: 'CmcTerm'


CmcTerm = Union[Generator, Identity, Tensor, Compose]


def term_boundary(t: CmcTerm, pres: CmcPresentation) -> Tuple[Multiset, Multiset]:
    if isinstance(t, Generator):
        if not 0 <= t.index < len(pres.morphism_generators):
            raise IndexOutOfRange(f"generator {t.index} not in a presentation with {len(pres.morphism_generators)}")
        gen = pres.morphism_generators[t.index]
        return gen.source, gen.target
    if isinstance(t, Identity):
        if t.object.base != pres.object_generators:
            raise MismatchedBoundary("identity object is not over the object generators")
        return t.object, t.object
    if isinstance(t, Tensor):
        s1, t1 = term_boundary(t.left, pres)
        s2, t2 = term_boundary(t.right, pres)
        return s1 + s2, t1 + t2
    if isinstance(t, Compose):
        s1, t1 = term_boundary(t.first, pres)
        s2, t2 = term_boundary(t.second, pres)
        if t1 != s2:
            raise IllTypedCompose(f"composite ends at {list(t1.counts)} but continues from {list(s2.counts)}")
        return s1, t2
    raise InvalidStructure(f"not a term: {t!r}")


def map_term(t: CmcTerm, m: PresentationMap) -> CmcTerm:
    """Apply a generator map, preserving identities, tensors and composites."""
    if isinstance(t, Generator):
        return Generator(m.f(t.index))
    if isinstance(t, Identity):
        return Identity(t.object.pushforward(m.g))
    if isinstance(t, Tensor):
        return Tensor(map_term(t.left, m), map_term(t.right, m))
    if isinstance(t, Compose):
        return Compose(map_term(t.first, m), map_term(t.second, m))
    raise InvalidStructure(f"not a term: {t!r}")


# Firing and reachability

def enabled(p: PetriNet, marking: Multiset, transition: int) -> bool:
    return marking.covers(p.src[transition])


def fire(p: PetriNet, marking: Multiset, transition: int) -> Optional[Multiset]:
    """The marking after firing ``transition`` once, or None if it is not enabled."""
    if not 0 <= transition < p.transitions.size:
        raise IndexOutOfRange(f"transition {transition} not in a net with {p.transitions.size}")
    if not enabled(p, marking, transition):
        return None
    return marking - p.src[transition] + p.tgt[transition]


def replay(p: PetriNet, marking: Multiset, sequence: Sequence[int]) -> Multiset:
    for step, transition in enumerate(sequence):
        after = fire(p, marking, transition)
        if after is None:
            raise InvalidStructure(f"transition {transition} is not enabled at step {step}")
        marking = after
    return marking


class ReachabilityResult(NamedTuple):
    found: bool
    sequence: Optional[Tuple[int, ...]]
    states_visited: int
    truncated: bool


def search_firing_sequence(
    p: PetriNet, start: Multiset, goal: Multiset, max_steps: int, max_states: Optional[int] = None
) -> ReachabilityResult:
    """Breadth-first search over markings, one firing per step, transitions tried in index order."""
    if start.base != p.places or goal.base != p.places:
        raise MismatchedBoundary("markings must be over the places of the net")
    parents: Dict[Multiset, Tuple[Optional[Multiset], Optional[int]]] = {start: (None, None)}
    queue = deque([(start, 0)])
    truncated = False
    found = start == goal
    while queue and not found:
        marking, depth = queue.popleft()
        if depth == max_steps:
            continue
        for transition in range(p.transitions.size):
            after = fire(p, marking, transition)
            if after is None or after in parents:
                continue
            if max_states is not None and len(parents) >= max_states:
                truncated = True
                break
            parents[after] = (marking, transition)
            if after == goal:
                found = True
                break
            queue.append((after, depth + 1))
        if truncated:
            logger.warning(f"Reachability search stopped after {len(parents)} markings")
            break
    logger.debug(f"Reachability search visited {len(parents)} markings, found={found}")
    if not found:
        return ReachabilityResult(False, None, len(parents), truncated)
    sequence = []
    marking = goal
    while parents[marking][0] is not None:
        marking, transition = parents[marking]
        sequence.append(transition)
    return ReachabilityResult(True, tuple(reversed(sequence)), len(parents), truncated)


def find_firing_sequence(p: PetriNet, start: Multiset, goal: Multiset, max_steps: int) -> Optional[Tuple[int, ...]]:
    return search_firing_sequence(p, start, goal, max_steps).sequence


def reachable(p: PetriNet, start: Multiset, goal: Multiset, max_steps: int) -> bool:
    return search_firing_sequence(p, start, goal, max_steps).found


def witness_term(p: PetriNet, start: Multiset, sequence: Sequence[int]) -> CmcTerm:
    """A term whose boundary is ``(start, replay(start, sequence))``: each step fires one generator beside an identity."""
    term: CmcTerm = Identity(start)
    marking = start
    for step, transition in enumerate(sequence):
        after = fire(p, marking, transition)
        if after is None:
            raise InvalidStructure(f"transition {transition} is not enabled at step {step}")
        move = Tensor(Generator(transition), Identity(marking - p.src[transition]))
        term = move if step == 0 else Compose(term, move)
        marking = after
    return term
