"""
Skeletal finite sets and functions with chosen finite colimits.

A finite set of size n has elements 0..n-1. Coproducts place the second summand
after the first; pushouts and coequalizers number their classes in ascending
order of least member. These choices make every colimit an ordinary value that
can be compared, hashed and serialized.
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple, Sequence, Tuple

from .exceptions import IndexOutOfRange, InvalidStructure, MismatchedBoundary, NonCommutingCocone, NotInvertible


@dataclass(frozen=True)
class FinSet:
    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 0:
            raise InvalidStructure(f"FinSet size must be a natural number, got {self.size!r}")

    def __iter__(self):
        return iter(range(self.size))

    def __len__(self):
        return self.size


@dataclass(frozen=True)
class FinFunction:
    dom: FinSet
    cod: FinSet
    map: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'map', tuple(self.map))
        if len(self.map) != self.dom.size:
            raise InvalidStructure(
                f"function table has {len(self.map)} entries for a domain of size {self.dom.size}"
            )
        for value in self.map:
            if not 0 <= value < self.cod.size:
                raise IndexOutOfRange(f"value {value} outside codomain of size {self.cod.size}")

    def __call__(self, element: int) -> int:
        return self.map[element]

    @classmethod
    def from_list(cls, values: Sequence[int], cod: int) -> 'FinFunction':
        return cls(FinSet(len(values)), FinSet(cod), tuple(values))

    @classmethod
    def identity(cls, a: FinSet) -> 'FinFunction':
        return cls(a, a, tuple(range(a.size)))

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return set(self.map) == set(range(self.cod.size))

    def is_bijective(self) -> bool:
        return self.dom.size == self.cod.size and self.is_injective()


class Coproduct(NamedTuple):
    apex: FinSet
    left: FinFunction
    right: FinFunction


class Coequalizer(NamedTuple):
    apex: FinSet
    quotient: FinFunction


class Pushout(NamedTuple):
    """A chosen pushout of the span ``b <-f- a -g-> c``."""

    apex: FinSet
    left: FinFunction
    right: FinFunction
    span: Tuple[FinFunction, FinFunction]
    merges: int


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by rank."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size
        self.merges = 0

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.merges += 1
        return True

    def classes(self) -> Tuple[int, Tuple[int, ...]]:
        """Number classes by first appearance, i.e. ascending least member."""
        numbering = {}
        labels = []
        for x in range(len(self.parent)):
            root = self.find(x)
            if root not in numbering:
                numbering[root] = len(numbering)
            labels.append(numbering[root])
        return len(numbering), tuple(labels)


def compose(g: FinFunction, f: FinFunction) -> FinFunction:
    """The composite ``g . f`` (apply f first)."""
    if f.cod != g.dom:
        raise MismatchedBoundary(f"cannot compose: codomain {f.cod.size} is not domain {g.dom.size}")
    return FinFunction(f.dom, g.cod, tuple(g.map[x] for x in f.map))


def initial() -> FinSet:
    return FinSet(0)


def initial_map(b: FinSet) -> FinFunction:
    """The unique function from the empty set."""
    return FinFunction(FinSet(0), b, ())


def coproduct(a: FinSet, b: FinSet) -> Coproduct:
    apex = FinSet(a.size + b.size)
    left = FinFunction(a, apex, tuple(range(a.size)))
    right = FinFunction(b, apex, tuple(range(a.size, a.size + b.size)))
    return Coproduct(apex, left, right)


def copair(f: FinFunction, g: FinFunction) -> FinFunction:
    """The mediating map ``f + g -> cod`` out of the chosen coproduct."""
    if f.cod != g.cod:
        raise MismatchedBoundary(f"cannot copair into codomains {f.cod.size} and {g.cod.size}")
    return FinFunction(FinSet(f.dom.size + g.dom.size), f.cod, f.map + g.map)


def coproduct_map(f: FinFunction, g: FinFunction) -> FinFunction:
    """``f + g : a + b -> c + d``."""
    target = coproduct(f.cod, g.cod)
    return copair(compose(target.left, f), compose(target.right, g))


def fold(a: FinSet) -> FinFunction:
    """The codiagonal ``a + a -> a``."""
    identity = FinFunction.identity(a)
    return copair(identity, identity)


def swap(a: FinSet, b: FinSet) -> FinFunction:
    """The block swap ``a + b -> b + a``."""
    target = coproduct(b, a)
    return copair(target.right, target.left)


def coequalizer(f: FinFunction, g: FinFunction) -> Coequalizer:
    """Quotient of the common codomain by the relation generated by f(x) ~ g(x)."""
    if f.dom != g.dom or f.cod != g.cod:
        raise MismatchedBoundary("coequalizer needs a parallel pair")
    classes = UnionFind(f.cod.size)
    for x in range(f.dom.size):
        classes.union(f(x), g(x))
    size, labels = classes.classes()
    apex = FinSet(size)
    return Coequalizer(apex, FinFunction(f.cod, apex, labels))


def pushout(f: FinFunction, g: FinFunction) -> Pushout:
    """The chosen pushout of ``b <-f- a -g-> c``."""
    if f.dom != g.dom:
        raise MismatchedBoundary(f"span feet differ: {f.dom.size} and {g.dom.size}")
    summed = coproduct(f.cod, g.cod)
    classes = UnionFind(summed.apex.size)
    for x in range(f.dom.size):
        classes.union(summed.left(f(x)), summed.right(g(x)))
    size, labels = classes.classes()
    apex = FinSet(size)
    quotient = FinFunction(summed.apex, apex, labels)
    return Pushout(
        apex=apex,
        left=compose(quotient, summed.left),
        right=compose(quotient, summed.right),
        span=(f, g),
        merges=classes.merges,
    )


def pushout_mediator(po: Pushout, h_b: FinFunction, h_c: FinFunction) -> FinFunction:
    """The unique ``u`` with ``u . left = h_b`` and ``u . right = h_c``."""
    f, g = po.span
    if h_b.dom != f.cod or h_c.dom != g.cod:
        raise MismatchedBoundary("cocone legs do not start at the pushout's feet")
    if h_b.cod != h_c.cod:
        raise MismatchedBoundary(f"cocone legs end in {h_b.cod.size} and {h_c.cod.size}")
    values = [None] * po.apex.size
    for leg, h in ((po.left, h_b), (po.right, h_c)):
        for x in range(leg.dom.size):
            cls = leg(x)
            if values[cls] is None:
                values[cls] = h(x)
            elif values[cls] != h(x):
                raise NonCommutingCocone(f"class {cls} is sent to both {values[cls]} and {h(x)}")
    return FinFunction(po.apex, h_b.cod, tuple(values))


def inverse(f: FinFunction) -> FinFunction:
    if not f.is_bijective():
        raise NotInvertible(f"function {list(f.map)} is not a bijection")
    values = [0] * f.dom.size
    for x, y in enumerate(f.map):
        values[y] = x
    return FinFunction(f.cod, f.dom, tuple(values))


def hom_set(a: FinSet, b: FinSet) -> Iterator[FinFunction]:
    """Every function a -> b, in lexicographic order of tables."""
    for table in product(range(b.size), repeat=a.size):
        yield FinFunction(a, b, table)
