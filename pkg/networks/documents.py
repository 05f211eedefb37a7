"""
Open network documents: parsing, canonical printing and document-level composition.

A document is one structured cospan plus optional human-readable names for
its points (nodes or places) and arrows (edges or transitions). Names never
affect semantics; index order is the serialization order.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Tuple

from django.conf import settings
from rest_framework.settings import api_settings

from core.cospans import (
    StructuredCospan,
    canonical_form,
    find_cospan_isomorphism,
    hcompose_pushout,
    identity_cell,
    tensor_cells,
)
from core.exceptions import CospanError, DocumentError
from core.finset import FinFunction, FinSet
from core.instances import LGraph, Graph, PetriNet, PetriWithRates, get_instance, petri_net
from core.validators import InputValidator, validate_unique_names

from .serializers import APEX_SERIALIZERS, DOCUMENT_INSTANCES, NetworkDocumentSerializer

logger = logging.getLogger(__name__)

DOCUMENT_CODES = {'index-out-of-range', 'duplicate-name'}


def current_format_version() -> str:
    return getattr(settings, 'COSPAN_FORMAT_VERSION', '1.0')


def _is_petri(apex) -> bool:
    return isinstance(apex, (PetriNet, PetriWithRates))


def default_names(prefix: str, count: int) -> Tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(count))


@dataclass(frozen=True)
class NetworkDocument:
    cospan: StructuredCospan
    point_names: Optional[Tuple[str, ...]] = None
    arrow_names: Optional[Tuple[str, ...]] = None
    format_version: str = field(default_factory=current_format_version)

    def __post_init__(self):
        if self.instance not in DOCUMENT_INSTANCES:
            raise DocumentError(f"instance {self.instance!r} has no document format", path='$.instance')
        apex = self.cospan.apex
        # places are referenced by name in transitions, so Petri documents are always named
        if _is_petri(apex):
            if self.point_names is None:
                object.__setattr__(self, 'point_names', default_names('p', apex.points.size))
            if self.arrow_names is None:
                object.__setattr__(self, 'arrow_names', default_names('t', apex.arrows.size))
        for attr, size, path in (
            ('point_names', apex.points.size, self._names_path('points')),
            ('arrow_names', apex.arrows.size, self._names_path('arrows')),
        ):
            names = getattr(self, attr)
            if names is None:
                continue
            names = tuple(names)
            object.__setattr__(self, attr, names)
            if len(names) != size:
                raise DocumentError(f"{len(names)} names for {size} entries", path=path)
            validate_unique_names(names, path)

    def _names_path(self, sort: str) -> str:
        if _is_petri(self.cospan.apex):
            return '$.apex.places' if sort == 'points' else '$.apex.transitions'
        return '$.apex.node_names' if sort == 'points' else '$.apex.edge_names'

    @property
    def instance(self) -> str:
        return self.cospan.instance.name

    @property
    def apex(self):
        return self.cospan.apex

    def point_label(self, p: int) -> str:
        return self.point_names[p] if self.point_names else str(p)

    def arrow_label(self, e: int) -> str:
        return self.arrow_names[e] if self.arrow_names else str(e)


# Parsing

def _first_error(errors, path: str):
    """Walk DRF's nested error structure to the first leaf: ``(path, message, code)``."""
    if isinstance(errors, str):
        return path, str(errors), getattr(errors, 'code', None)
    if isinstance(errors, dict):
        for key, value in errors.items():
            if key == api_settings.NON_FIELD_ERRORS_KEY:
                sub = path
            elif isinstance(key, int):
                sub = f"{path}[{key}]"
            else:
                sub = f"{path}.{key}"
            found = _first_error(value, sub)
            if found:
                return found
        return None
    if isinstance(errors, list):
        if errors and all(isinstance(e, str) for e in errors):
            return _first_error(errors[0], path)
        for i, value in enumerate(errors):
            if value:
                found = _first_error(value, f"{path}[{i}]")
                if found:
                    return found
    return None


def _validated(serializer_class, data, path: str) -> dict:
    serializer = serializer_class(data=data)
    if serializer.is_valid():
        return serializer.validated_data
    where, message, code = _first_error(serializer.errors, path) or (path, "invalid document", None)
    raise DocumentError(message, code=code if code in DOCUMENT_CODES else 'schema-violation', path=where)


def _check_version(version: str):
    expected = current_format_version()
    if version.split('.')[0] != expected.split('.')[0]:
        raise DocumentError(
            f"format version {version} is not readable by {expected}", path='$.format_version'
        )


def _names(values: Iterable[str], path: str) -> Tuple[str, ...]:
    names = []
    for i, value in enumerate(values):
        try:
            names.append(InputValidator.sanitize_name(value))
        except CospanError as e:
            raise DocumentError(e.message, path=f"{path}[{i}]")
    return validate_unique_names(tuple(names), path)


def _graph_apex(data: dict, labelled: bool):
    edges = [tuple(edge) for edge in data['edges']]
    if labelled:
        apex = LGraph.from_edges(data['nodes'], edges, [InputValidator.normalize_label(label) for label in data['labels']])
    else:
        apex = Graph.from_edges(data['nodes'], edges)
    node_names = _names(data['node_names'], '$.apex.node_names') if 'node_names' in data else None
    edge_names = _names(data['edge_names'], '$.apex.edge_names') if 'edge_names' in data else None
    return apex, node_names, edge_names


def _transition_names(values: Sequence[Optional[str]]) -> Tuple[str, ...]:
    """Given names are kept; unnamed transitions get ``t<i>``, primed past any name already taken."""
    path = '$.apex.transitions'
    names = []
    for i, value in enumerate(values):
        if value is None:
            names.append(None)
            continue
        try:
            names.append(InputValidator.sanitize_name(value))
        except CospanError as e:
            raise DocumentError(e.message, path=f"{path}[{i}]")
    validate_unique_names(names, path)

    taken = {name for name in names if name is not None}
    for i, name in enumerate(names):
        if name is None:
            name = f"t{i}"
            while name in taken:
                name += "'"
            taken.add(name)
            names[i] = name
    return tuple(names)


def _petri_apex(data: dict, with_rates: bool):
    places = _names(data['places'], '$.apex.places')
    index = {name: i for i, name in enumerate(data['places'])}
    transitions, names, rates = [], [], []
    for i, transition in enumerate(data['transitions']):
        path = f"$.apex.transitions[{i}]"
        transitions.append((
            {index[place]: count for place, count in transition['in'].items()},
            {index[place]: count for place, count in transition['out'].items()},
        ))
        names.append(transition.get('name'))
        if with_rates:
            try:
                rates.append(InputValidator.validate_positive_fraction(transition['rate']))
            except CospanError as e:
                raise DocumentError(e.message, path=f"{path}.rate")
    net = petri_net(len(places), transitions)
    apex = PetriWithRates(net, rates) if with_rates else net
    return apex, places, _transition_names(names)


def parse(text) -> NetworkDocument:
    """
    Read a document from JSON text.

    Raises:
        DocumentError: malformed-json, schema-violation, index-out-of-range or
            duplicate-name, with the JSON path of the first violation
    """
    try:
        payload = json.loads(text)
    except (TypeError, ValueError) as e:
        raise DocumentError(f"not valid JSON: {e}", code='malformed-json')
    if not isinstance(payload, dict):
        raise DocumentError("a document is a JSON object")

    envelope = _validated(NetworkDocumentSerializer, payload, '$')
    _check_version(envelope['format_version'])
    instance = envelope['instance']
    data = _validated(APEX_SERIALIZERS[instance], envelope['apex'], '$.apex')

    if instance in ('graph', 'lgraph'):
        apex, point_names, arrow_names = _graph_apex(data, labelled=instance == 'lgraph')
    else:
        apex, point_names, arrow_names = _petri_apex(data, with_rates=instance == 'petri_rates')

    points = apex.points.size
    for leg in ('leg_in', 'leg_out'):
        for k, image in enumerate(envelope[leg]):
            if image >= points:
                raise DocumentError(
                    f"point {image} outside an apex of {points} points", code='index-out-of-range', path=f"$.{leg}[{k}]"
                )

    cospan = StructuredCospan.from_maps(
        get_instance(instance),
        apex,
        FinFunction.from_list(envelope['leg_in'], points),
        FinFunction.from_list(envelope['leg_out'], points),
    )
    logger.debug(f"Parsed {instance} document with {points} points and {apex.arrows.size} arrows")
    return NetworkDocument(cospan, point_names, arrow_names, envelope['format_version'])


# Printing

def _apex_payload(doc: NetworkDocument) -> dict:
    apex = doc.apex
    if _is_petri(apex):
        transitions = []
        for t in range(apex.transitions.size):
            entry = {
                'name': doc.arrow_names[t],
                'in': {doc.point_names[p]: n for p, n in enumerate(apex.src[t].counts) if n},
                'out': {doc.point_names[p]: n for p, n in enumerate(apex.tgt[t].counts) if n},
            }
            if isinstance(apex, PetriWithRates):
                entry['rate'] = str(apex.rates[t])
            transitions.append(entry)
        return {'places': list(doc.point_names), 'transitions': transitions}

    payload = {
        'nodes': apex.nodes.size,
        'edges': [[apex.src(e), apex.tgt(e)] for e in range(apex.edges.size)],
    }
    if isinstance(apex, LGraph):
        payload['labels'] = [str(label) for label in apex.labels]
    if doc.point_names is not None:
        payload['node_names'] = list(doc.point_names)
    if doc.arrow_names is not None:
        payload['edge_names'] = list(doc.arrow_names)
    return payload


def document_payload(doc: NetworkDocument) -> dict:
    c = doc.cospan
    return {
        'format_version': doc.format_version,
        'instance': doc.instance,
        'foot_in': c.foot_in.size,
        'foot_out': c.foot_out.size,
        'apex': _apex_payload(doc),
        'leg_in': list(c.leg_in.g.map),
        'leg_out': list(c.leg_out.g.map),
    }


def print_document(doc: NetworkDocument) -> str:
    """Canonical text: fixed key order, two-space indent, trailing newline."""
    return json.dumps(document_payload(doc), indent=2, ensure_ascii=False) + "\n"


# Document-level operations

def _carried_names(
    size: int, parts: Sequence[Tuple[Optional[Sequence[str]], int, Callable[[int], int]]], prefix: str
) -> Optional[Tuple[str, ...]]:
    """
    Names for a colimit apex, taken from its parts in order.

    Each part is ``(names, count, leg)``. A class keeps the first name that
    reaches it; an unglued name already in use gets a trailing prime.
    """
    if all(names is None for names, _, _ in parts):
        return None
    carried, taken = [None] * size, set()
    for names, count, leg in parts:
        names = names if names is not None else default_names(prefix, count)
        for k, name in enumerate(names):
            j = leg(k)
            if carried[j] is not None:
                continue
            while name in taken:
                name += "'"
            carried[j] = name
            taken.add(name)
    return tuple(carried)


def _prefixes(doc: NetworkDocument) -> Tuple[str, str]:
    return ('p', 't') if _is_petri(doc.apex) else ('n', 'e')


def check_instances(d1: NetworkDocument, d2: NetworkDocument):
    if d1.instance != d2.instance:
        raise DocumentError(
            f"cannot combine a {d1.instance} document with a {d2.instance} document",
            code='mismatched-instance',
            path='$.instance',
        )


def canonicalize(doc: NetworkDocument) -> NetworkDocument:
    """Replace the cospan by its iso-class representative, carrying the names across."""
    canonical = canonical_form(doc.cospan)
    iso = find_cospan_isomorphism(doc.cospan, canonical)
    point_names = arrow_names = None
    if doc.point_names is not None:
        point_names = [None] * len(doc.point_names)
        for p, name in enumerate(doc.point_names):
            point_names[iso.f.g(p)] = name
    if doc.arrow_names is not None:
        arrow_names = [None] * len(doc.arrow_names)
        for e, name in enumerate(doc.arrow_names):
            arrow_names[iso.f.f(e)] = name
    return NetworkDocument(canonical, point_names, arrow_names, doc.format_version)


def compose_documents(d1: NetworkDocument, d2: NetworkDocument, canonical: bool = False) -> NetworkDocument:
    """Glue ``d1`` then ``d2`` along the output foot of ``d1``."""
    check_instances(d1, d2)
    cell, po = hcompose_pushout(d1.cospan, d2.cospan)
    point_prefix, arrow_prefix = _prefixes(d1)
    x1, x2 = d1.apex, d2.apex
    point_names = _carried_names(cell.apex.points.size, [
        (d1.point_names, x1.points.size, po.left.g),
        (d2.point_names, x2.points.size, po.right.g),
    ], point_prefix)
    arrow_names = _carried_names(cell.apex.arrows.size, [
        (d1.arrow_names, x1.arrows.size, po.left.f),
        (d2.arrow_names, x2.arrows.size, po.right.f),
    ], arrow_prefix)
    doc = NetworkDocument(cell, point_names, arrow_names)
    logger.info(f"Composed {d1.instance} documents into an apex of {cell.apex.points.size} points")
    return canonicalize(doc) if canonical else doc


def tensor_documents(d1: NetworkDocument, d2: NetworkDocument, canonical: bool = False) -> NetworkDocument:
    """Place ``d1`` and ``d2`` side by side."""
    check_instances(d1, d2)
    cell = tensor_cells(d1.cospan, d2.cospan)
    point_prefix, arrow_prefix = _prefixes(d1)
    x1, x2 = d1.apex, d2.apex
    n1, m1 = x1.points.size, x1.arrows.size
    point_names = _carried_names(cell.apex.points.size, [
        (d1.point_names, n1, lambda k: k),
        (d2.point_names, x2.points.size, lambda k: n1 + k),
    ], point_prefix)
    arrow_names = _carried_names(cell.apex.arrows.size, [
        (d1.arrow_names, m1, lambda k: k),
        (d2.arrow_names, x2.arrows.size, lambda k: m1 + k),
    ], arrow_prefix)
    doc = NetworkDocument(cell, point_names, arrow_names)
    return canonicalize(doc) if canonical else doc


def identity_document(instance: str, size: int) -> NetworkDocument:
    return NetworkDocument(identity_cell(get_instance(instance), FinSet(size)))
