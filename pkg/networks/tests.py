import json
import tempfile
from pathlib import Path

from django.core.cache import cache
from django.test import SimpleTestCase, override_settings

from core.cospans import canonical_form, find_cospan_isomorphism
from core.exceptions import DocumentError

from .documents import (
    NetworkDocument,
    canonicalize,
    compose_documents,
    document_payload,
    identity_document,
    parse,
    print_document,
    tensor_documents,
)
from .dot import export_dot
from .serializers import GraphApexSerializer, NetworkDocumentSerializer
from .services import NetworkFileService


def graph_document(**overrides):
    doc = {
        'format_version': '1.0',
        'instance': 'graph',
        'foot_in': 1,
        'foot_out': 1,
        'apex': {'nodes': 2, 'edges': [[0, 1]]},
        'leg_in': [0],
        'leg_out': [1],
    }
    doc.update(overrides)
    return doc


def petri_document(transitions, instance='petri'):
    return {
        'format_version': '1.0',
        'instance': instance,
        'foot_in': 0,
        'foot_out': 0,
        'apex': {'places': ['A', 'B'], 'transitions': transitions},
        'leg_in': [],
        'leg_out': [],
    }


class SerializerTests(SimpleTestCase):
    def test_envelope(self):
        serializer = NetworkDocumentSerializer(data=graph_document())
        self.assertTrue(serializer.is_valid(), serializer.errors)

        serializer = NetworkDocumentSerializer(data=graph_document(leg_in=[0, 1]))
        self.assertFalse(serializer.is_valid())
        self.assertIn('leg_in', serializer.errors)

    def test_edge_out_of_range_keeps_its_code(self):
        serializer = GraphApexSerializer(data={'nodes': 2, 'edges': [[0, 1], [1, 2]]})
        self.assertFalse(serializer.is_valid())
        self.assertEqual(serializer.errors['edges'][1][0].code, 'index-out-of-range')

    def test_edges_have_two_ends(self):
        serializer = GraphApexSerializer(data={'nodes': 2, 'edges': [[0, 1, 1]]})
        self.assertFalse(serializer.is_valid())


class ParseTests(SimpleTestCase):
    def assertRejected(self, payload, code, path):
        text = payload if isinstance(payload, str) else json.dumps(payload)
        with self.assertRaises(DocumentError) as ctx:
            parse(text)
        self.assertEqual((ctx.exception.code, ctx.exception.path), (code, path))

    def test_graph(self):
        doc = parse(json.dumps(graph_document()))
        self.assertEqual(doc.instance, 'graph')
        self.assertIsNone(doc.point_names)
        self.assertEqual(doc.cospan.apex.edges.size, 1)

    def test_malformed_json(self):
        self.assertRejected('{"instance": ', 'malformed-json', '$')
        self.assertRejected('[]', 'schema-violation', '$')

    def test_schema_violations(self):
        self.assertRejected({'size': -1}, 'schema-violation', '$.format_version')
        self.assertRejected(graph_document(instance='cmc'), 'schema-violation', '$.instance')
        self.assertRejected(graph_document(format_version='2.0'), 'schema-violation', '$.format_version')
        self.assertRejected(graph_document(foot_out=2), 'schema-violation', '$.leg_out')

    def test_index_out_of_range(self):
        self.assertRejected(graph_document(leg_out=[2]), 'index-out-of-range', '$.leg_out[0]')
        self.assertRejected(
            graph_document(apex={'nodes': 2, 'edges': [[0, 1], [0, 5]]}), 'index-out-of-range', '$.apex.edges[1]'
        )
        self.assertRejected(
            petri_document([{'in': {'C': 1}, 'out': {}}]), 'index-out-of-range', '$.apex.transitions[0].in.C'
        )

    def test_duplicate_names(self):
        apex = {'nodes': 2, 'edges': [], 'node_names': ['x', 'x']}
        self.assertRejected(graph_document(apex=apex), 'duplicate-name', '$.apex.node_names[1]')

    def test_markup_in_names(self):
        apex = {'nodes': 2, 'edges': [], 'node_names': ['x', '<i>y</i>']}
        self.assertRejected(graph_document(apex=apex), 'schema-violation', '$.apex.node_names[1]')

    def test_rates(self):
        self.assertRejected(
            petri_document([{'in': {'A': 1}, 'out': {'B': 1}}], 'petri_rates'),
            'schema-violation',
            '$.apex.transitions[0].rate',
        )
        self.assertRejected(
            petri_document([{'in': {'A': 1}, 'out': {'B': 1}, 'rate': '0'}], 'petri_rates'),
            'schema-violation',
            '$.apex.transitions[0].rate',
        )
        doc = parse(json.dumps(petri_document([{'in': {'A': 1}, 'out': {'B': 1}, 'rate': '3/2'}], 'petri_rates')))
        self.assertEqual(str(doc.apex.rates[0]), '3/2')
        self.assertEqual(doc.arrow_names, ('t0',))

    def test_default_transition_names_avoid_given_ones(self):
        doc = parse(json.dumps(petri_document([{'in': {'A': 1}, 'out': {}}, {'name': 't0', 'in': {}, 'out': {'B': 1}}])))
        self.assertEqual(doc.arrow_names, ("t0'", 't0'))
        self.assertEqual(parse(print_document(doc)).arrow_names, doc.arrow_names)

    def test_numeric_labels_are_read_as_rationals(self):
        def lgraph(*labels):
            apex = {'nodes': 2, 'edges': [[0, 1]] * len(labels), 'labels': list(labels)}
            return parse(json.dumps(graph_document(instance='lgraph', apex=apex)))

        half, decimal = lgraph('1/2'), lgraph('0.5')
        self.assertEqual(half.apex.labels, decimal.apex.labels)
        self.assertIsNotNone(find_cospan_isomorphism(half.cospan, decimal.cospan))
        self.assertEqual(lgraph('a').apex.labels, ('a',))
        self.assertIn('"2"', print_document(lgraph('2/1')))

    def test_fixtures_print_back_unchanged(self):
        for name in NetworkFileService.list_fixtures():
            text = (NetworkFileService.FIXTURES_DIR / f"{name}.json").read_text(encoding='utf-8')
            with self.subTest(fixture=name):
                self.assertEqual(print_document(parse(text)), text)


class DocumentOperationTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_key_order(self):
        payload = document_payload(identity_document('graph', 1))
        self.assertEqual(
            list(payload), ['format_version', 'instance', 'foot_in', 'foot_out', 'apex', 'leg_in', 'leg_out']
        )

    def test_petri_documents_are_always_named(self):
        doc = identity_document('petri', 2)
        self.assertEqual(doc.point_names, ('p0', 'p1'))
        self.assertEqual(doc.arrow_names, ())

    def test_name_count_must_match(self):
        cospan = identity_document('graph', 2).cospan
        with self.assertRaises(DocumentError):
            NetworkDocument(cospan, point_names=('only',))

    def test_mismatched_instances(self):
        with self.assertRaises(DocumentError) as ctx:
            tensor_documents(identity_document('graph', 1), identity_document('petri', 1))
        self.assertEqual(ctx.exception.code, 'mismatched-instance')

    def test_graph_composition_carries_names(self):
        e5 = NetworkFileService.fixture('open_graph_e5')
        doc = compose_documents(e5, identity_document('graph', 1))
        self.assertEqual(doc.point_names, e5.point_names)
        self.assertEqual(doc.arrow_names, e5.arrow_names)

    def test_unnamed_side_gets_default_names(self):
        e5 = NetworkFileService.fixture('open_graph_e5')
        doc = tensor_documents(identity_document('graph', 1), e5)
        self.assertEqual(doc.point_names, ('n0', 'n1', 'n2', 'n3', 'n4'))

    def test_canonical_output(self):
        e6 = NetworkFileService.fixture('open_graph_e6')
        doc = canonicalize(e6)
        self.assertEqual(doc.cospan, canonical_form(e6.cospan))
        self.assertIsNotNone(find_cospan_isomorphism(e6.cospan, doc.cospan))
        self.assertEqual(sorted(doc.arrow_names), sorted(e6.arrow_names))
        self.assertEqual(compose_documents(e6, identity_document('graph', 1), canonical=True).cospan, doc.cospan)


class DotTests(SimpleTestCase):
    def test_identity(self):
        dot = export_dot(identity_document('graph', 2))
        self.assertTrue(dot.startswith('digraph open_network {\n  rankdir=LR;\n'))
        self.assertIn('  in0 -> p0 [style=dotted, arrowhead=none];', dot)
        self.assertIn('  out1 -> p1 [style=dotted, arrowhead=none];', dot)
        self.assertIn('  p0 [shape=circle, label="0"];', dot)
        self.assertTrue(dot.endswith('}\n'))

    @override_settings(COSPAN_DOT_RANKDIR='TB')
    def test_water(self):
        dot = export_dot(NetworkFileService.fixture('water'))
        self.assertIn('rankdir=TB;', dot)
        self.assertIn('  t0 [shape=square, label="alpha (1)"];', dot)
        self.assertEqual(dot.count('  p0 -> t0;'), 2)
        self.assertEqual(dot.count('  t0 -> p2;'), 1)

    def test_labelled_edges(self):
        dot = export_dot(NetworkFileService.fixture('series_resistors'))
        self.assertIn('  p0 -> p1 [label="0: 1"];', dot)


class FileServiceTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_list_fixtures(self):
        self.assertEqual(
            NetworkFileService.list_fixtures(),
            ['dissociation', 'open_graph_e5', 'open_graph_e6', 'series_resistors', 'water'],
        )

    def test_save_then_load(self):
        doc = NetworkFileService.fixture('water')
        with tempfile.TemporaryDirectory() as tmp:
            path = NetworkFileService.save(doc, Path(tmp) / 'nested' / 'water.json')
            loaded = NetworkFileService.load(path)
            self.assertEqual(loaded, doc)
            self.assertEqual(NetworkFileService.load(path), loaded)

    def test_missing_file(self):
        with self.assertRaises(DocumentError) as ctx:
            NetworkFileService.load('/nonexistent/network.json')
        self.assertEqual(ctx.exception.code, 'malformed-json')

    def test_schema_file_is_json(self):
        schema = json.loads(NetworkFileService.SCHEMA_FILE.read_text(encoding='utf-8'))
        self.assertTrue(set(schema['$defs']).issuperset({'graph', 'lgraph', 'petri', 'petri_rates'}))
