
from core.commands import SubcommandBase
from core.cospans import find_cospan_isomorphism
from core.instances import INSTANCES

from networks.documents import (
    check_instances,
    compose_documents,
    identity_document,
    print_document,
    tensor_documents,
)
from networks.dot import export_dot
from networks.serializers import DOCUMENT_INSTANCES
from networks.services import NetworkFileService


class Command(SubcommandBase):
    help = 'Compose, tensor, compare and draw open network documents'

    actions = {
        'compose': 'Glue two open networks along the middle foot',
        'tensor': 'Place two open networks side by side',
        'iso': 'Decide whether two open networks are isomorphic',
        'id': 'Print the identity open network on a foot',
        'export-dot': 'Render an open network as Graphviz DOT',
    }

    def _add_binary(self, parser):
        parser.add_argument('first', help='Path to the first document')
        parser.add_argument('second', help='Path to the second document')
        parser.add_argument('-o', '--output', help='Write the result here instead of stdout')
        parser.add_argument(
            '--canonical', action='store_true', help='Print the isomorphism class representative'
        )

    add_compose_arguments = _add_binary
    add_tensor_arguments = _add_binary

    def add_iso_arguments(self, parser):
        parser.add_argument('first', help='Path to the first document')
        parser.add_argument('second', help='Path to the second document')

    def add_id_arguments(self, parser):
        parser.add_argument('-n', '--size', type=int, required=True, help='Size of the foot')
        parser.add_argument(
            '--instance',
            default='graph',
            choices=[name for name in DOCUMENT_INSTANCES if name in INSTANCES],
            help='Instance category of the apex',
        )
        parser.add_argument('-o', '--output', help='Write the result here instead of stdout')

    def add_export_dot_arguments(self, parser):
        parser.add_argument('document', help='Path to the document')
        parser.add_argument('-o', '--output', help='Write the DOT text here instead of stdout')
        parser.add_argument('--rankdir', choices=['LR', 'RL', 'TB', 'BT'], help='Graphviz layout direction')

    def handle_compose(self, first, second, output=None, canonical=False, **options):
        d1, d2 = NetworkFileService.load(first), NetworkFileService.load(second)
        self.emit(print_document(compose_documents(d1, d2, canonical=canonical)), output)

    def handle_tensor(self, first, second, output=None, canonical=False, **options):
        d1, d2 = NetworkFileService.load(first), NetworkFileService.load(second)
        self.emit(print_document(tensor_documents(d1, d2, canonical=canonical)), output)

    def handle_iso(self, first, second, **options):
        d1, d2 = NetworkFileService.load(first), NetworkFileService.load(second)
        check_instances(d1, d2)
        iso = find_cospan_isomorphism(d1.cospan, d2.cospan)
        if iso is None:
            self.stdout.write('not isomorphic')
            return
        points = ', '.join(f"{d1.point_label(p)} -> {d2.point_label(iso.f.g(p))}" for p in range(iso.f.g.dom.size))
        arrows = ', '.join(f"{d1.arrow_label(e)} -> {d2.arrow_label(iso.f.f(e))}" for e in range(iso.f.f.dom.size))
        self.stdout.write('isomorphic')
        self.stdout.write(f"points: {points}")
        self.stdout.write(f"arrows: {arrows}")

    def handle_id(self, size, instance='graph', output=None, **options):
        document = identity_document(instance, size)
        self.emit(print_document(document), output)

    def handle_export_dot(self, document, output=None, rankdir=None, **options):
        doc = NetworkFileService.load(document)
        self.emit(export_dot(doc, rankdir=rankdir), output)
