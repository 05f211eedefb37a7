from core.commands import SubcommandBase

from circuits.blackbox import blackbox
from circuits.relations import resistor_relation
from networks.services import NetworkFileService


class Command(SubcommandBase):
    help = 'Black-box resistor circuits into linear relations'

    actions = {
        'blackbox': 'Print the port behaviour of a circuit document',
        'relation': 'Print the relation of a single resistor',
    }

    def add_blackbox_arguments(self, parser):
        parser.add_argument('document', help='Path to an lgraph document whose labels are resistances')

    def add_relation_arguments(self, parser):
        parser.add_argument('--resistor', required=True, help='Resistance, e.g. 3/2')

    def handle_blackbox(self, document, **options):
        doc = NetworkFileService.load(document)
        self.stdout.write(str(blackbox(doc.cospan)))

    def handle_relation(self, resistor, **options):
        self.stdout.write(str(resistor_relation(resistor)))
