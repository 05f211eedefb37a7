from django.conf import settings

from core.commands import SubcommandBase
from core.exceptions import MismatchedBoundary
from core.instances import Multiset
from core.validators import InputValidator

from networks.services import NetworkFileService
from petri.cmc import petri_to_cmc, search_firing_sequence


def format_marking(m: Multiset, names) -> str:
    terms = [name if n == 1 else f"{n}*{name}" for name, n in zip(names, m.counts) if n]
    return ' + '.join(terms) or 'I'


def _marking(text, names, base) -> Multiset:
    values = InputValidator.parse_assignments(text, names, natural=True)
    return Multiset.from_mapping(base, dict(enumerate(values)))


class Command(SubcommandBase):
    help = 'Petri nets as free commutative monoidal categories'

    actions = {
        'to-cmc': 'Print the presentation of the category a net generates',
        'reachable': 'Search for a firing sequence between two markings',
    }

    def add_to_cmc_arguments(self, parser):
        parser.add_argument('document', help='Path to a petri or petri_rates document')

    def add_reachable_arguments(self, parser):
        parser.add_argument('document', help='Path to a petri or petri_rates document')
        parser.add_argument('--from', dest='start', required=True, help='Start marking, e.g. "H:4,O:2"')
        parser.add_argument('--to', dest='goal', required=True, help='Goal marking, e.g. "OH-:1,H3O+:1"')
        parser.add_argument('--max-steps', type=int, default=10, help='Longest firing sequence to consider')
        parser.add_argument('--max-states', type=int, help='Stop after visiting this many markings')

    def _load_net(self, path):
        doc = NetworkFileService.load(path)
        if doc.instance not in ('petri', 'petri_rates'):
            raise MismatchedBoundary(f"expected a Petri net document, got {doc.instance}")
        return doc

    def handle_to_cmc(self, document, **options):
        doc = self._load_net(document)
        pres = petri_to_cmc(doc.apex, doc.point_names, doc.arrow_names)
        self.stdout.write(f"objects: {', '.join(pres.object_names)}")
        self.stdout.write('generators:')
        for gen in pres.morphism_generators:
            source = format_marking(gen.source, pres.object_names)
            target = format_marking(gen.target, pres.object_names)
            self.stdout.write(f"  {gen.name}: {source} -> {target}")

    def handle_reachable(self, document, start, goal, max_steps=10, max_states=None, **options):
        doc = self._load_net(document)
        net = doc.apex
        if max_states is None:
            max_states = getattr(settings, 'COSPAN_REACHABILITY_MAX_STATES', 100000)
        result = search_firing_sequence(
            net,
            _marking(start, doc.point_names, net.places),
            _marking(goal, doc.point_names, net.places),
            max_steps,
            max_states,
        )
        if result.found:
            self.stdout.write('reachable: true')
            self.stdout.write(f"witness: {', '.join(doc.arrow_names[t] for t in result.sequence)}")
        elif result.truncated:
            self.stdout.write(f"reachable: false (inconclusive: stopped after {result.states_visited} markings)")
        else:
            self.stdout.write('reachable: false')
