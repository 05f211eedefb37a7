from core.commands import SubcommandBase
from core.exceptions import MismatchedBoundary
from core.validators import InputValidator

from dynamics.mass_action import integrate, is_steady, vector_field
from networks.services import NetworkFileService


class Command(SubcommandBase):
    help = 'Mass-action dynamics of Petri nets with rates'

    actions = {
        'eval': 'Evaluate the vector field at a concentration',
        'steady': 'Decide whether a concentration is a steady state',
        'euler': 'Take explicit Euler steps from a concentration',
    }

    def _add_common(self, parser):
        parser.add_argument('document', help='Path to a petri_rates document')
        parser.add_argument('--at', required=True, help='Concentration, e.g. "H:1,O:1,H2O:0"')

    add_eval_arguments = _add_common
    add_steady_arguments = _add_common

    def add_euler_arguments(self, parser):
        self._add_common(parser)
        parser.add_argument('--h', dest='step', default='1/10', help='Step size, e.g. 1/2')
        parser.add_argument('--steps', type=int, default=10, help='Number of steps')

    def _load(self, document, at):
        doc = NetworkFileService.load(document)
        if doc.instance != 'petri_rates':
            raise MismatchedBoundary(f"dynamics need a petri_rates document, got {doc.instance}")
        return doc, InputValidator.parse_assignments(at, doc.point_names)

    def _format(self, names, values):
        return ', '.join(f"{name}={value}" for name, value in zip(names, values))

    def handle_eval(self, document, at, **options):
        doc, x = self._load(document, at)
        for name, value in zip(doc.point_names, vector_field(doc.apex, x)):
            self.stdout.write(f"{name}: {value}")

    def handle_steady(self, document, at, **options):
        doc, x = self._load(document, at)
        self.stdout.write(f"steady: {'true' if is_steady(doc.apex, x) else 'false'}")

    def handle_euler(self, document, at, step='1/10', steps=10, **options):
        doc, x = self._load(document, at)
        h = InputValidator.validate_positive_fraction(step)
        self.stdout.write(f"step 0: {self._format(doc.point_names, x)}")
        for i, result in enumerate(integrate(doc.apex, x, h, steps), start=1):
            suffix = ' (clamped)' if result.clamped else ''
            self.stdout.write(f"step {i}: {self._format(doc.point_names, result.concentration)}{suffix}")
