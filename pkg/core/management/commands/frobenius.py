from django.core.management.base import CommandError

from core.commands import SubcommandBase
from core.finset import FinSet
from core.hypergraph import check_frobenius, tensor_compatibility
from core.instances import INSTANCES, get_instance


class Command(SubcommandBase):
    help = 'Check the special commutative Frobenius laws on an object of an instance'

    actions = {
        'check': 'Report each Frobenius law on L(n)',
    }

    def add_check_arguments(self, parser):
        parser.add_argument('--instance', default='graph', choices=sorted(INSTANCES), help='Instance category')
        parser.add_argument('--size', type=int, default=1, help='Size of the object')
        parser.add_argument(
            '--with-size', type=int, dest='other_size', help='Also check compatibility with tensoring by this size'
        )

    def handle_check(self, instance='graph', size=1, other_size=None, **options):
        X = get_instance(instance)
        a = FinSet(size)
        report = check_frobenius(X, a)
        results = list(report.results)
        if other_size is not None:
            results += tensor_compatibility(X, a, FinSet(other_size))

        self.stdout.write(f"Frobenius laws on L({size}) in {X.name}:")
        for result in results:
            status = self.style.SUCCESS('pass') if result.passed else self.style.ERROR('FAIL')
            self.stdout.write(f"  {result.name}: {status}")

        failures = [r.name for r in results if not r.passed]
        if failures:
            raise CommandError(f"law-failure: {', '.join(failures)}", returncode=1)
        self.stdout.write('all laws hold')
