"""
Base class for the subcommand-style management commands.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from .exceptions import CospanError

logger = logging.getLogger(__name__)


class SubcommandBase(BaseCommand):
    """
    A command with one required action, e.g. ``cospan compose A.json B.json``.

    Subclasses list ``actions`` as ``{name: help}`` and provide
    ``add_<name>_arguments(parser)`` and ``handle_<name>(**options)``.
    Domain errors become ``CommandError`` with exit status 1.
    """

    requires_system_checks = []
    requires_migrations_checks = False
    actions = {}

    @staticmethod
    def _method_suffix(action):
        return action.replace('-', '_')

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='action', required=True, metavar='ACTION')
        for action, help_text in self.actions.items():
            sub = subparsers.add_parser(action, help=help_text)
            getattr(self, f"add_{self._method_suffix(action)}_arguments")(sub)

    def handle(self, *args, **options):
        action = options['action']
        handler = getattr(self, f"handle_{self._method_suffix(action)}")
        try:
            handler(**options)
        except CospanError as e:
            logger.warning(f"{self.__module__.rsplit('.', 1)[-1]} {action} failed: {e}")
            raise CommandError(str(e), returncode=1)

    def emit(self, text, output=None):
        """Write ``text`` to ``output`` when given, else to stdout."""
        if output:
            with open(output, 'w', encoding='utf-8') as f:
                f.write(text)
            self.stdout.write(self.style.SUCCESS(f"Wrote {output}"))
        else:
            self.stdout.write(text, ending='')
