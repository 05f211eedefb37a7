"""
In-process entry point for the command-line tools.

``run(['cospan', 'compose', 'a.json', 'b.json'])`` behaves like
``manage.py cospan compose a.json b.json`` but returns the exit status:
0 on success, 1 on a domain error, 2 on a usage error.
"""

import logging
import sys
from typing import Optional, Sequence, TextIO

from django.core.management import load_command_class
from django.core.management.base import CommandError, handle_default_options

logger = logging.getLogger(__name__)

COMMANDS = {
    'cospan': 'networks',
    'frobenius': 'core',
    'circuit': 'circuits',
    'petri': 'petri',
    'dynamics': 'dynamics',
}


def usage() -> str:
    return f"usage: cospan-tools {{{','.join(COMMANDS)}}} ..."


def run(argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(argv)
    if not argv or argv[0] not in COMMANDS:
        stderr.write(usage() + "\n")
        return 2

    name = argv[0]
    command = load_command_class(COMMANDS[name], name)
    # argparse errors exit with status 2 instead of raising CommandError
    command._called_from_command_line = True
    parser = command.create_parser('cospan-tools', name)
    try:
        options = parser.parse_args(argv[1:])
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    cmd_options = vars(options)
    args = cmd_options.pop('args', ())
    handle_default_options(options)
    cmd_options.update(stdout=stdout, stderr=stderr)
    try:
        command.execute(*args, **cmd_options)
    except CommandError as e:
        stderr.write(f"{e}\n")
        return e.returncode
    logger.info(f"{name} {cmd_options.get('action', '')} finished")
    return 0
