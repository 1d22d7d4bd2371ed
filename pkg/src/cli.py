import argparse
import logging
import logging.config
import sys

from src.commands import build, graph, plot, verify
from src.config.config import settings

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool = False) -> None:
    """
    The configure_logging function loads the logging configuration file when there is one and falls back to a
    plain stderr handler otherwise.

    :param verbose: bool: Log everything from DEBUG up
    :return: None
    """
    if settings.logging_config.is_file():
        logging.config.fileConfig(str(settings.logging_config), disable_existing_loggers=False)
    else:
        logging.basicConfig(format='%(levelname)-5.5s [%(name)s] %(message)s', stream=sys.stderr)
    logging.getLogger('src').setLevel(logging.DEBUG if verbose else settings.log_level.upper())


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='ucycle',
        description='Shortened universal cycles for permutations: build, verify, export and plot.',
    )
    parser.add_argument('--verbose', '-v', action='store_true', help='log every construction stage')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for command in (build, verify, graph, plot):
        command.register(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    return args.handler(args)
