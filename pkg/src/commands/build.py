import json
import logging
from pathlib import Path

from src.commands.common import cycle_ids, fail, order
from src.exceptions import ConstructionError, GraphError, OrderError
from src.services import storage
from src.services.pipeline import build_all, build_shortened_ucycle

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser('build', help='build a verified shortened universal cycle')
    parser.add_argument('--n', type=order, required=True, help='order of the permutations')
    which = parser.add_mutually_exclusive_group(required=True)
    which.add_argument('--i', type=int, help='number of twin cycles to compress, 0..(n-2)!')
    which.add_argument('--all-i', action='store_true', help='build every i in 0..(n-2)!')
    parser.add_argument('--seed', type=int, default=None, help='seed for a random Eulerian circuit')
    parser.add_argument('--cycles', type=cycle_ids, default=None,
                        help='comma-separated twin cycle ids to compress instead of the first i')
    parser.add_argument('--format', choices=['plain', 'json'], default='plain')
    parser.add_argument('--out', type=Path, default=None, help='output file (default: stdout)')
    parser.set_defaults(handler=handle, parser=parser)


def handle(args) -> int:
    """
    The handle function runs the build subcommand: one cycle, or one per i with --all-i.

    :param args: Namespace: Parsed arguments
    :return: Exit status, 0 on a verified build
    """
    if args.all_i and args.cycles is not None:
        args.parser.error('--cycles cannot be combined with --all-i')
    try:
        if args.all_i:
            results = build_all(args.n, seed=args.seed)
        else:
            results = [(args.i, build_shortened_ucycle(args.n, args.i, selection=args.cycles, seed=args.seed))]
    except OrderError as err:
        args.parser.error(err.detail)
    except (ConstructionError, GraphError) as err:
        logger.error('build failed for n=%d: %s', args.n, err.detail)
        return fail(err.detail)

    if args.format == 'json':
        documents = [storage.to_document(args.n, i, letters).model_dump() for i, letters in results]
        text = json.dumps(documents if args.all_i else documents[0]) + '\n'
    else:
        text = ''.join(storage.to_plain(letters) for _, letters in results)
    try:
        storage.write_text(args.out, text)
    except OSError as err:
        args.parser.error(f'cannot write {args.out}: {err.strerror}')
    return 0
