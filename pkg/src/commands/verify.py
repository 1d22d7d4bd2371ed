from pathlib import Path

from src.commands.common import order
from src.exceptions import InvalidWordError
from src.services import storage
from src.services.verifier import coverage, summary, verify_shortened


def register(subparsers) -> None:
    parser = subparsers.add_parser('verify', help='check that a cyclic word is a (shortened) universal cycle')
    parser.add_argument('--n', type=order, required=True, help='order of the permutations')
    parser.add_argument('--i', type=int, default=None, help='expected number of compressed twin cycles')
    parser.add_argument('--file', type=Path, required=True,
                        help='plain or JSON cycle; a run of at least n digits without commas is one letter per digit')
    parser.set_defaults(handler=handle, parser=parser)


def handle(args) -> int:
    """
    The handle function prints a coverage report for the cycle in the file.

    :param args: Namespace: Parsed arguments
    :return: 0 when every permutation is covered exactly once (and the length matches --i), 1 otherwise
    """
    try:
        letters = storage.read_letters(args.file, args.n)
    except OSError as err:
        args.parser.error(f'cannot read {args.file}: {err.strerror}')
    except InvalidWordError as err:
        args.parser.error(err.detail)
    if len(letters) < args.n:
        print(f'verdict: FAILED (cycle of length {len(letters)} is shorter than n={args.n})')
        return 1

    report = coverage(letters, args.n)
    print(summary(report))
    if args.i is None:
        return 0 if report.verdict else 1
    shortened = verify_shortened(letters, args.n, args.i)
    print(f"shortened by {args.i * (args.n - 1)}: {'ok' if shortened else 'FAILED'}")
    return 0 if shortened else 1
