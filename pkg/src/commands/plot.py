from pathlib import Path

from src.commands.common import order
from src.exceptions import InvalidWordError
from src.services import storage
from src.services.plot import render_svg


def register(subparsers) -> None:
    parser = subparsers.add_parser('plot', help='draw a word or cycle in a grid as SVG')
    parser.add_argument('--n', type=order, required=True, help='window size')
    parser.add_argument('--file', type=Path, required=True,
                        help='plain or JSON word; a run of at least n digits without commas is one letter per digit')
    parser.add_argument('--svg', type=Path, required=True, help='output SVG file')
    parser.add_argument('--linear', action='store_true', help='treat the word as linear instead of cyclic')
    parser.set_defaults(handler=handle, parser=parser)


def handle(args) -> int:
    try:
        letters = storage.read_letters(args.file, args.n)
        svg = render_svg(letters, args.n, cyclic=not args.linear)
    except OSError as err:
        args.parser.error(f'cannot read {args.file}: {err.strerror}')
    except InvalidWordError as err:
        args.parser.error(err.detail)
    try:
        storage.write_text(args.svg, svg)
    except OSError as err:
        args.parser.error(f'cannot write {args.svg}: {err.strerror}')
    return 0
