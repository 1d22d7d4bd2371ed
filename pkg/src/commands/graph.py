import argparse
from pathlib import Path

from src.commands.common import cycle_ids, fail, order
from src.core.cluster_graph import build_cluster_graph, build_P_star, compress, remove_tour, twin_cycles
from src.exceptions import GraphError, OrderError
from src.services.dot import render_dot
from src.services.pipeline import choose_cycles
from src.services.storage import write_text


def compression(value: str) -> int | list[int]:
    if ',' in value:
        return cycle_ids(value)
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected a count or an id list: {value!r}')


def register(subparsers) -> None:
    parser = subparsers.add_parser('graph', help='export a (compressed) cluster graph as DOT')
    parser.add_argument('--n', type=order, required=True, help='order of the permutations')
    parser.add_argument('--compress', type=compression, default=0,
                        help='number of canonical twin cycles to compress, or a comma-separated id list')
    parser.add_argument('--remove-pstar', action='store_true', help='delete the edges of P*')
    parser.add_argument('--dot', type=Path, required=True, help='output DOT file')
    parser.set_defaults(handler=handle, parser=parser)


def handle(args) -> int:
    """
    The handle function writes the cluster graph, optionally compressed and without P*, to a DOT file.
    Edges of P* are drawn blue and dashed.

    :param args: Namespace: Parsed arguments
    :return: Exit status
    """
    G = build_cluster_graph(args.n)
    try:
        if isinstance(args.compress, list):
            chosen = choose_cycles(G, len(args.compress), args.compress)
        elif 0 <= args.compress <= len(twin_cycles(G)):
            chosen = choose_cycles(G, args.compress)
        else:
            raise OrderError(f'--compress must lie in 0..{len(twin_cycles(G))}')
    except OrderError as err:
        args.parser.error(err.detail)

    star = build_P_star(args.n) if args.n >= 4 else None
    if args.remove_pstar and star is None:
        args.parser.error('--remove-pstar requires n >= 4')
    try:
        G = compress(G, chosen)
        if args.remove_pstar:
            G = remove_tour(G, star)
    except GraphError as err:
        return fail(err.detail)
    try:
        write_text(args.dot, render_dot(G, highlight=star))
    except OSError as err:
        args.parser.error(f'cannot write {args.dot}: {err.strerror}')
    return 0
