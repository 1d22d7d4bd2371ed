import logging
from math import factorial
from typing import Sequence

from src.core.cluster_graph import (
    ClusterGraph,
    build_cluster_graph,
    build_P_prime,
    compress,
    remove_tour,
    twin_cycles,
)
from src.core.euler import eulerian_circuit
from src.core.glue import glue
from src.core.models import TwinCycle
from src.core.perm_core import Word
from src.core.word_builder import check_word, relabel_canonical, trail_to_word
from src.exceptions import ConstructionError, OrderError, UCycleError
from src.services.verifier import coverage, summary, verify_shortened

logger = logging.getLogger(__name__)

SMALL_CYCLES: dict[int, Word] = {
    0: (1, 4, 5, 2, 4, 3),
    1: (1, 2, 3, 2),
}


def max_shortening(n: int) -> int:
    return factorial(n - 2)


def choose_cycles(G: ClusterGraph, i: int, selection: Sequence[int] | None = None) -> list[TwinCycle]:
    """
    The choose_cycles function picks the twin cycles to compress: the first i in canonical order,
    or the explicitly selected ids.

    :param G: ClusterGraph: The uncompressed cluster graph
    :param i: int: How many cycles to compress
    :param selection: Sequence[int] | None: Optional explicit cycle ids
    :return: The chosen cycles
    """
    cycles = twin_cycles(G)
    if selection is None:
        return cycles[:i]
    if len(selection) != i:
        raise OrderError(f'{len(selection)} cycle ids selected for i={i}')
    if len(set(selection)) != len(selection):
        raise OrderError('cycle ids repeat')
    for cycle_id in selection:
        if not 0 <= cycle_id < len(cycles):
            raise OrderError(f'cycle id {cycle_id} out of range 0..{len(cycles) - 1}')
    return [cycles[cycle_id] for cycle_id in selection]


def build_shortened_ucycle(n: int,
                           i: int,
                           selection: Sequence[int] | None = None,
                           seed: int | None = None) -> Word:
    """
    The build_shortened_ucycle function runs the whole construction: cluster graph, twin cycles, compression,
    P', removal of the P' tour, Eulerian circuit from the decreasing cluster, trail to word, glue and canonical
    relabeling. The result is verified before it is returned.

    :param n: int: The order, at least 3
    :param i: int: The number of twin cycles to compress, 0 <= i <= (n-2)!
    :param selection: Sequence[int] | None: Explicit twin cycle ids instead of the first i
    :param seed: int | None: Seed for a random Eulerian circuit
    :return: A cyclic word of length n! - i(n-1) over 1..m
    """
    if n < 3:
        raise OrderError('order too small')
    if not 0 <= i <= max_shortening(n):
        raise OrderError(f'i must lie in 0..{max_shortening(n)} for n={n}')

    if n == 3:
        if selection is not None:
            if len(selection) != i:
                raise OrderError(f'{len(selection)} cycle ids selected for i={i}')
            if list(selection) != list(range(i)):
                raise OrderError('order 3 has a single twin cycle with id 0')
        z = SMALL_CYCLES[i]
    else:
        G = build_cluster_graph(n)
        chosen = choose_cycles(G, i, selection)
        compressed = compress(G, chosen)
        family = build_P_prime(n, chosen)
        remaining = remove_tour(compressed, family)
        logger.debug('n=%d i=%d: %d edges left after removing %d members of P\'',
                     n, i, remaining.number_of_edges(), len(family))
        start = tuple(range(n - 1, 0, -1))
        try:
            trail = eulerian_circuit(remaining, start, seed=seed)
        except UCycleError as err:
            raise ConstructionError(f'construction invariant violated: {err.detail}') from err
        w = trail_to_word(trail, n)
        check_word(w, trail, n)
        logger.debug('trail of %d edges gives a word of %d letters', len(trail), len(w))
        z = relabel_canonical(glue(w, family, n))

    if not verify_shortened(z, n, i):
        logger.error('verification failed for n=%d i=%d\n%s', n, i, summary(coverage(z, n)))
        raise ConstructionError('construction invariant violated')
    logger.info('built a verified cycle of length %d for n=%d i=%d', len(z), n, i)
    return z


def build_all(n: int, seed: int | None = None) -> list[tuple[int, Word]]:
    """
    The build_all function builds the cycle for every i in 0..(n-2)!.

    :param n: int: The order
    :param seed: int | None: Seed passed to every build
    :return: (i, cycle) pairs in increasing i
    """
    if n < 3:
        raise OrderError('order too small')
    return [(i, build_shortened_ucycle(n, i, seed=seed)) for i in range(max_shortening(n) + 1)]
