import logging
from collections import Counter
from typing import Sequence

from src.core.models import PFamily
from src.core.perm_core import Word, covered_permutations, reduce, windows
from src.exceptions import ConstructionError

logger = logging.getLogger(__name__)


def glue(w: Sequence[int], Pp: PFamily, n: int) -> Word:
    """
    The glue function closes a word w, which starts and ends with a decreasing (n-1)-window, into a cyclic word z
    of length len(w) + n + 1. The n + 1 letters put in front of w make the windows around the seam cover the
    family P' in tour order, each twin pair of P' \\ P through a single window with equal end letters.

    :param w: Sequence[int]: A word covering each of its permutations once, none of them in P'
    :param Pp: PFamily: The family P', between P and P*
    :param n: int: The order, at least 4
    :return: The cyclic word z, starting at the construction's first letter
    """
    w = tuple(w)
    k = len(w)
    descending = tuple(range(n - 1, 0, -1))
    if n < 4:
        raise ConstructionError('glue requires n >= 4')
    if k < n - 1:
        raise ConstructionError(f'word too short: {k} < n - 1')
    if reduce(w[:n - 1]) != descending:
        raise ConstructionError('first (n-1)-window of w is not decreasing')
    if reduce(w[k - n + 1:]) != descending:
        raise ConstructionError('last (n-1)-window of w is not decreasing')
    if k >= n:
        covered = Counter(p for window in windows(w, n) for p in covered_permutations(window))
        if any(count > 1 for count in covered.values()):
            raise ConstructionError('w covers a permutation more than once')
        if set(covered) & set(Pp.members):
            raise ConstructionError("w covers a permutation of P'")

    low, high = min(w), max(w)
    head = [low - n - 1 + i for i in range(1, n)]
    z_n = high + 1
    if (2, n) + tuple(range(n - 1, 2, -1)) + (1,) in Pp:
        z_n1 = w[n - 2]
    else:
        z_n1 = head[-1] + 1
    if (n - 1, 1) + tuple(range(2, n - 1)) + (n,) in Pp:
        if k >= n and not w[-1] < min(w[k - n:k - 1]):
            raise ConstructionError('last letter of w is not below its window')
        last = head[-1]
    else:
        last = w[-1]
    z = tuple(head) + (z_n, z_n1) + w[:-1] + (last,)
    logger.debug('glued %d letters into a cycle of length %d', k, len(z))
    return z
