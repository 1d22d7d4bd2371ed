from typing import Any, Sequence

from src.exceptions import InvalidWordError

Word = tuple[int, ...]
Permutation = tuple[int, ...]


def reduce(w: Sequence[Any]) -> tuple[int, ...]:
    """
    The reduce function replaces each copy of the i-th smallest letter of a word by i.
    Letters only need to be comparable, so tuples used as tie-breaking keys reduce as well.

    :param w: Sequence: The word to reduce
    :return: The reduced word, order-isomorphic to w
    """
    if not w:
        raise InvalidWordError('empty input')
    ranks = {letter: rank for rank, letter in enumerate(sorted(set(w)), start=1)}
    return tuple(ranks[letter] for letter in w)


def order_isomorphic(u: Sequence[int], v: Sequence[int]) -> bool:
    return len(u) == len(v) and reduce(u) == reduce(v)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def windows(w: Sequence[int], n: int) -> list[Word]:
    """
    The windows function lists the n-windows of a linear word from left to right.

    :param w: Sequence[int]: The word
    :param n: int: The window size
    :return: len(w) - n + 1 windows
    """
    if n < 1:
        raise InvalidWordError('window size must be positive')
    if n > len(w):
        raise InvalidWordError('window too large')
    w = tuple(w)
    return [w[start:start + n] for start in range(len(w) - n + 1)]


def cyclic_windows(z: Sequence[int], n: int) -> list[Word]:
    """
    The cyclic_windows function returns one n-window per cyclic index of z, wrapping around the end.

    :param z: Sequence[int]: The cyclic word
    :param n: int: The window size
    :return: len(z) windows, the j-th one starting at index j
    """
    if not z:
        raise InvalidWordError('empty input')
    if n < 1:
        raise InvalidWordError('window size must be positive')
    if n > len(z):
        raise InvalidWordError('window too large')
    doubled = tuple(z) + tuple(z[:n - 1])
    return [doubled[start:start + n] for start in range(len(z))]


def _resolve_tie(window: Word, first_below: bool) -> Permutation:
    first, last = (0, 1) if first_below else (1, 0)
    keys = [(letter, 0) for letter in window]
    keys[0] = (window[0], first)
    keys[-1] = (window[-1], last)
    return reduce(keys)


def covered_permutations(win: Sequence[int]) -> frozenset[Permutation]:
    """
    The covered_permutations function returns the permutations a single window covers.
    A window of distinct letters covers its reduction. A window whose first and last letters are equal,
    all other letters being distinct, holds incomparable elements at distance n-1 and covers both
    linear extensions, which are twins of each other.

    :param win: Sequence[int]: The window
    :return: One or two permutations
    """
    win = tuple(win)
    if not win:
        raise InvalidWordError('empty input')
    if len(set(win)) == len(win):
        return frozenset({reduce(win)})
    if len(win) >= 2 and win[0] == win[-1] and len(set(win[:-1])) == len(win) - 1:
        return frozenset({_resolve_tie(win, True), _resolve_tie(win, False)})
    raise InvalidWordError('unsupported incomparability pattern')


def covers(w: Sequence[int], n: int) -> set[Permutation]:
    covered = set()
    for window in windows(w, n):
        covered |= covered_permutations(window)
    return covered


def twin_of(p: Sequence[int]) -> Permutation | None:
    """
    The twin_of function swaps the first and last entries of a permutation whose end entries differ by one.
    The swap keeps both the first n-1 and the last n-1 entries order-isomorphic, so the twin lies in the
    same cluster and points to the same target cluster.

    :param p: Sequence[int]: A permutation of 1..n, n >= 2
    :return: The twin, or None when |p_1 - p_n| != 1
    """
    p = tuple(p)
    if len(p) < 2 or not is_permutation(p):
        raise InvalidWordError('not a permutation')
    if abs(p[0] - p[-1]) != 1:
        return None
    return (p[-1],) + p[1:-1] + (p[0],)
