import logging
from typing import Sequence

from src.core.models import Trail
from src.core.perm_core import Word, reduce
from src.exceptions import ConstructionError

logger = logging.getLogger(__name__)


def trail_to_word(T: Trail, n: int) -> Word:
    """
    The trail_to_word function turns a trail of a (compressed) cluster graph into a word whose i-th n-window
    reduces to the label of the i-th edge. The word grows one letter per edge: a compressed edge repeats the
    first letter of the new window; a plain edge picks the rank x of its last entry, shifts every letter
    >= x up by one, which keeps all earlier windows order-isomorphic, and appends x.

    :param T: Trail: A nonempty head-to-tail trail
    :param n: int: The order of the labels
    :return: A word of length len(T) + n - 1
    """
    labels = T.labels
    if not labels:
        raise ConstructionError('empty trail')
    for label in labels:
        if label.order != n:
            raise ConstructionError(f'label {label} does not have order {n}')
    for before, after in zip(labels, labels[1:]):
        if before.target != after.source:
            raise ConstructionError(f'inconsistent trail: {before} is not followed by {after}')

    word = list(labels[0].letters)
    for label in labels[1:]:
        a = label.letters
        tail = word[len(word) - n + 1:]
        if label.is_compressed:
            word.append(tail[0])
            continue
        if a[-1] == n:
            x = max(word) + 1
        else:
            x = tail[a.index(a[-1] + 1)]
            word = [letter + 1 if letter >= x else letter for letter in word]
        word.append(x)
    return tuple(word)


def relabel_canonical(w: Sequence[int]) -> Word:
    return reduce(w)


def check_word(w: Sequence[int], T: Trail, n: int) -> None:
    """
    The check_word function asserts the trail-to-word postcondition window by window.

    :param w: Sequence[int]: A word built from T
    :param T: Trail: The trail
    :param n: int: The order
    :return: None
    """
    if len(w) != len(T) + n - 1:
        raise ConstructionError(f'word of length {len(w)} for a trail of {len(T)} edges')
    for index, label in enumerate(T.labels):
        if reduce(w[index:index + n]) != label.letters:
            raise ConstructionError(f'window {index} does not reduce to {label}')
